#pragma once

#include <gmpxx.h>

#include <string>

namespace weylnorm {

using Rational = mpq_class;

/// Exact element of Q(i, sqrt2), stored as (x_re + x_im i) + (y_re + y_im i) sqrt2.
///
/// Every component is kept canonical (lowest terms, positive denominator), so
/// equality is component-wise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : x_re_(v) {}
  Scalar(const Rational& v) : x_re_(v) { x_re_.canonicalize(); }
  Scalar(Rational x_re, Rational x_im, Rational y_re, Rational y_im);

  static Scalar imag_unit();
  static Scalar sqrt2();
  /// i^k for k >= 0.
  static Scalar i_pow(unsigned k);
  /// 2^{-n/2}; odd n lands in the sqrt2 component.
  static Scalar inv_sqrt2_pow(unsigned n);

  const Rational& x_re() const { return x_re_; }
  const Rational& x_im() const { return x_im_; }
  const Rational& y_re() const { return y_re_; }
  const Rational& y_im() const { return y_im_; }

  bool is_zero() const;
  bool is_real() const { return x_im_ == 0 && y_im_ == 0; }
  Scalar conj() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& r);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const Rational& r) { return a *= r; }
  friend Scalar operator*(const Rational& r, Scalar a) { return a *= r; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Debug form, e.g. "(1/2) + (0)i + (3/4)sqrt2 + (0)i sqrt2".
  std::string debug_string() const;

 private:
  Rational x_re_{0}, x_im_{0}, y_re_{0}, y_im_{0};
};

inline Scalar scalar_add(const Scalar& z, const Scalar& w) { return z + w; }
inline Scalar scalar_mul(const Scalar& z, const Scalar& w) { return z * w; }
inline Scalar scalar_conj(const Scalar& z) { return z.conj(); }

/// Canonical "num/den" text of a rational, denominator always present.
std::string rational_to_fraction(const Rational& r);

}  // namespace weylnorm
