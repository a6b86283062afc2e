#pragma once

#include "weylnorm/scalar.hpp"

#include <map>
#include <string>

namespace weylnorm {

/// a†^m a^n, m creation and n annihilation powers.
struct Monomial {
  unsigned m = 0;
  unsigned n = 0;

  unsigned degree() const { return m + n; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Descending total degree, then descending creation power.
struct RenderOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.m > b.m;
  }
};

/// Normal-ordered polynomial sum_{m,n} c_{mn} a†^m a^n with exact coefficients.
///
/// Zero coefficients are never stored; the zero polynomial is the empty map.
class NormalPoly {
 public:
  using Terms = std::map<Monomial, Scalar, RenderOrder>;

  NormalPoly() = default;
  static NormalPoly identity() { return monomial(0, 0, Scalar(1)); }
  static NormalPoly monomial(unsigned m, unsigned n, const Scalar& c);
  static NormalPoly creation() { return monomial(1, 0, Scalar(1)); }
  static NormalPoly annihilation() { return monomial(0, 1, Scalar(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a†^m a^n, zero when absent.
  Scalar coeff(unsigned m, unsigned n) const;

  void add_term(unsigned m, unsigned n, const Scalar& c);

  NormalPoly& operator+=(const NormalPoly& o);
  NormalPoly& operator-=(const NormalPoly& o);
  NormalPoly& operator*=(const Scalar& c);
  friend NormalPoly operator+(NormalPoly a, const NormalPoly& b) { return a += b; }
  friend NormalPoly operator-(NormalPoly a, const NormalPoly& b) { return a -= b; }
  friend NormalPoly operator*(NormalPoly a, const Scalar& c) { return a *= c; }
  friend NormalPoly operator*(const Scalar& c, NormalPoly a) { return a *= c; }
  /// Operator product, re-expressed in normal order.
  friend NormalPoly operator*(const NormalPoly& f, const NormalPoly& g);

  NormalPoly adjoint() const;

  /// Right-multiplication by a single a† or a, the workhorse of word expansion.
  NormalPoly times_creation() const;
  NormalPoly times_annihilation() const;

  friend bool operator==(const NormalPoly& a, const NormalPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NormalPoly& a, const NormalPoly& b) { return !(a == b); }

  std::string debug_string() const;

 private:
  Terms terms_;
};

inline NormalPoly np_add(const NormalPoly& f, const NormalPoly& g) { return f + g; }
inline NormalPoly np_mul(const NormalPoly& f, const NormalPoly& g) { return f * g; }
inline NormalPoly np_adjoint(const NormalPoly& f) { return f.adjoint(); }

}  // namespace weylnorm
