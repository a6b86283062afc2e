#include "weylnorm/scalar.hpp"

#include <sstream>
#include <utility>

namespace weylnorm {

Scalar::Scalar(Rational x_re, Rational x_im, Rational y_re, Rational y_im)
    : x_re_(std::move(x_re)), x_im_(std::move(x_im)), y_re_(std::move(y_re)), y_im_(std::move(y_im)) {
  x_re_.canonicalize();
  x_im_.canonicalize();
  y_re_.canonicalize();
  y_im_.canonicalize();
}

Scalar Scalar::imag_unit() { return Scalar(0, 1, 0, 0); }

Scalar Scalar::sqrt2() { return Scalar(0, 0, 1, 0); }

Scalar Scalar::i_pow(unsigned k) {
  switch (k % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar(0, 1, 0, 0);
    case 2: return Scalar(-1);
    default: return Scalar(0, -1, 0, 0);
  }
}

Scalar Scalar::inv_sqrt2_pow(unsigned n) {
  // 2^{-n/2} = 2^{-(n+1)/2} * sqrt2 for odd n.
  mpz_class den;
  if (n % 2 == 0) {
    mpz_ui_pow_ui(den.get_mpz_t(), 2, n / 2);
    return Scalar(Rational(mpz_class(1), den));
  }
  mpz_ui_pow_ui(den.get_mpz_t(), 2, (n + 1) / 2);
  return Scalar(0, 0, Rational(mpz_class(1), den), 0);
}

bool Scalar::is_zero() const { return x_re_ == 0 && x_im_ == 0 && y_re_ == 0 && y_im_ == 0; }

Scalar Scalar::conj() const { return Scalar(x_re_, -x_im_, y_re_, -y_im_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  x_re_ += o.x_re_;
  x_im_ += o.x_im_;
  y_re_ += o.y_re_;
  y_im_ += o.y_im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  x_re_ -= o.x_re_;
  x_im_ -= o.x_im_;
  y_re_ -= o.y_re_;
  y_im_ -= o.y_im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // Gaussian-rational parts: x = x_re + x_im i, y = y_re + y_im i.
  // (x1 + y1 sqrt2)(x2 + y2 sqrt2) = (x1 x2 + 2 y1 y2) + (x1 y2 + x2 y1) sqrt2.
  auto gmul = [](const Rational& ar, const Rational& ai, const Rational& br, const Rational& bi) {
    return std::pair<Rational, Rational>(ar * br - ai * bi, ar * bi + ai * br);
  };
  auto [xx_re, xx_im] = gmul(x_re_, x_im_, o.x_re_, o.x_im_);
  auto [yy_re, yy_im] = gmul(y_re_, y_im_, o.y_re_, o.y_im_);
  auto [xy_re, xy_im] = gmul(x_re_, x_im_, o.y_re_, o.y_im_);
  auto [yx_re, yx_im] = gmul(y_re_, y_im_, o.x_re_, o.x_im_);
  x_re_ = xx_re + 2 * yy_re;
  x_im_ = xx_im + 2 * yy_im;
  y_re_ = xy_re + yx_re;
  y_im_ = xy_im + yx_im;
  return *this;
}

Scalar& Scalar::operator*=(const Rational& r) {
  x_re_ *= r;
  x_im_ *= r;
  y_re_ *= r;
  y_im_ *= r;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(-x_re_, -x_im_, -y_re_, -y_im_); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.x_re_ == b.x_re_ && a.x_im_ == b.x_im_ && a.y_re_ == b.y_re_ && a.y_im_ == b.y_im_;
}

std::string Scalar::debug_string() const {
  std::ostringstream os;
  os << "(" << x_re_ << ") + (" << x_im_ << ")i + (" << y_re_ << ")sqrt2 + (" << y_im_ << ")i sqrt2";
  return os.str();
}

std::string rational_to_fraction(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace weylnorm
