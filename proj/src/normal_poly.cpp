#include "weylnorm/normal_poly.hpp"

#include <algorithm>
#include <sstream>

namespace weylnorm {

namespace {

// k! C(n,k) C(m,k), the number of ways to contract k pairs in a^n a†^m.
mpz_class contraction_count(unsigned n, unsigned m, unsigned k) {
  mpz_class cn, cm, f;
  mpz_bin_uiui(cn.get_mpz_t(), n, k);
  mpz_bin_uiui(cm.get_mpz_t(), m, k);
  mpz_fac_ui(f.get_mpz_t(), k);
  return cn * cm * f;
}

}  // namespace

NormalPoly NormalPoly::monomial(unsigned m, unsigned n, const Scalar& c) {
  NormalPoly p;
  p.add_term(m, n, c);
  return p;
}

Scalar NormalPoly::coeff(unsigned m, unsigned n) const {
  auto it = terms_.find(Monomial{m, n});
  return it == terms_.end() ? Scalar() : it->second;
}

void NormalPoly::add_term(unsigned m, unsigned n, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{m, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalPoly& NormalPoly::operator+=(const NormalPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono.m, mono.n, c);
  return *this;
}

NormalPoly& NormalPoly::operator-=(const NormalPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono.m, mono.n, -c);
  return *this;
}

NormalPoly& NormalPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, v] : terms_) v *= c;
  return *this;
}

NormalPoly operator*(const NormalPoly& f, const NormalPoly& g) {
  // (a†^m1 a^n1)(a†^m2 a^n2) = sum_k k! C(n1,k) C(m2,k) a†^{m1+m2-k} a^{n1+n2-k}
  NormalPoly out;
  for (const auto& [fm, fc] : f.terms_) {
    for (const auto& [gm, gc] : g.terms_) {
      const Scalar prod = fc * gc;
      const unsigned top = std::min(fm.n, gm.m);
      for (unsigned k = 0; k <= top; ++k) {
        out.add_term(fm.m + gm.m - k, fm.n + gm.n - k, prod * Rational(contraction_count(fm.n, gm.m, k)));
      }
    }
  }
  return out;
}

NormalPoly NormalPoly::adjoint() const {
  NormalPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(Monomial{mono.n, mono.m}, c.conj());
  return out;
}

NormalPoly NormalPoly::times_creation() const {
  // a†^m a^n a† = a†^{m+1} a^n + n a†^m a^{n-1}
  NormalPoly out;
  for (const auto& [mono, c] : terms_) {
    out.add_term(mono.m + 1, mono.n, c);
    if (mono.n > 0) out.add_term(mono.m, mono.n - 1, c * Rational(mono.n));
  }
  return out;
}

NormalPoly NormalPoly::times_annihilation() const {
  NormalPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(Monomial{mono.m, mono.n + 1}, c);
  return out;
}

std::string NormalPoly::debug_string() const {
  if (terms_.empty()) return "{}";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << ", ";
    first = false;
    os << "(" << mono.m << "," << mono.n << "): " << c.debug_string();
  }
  os << "}";
  return os.str();
}

}  // namespace weylnorm
