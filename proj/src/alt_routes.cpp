#include "weylnorm/alt_routes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace weylnorm {

namespace {

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

NormalPoly cg_weyl_monomial(unsigned m, unsigned n) {
  NormalPoly out;
  for (unsigned l = 0; l <= std::min(m, n); ++l) {
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, l);
    Rational c(factorial(l) * binom(m, l) * binom(n, l), pow2);
    c.canonicalize();
    out.add_term(n - l, m - l, Scalar(c));
  }
  return out;
}

NormalPoly weyl_via_cg(const WeylSpec& spec) {
  // Commutative expansion of (a + a†)^j (a† - a)^k; key = power of a, the
  // power of a† being j+k minus it.
  std::vector<mpz_class> coeff{1};
  for (unsigned step = 0; step < spec.total(); ++step) {
    const bool is_q = step < spec.j;
    std::vector<mpz_class> next(coeff.size() + 1, 0);
    for (std::size_t a_pow = 0; a_pow < coeff.size(); ++a_pow) {
      next[a_pow] += coeff[a_pow];  // a† from either factor
      if (is_q) next[a_pow + 1] += coeff[a_pow];
      else next[a_pow + 1] -= coeff[a_pow];
    }
    coeff = std::move(next);
  }
  const Scalar prefactor = Scalar::i_pow(spec.k) * Scalar::inv_sqrt2_pow(spec.total());
  NormalPoly out;
  for (std::size_t a_pow = 0; a_pow < coeff.size(); ++a_pow) {
    if (coeff[a_pow] == 0) continue;
    const auto m = static_cast<unsigned>(a_pow);
    out += cg_weyl_monomial(m, spec.total() - m) * (prefactor * Rational(coeff[a_pow]));
  }
  return out;
}

std::vector<long> prefix_excess(const BosonString& x) {
  std::vector<long> d{0};
  for (std::size_t l = 0; l < x.blocks(); ++l)
    d.push_back(d.back() + static_cast<long>(x.r[l]) - static_cast<long>(x.s[l]));
  return d;
}

BosonString blockify(const BosonWord& w) {
  // Read left to right as (a†-run, a-run) pairs, then reverse so block 0 is rightmost.
  std::vector<std::pair<unsigned, unsigned>> left_to_right;
  std::size_t i = 0;
  do {
    unsigned r = 0, s = 0;
    while (i < w.size() && w[i] == Boson::Create) ++r, ++i;
    while (i < w.size() && w[i] == Boson::Annihilate) ++s, ++i;
    left_to_right.emplace_back(r, s);
  } while (i < w.size());
  BosonString x;
  for (auto it = left_to_right.rbegin(); it != left_to_right.rend(); ++it) {
    x.r.push_back(it->first);
    x.s.push_back(it->second);
  }
  return x;
}

BosonWord flatten(const BosonString& x) {
  BosonWord w;
  for (std::size_t l = x.blocks(); l-- > 0;) {
    w.insert(w.end(), x.r[l], Boson::Create);
    w.insert(w.end(), x.s[l], Boson::Annihilate);
  }
  return w;
}

mpz_class falling_factorial(long x, unsigned n) {
  mpz_class acc = 1;
  for (unsigned i = 0; i < n; ++i) acc *= x - static_cast<long>(i);
  return acc;
}

Rational blasiak_coeff(const std::vector<unsigned>& r, const std::vector<unsigned>& s, unsigned k) {
  if (r.size() != s.size()) throw std::invalid_argument("blasiak_coeff: r and s differ in length");
  const auto d = prefix_excess(BosonString{r, s});
  mpz_class acc = 0;
  for (unsigned j = 0; j <= k; ++j) {
    mpz_class prod = 1;
    for (std::size_t m = 0; m < s.size() && prod != 0; ++m) prod *= falling_factorial(d[m] + j, s[m]);
    mpz_class term = binom(k, j) * prod;
    if ((k - j) % 2 == 1) term = -term;
    acc += term;
  }
  Rational out(acc, factorial(k));
  out.canonicalize();
  return out;
}

NormalPoly blasiak_normal_order(const BosonString& x) {
  if (x.r.size() != x.s.size() || x.blocks() == 0)
    throw std::invalid_argument("blasiak_normal_order: need M >= 1 blocks with matching r and s");
  const long excess = prefix_excess(x).back();
  NormalPoly out;
  if (excess >= 0) {
    const unsigned total_s = std::accumulate(x.s.begin(), x.s.end(), 0u);
    for (unsigned k = x.s.front(); k <= total_s; ++k)
      out.add_term(static_cast<unsigned>(excess) + k, k, Scalar(blasiak_coeff(x.r, x.s, k)));
  } else {
    const std::vector<unsigned> r_rev(x.r.rbegin(), x.r.rend());
    const std::vector<unsigned> s_rev(x.s.rbegin(), x.s.rend());
    const unsigned total_r = std::accumulate(x.r.begin(), x.r.end(), 0u);
    for (unsigned k = x.r.back(); k <= total_r; ++k)
      out.add_term(k, static_cast<unsigned>(-excess) + k, Scalar(blasiak_coeff(s_rev, r_rev, k)));
  }
  return out;
}

}  // namespace weylnorm
