#include "weylnorm/weyl_enum.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace weylnorm {

namespace {

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

void enforce_cap(const char* what, unsigned requested, unsigned cap) {
  if (requested > cap) throw CapExceeded(what, requested, cap);
}

// prod_r (a† + s_r a) for fixed numeric signs.
NormalPoly signed_product(const SignSequence& signs) {
  NormalPoly acc = NormalPoly::identity();
  for (int s : signs) {
    NormalPoly next = acc.times_creation();
    if (s > 0) next += acc.times_annihilation();
    else next -= acc.times_annihilation();
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

CapExceeded::CapExceeded(const char* what, unsigned requested, unsigned limit)
    : std::runtime_error(std::string(what) + ": j+k = " + std::to_string(requested) + " exceeds cap " +
                         std::to_string(limit)),
      requested_(requested),
      limit_(limit) {}

std::vector<QPWord> distinct_orderings(const WeylSpec& spec) {
  QPWord word(spec.j, QP::Q);
  word.insert(word.end(), spec.k, QP::P);
  std::vector<QPWord> out;
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

NormalPoly weyl_bruteforce(const WeylSpec& spec) {
  const auto orderings = distinct_orderings(spec);
  NormalPoly sum;
  for (const auto& w : orderings) sum += expand_qp_word(w);
  return sum * Scalar(Rational(1, static_cast<long>(orderings.size())));
}

NormalPoly weyl_forced(const WeylSpec& spec, unsigned cap) {
  const unsigned n = spec.total();
  enforce_cap("forced-ordering enumeration", n, cap);
  SignSequence signs(spec.k, -1);
  signs.insert(signs.end(), spec.j, 1);  // ascending order for next_permutation
  NormalPoly sum;
  do {
    sum += signed_product(signs);
  } while (std::next_permutation(signs.begin(), signs.end()));
  Rational weight(factorial(spec.j) * factorial(spec.k), factorial(n));
  weight.canonicalize();
  return sum * (Scalar::i_pow(spec.k) * Scalar::inv_sqrt2_pow(n) * weight);
}

std::map<Monomial, SignPolynomial, RenderOrder> symbolic_sign_product(unsigned n) {
  if (n > 31) throw std::invalid_argument("symbolic_sign_product: at most 31 signs");
  using Slot = std::map<Monomial, SignPolynomial, RenderOrder>;
  Slot acc;
  acc[Monomial{0, 0}][0] = 1;
  for (unsigned r = 0; r < n; ++r) {
    Slot next;
    for (const auto& [mono, poly] : acc) {
      for (const auto& [mask, c] : poly) {
        // times a†: a†^m a^n a† = a†^{m+1} a^n + n a†^m a^{n-1}
        next[Monomial{mono.m + 1, mono.n}][mask] += c;
        if (mono.n > 0) next[Monomial{mono.m, mono.n - 1}][mask] += c * mono.n;
        // times s_r a
        next[Monomial{mono.m, mono.n + 1}][mask | (1u << r)] += c;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

mpz_class evaluate(const SignPolynomial& poly, const SignSequence& signs) {
  mpz_class total = 0;
  for (const auto& [mask, c] : poly) {
    int sign = 1;
    for (std::size_t r = 0; r < signs.size(); ++r)
      if (mask & (1u << r)) sign *= signs[r];
    total += sign * c;
  }
  return total;
}

EtaReport eta_decomposition_check(const WeylSpec& spec, unsigned u, unsigned v, unsigned cap) {
  const unsigned n = spec.total();
  enforce_cap("eta decomposition oracle", n, cap);
  if (2 * u + v > n) throw std::invalid_argument("eta_decomposition_check: need 2u+v <= j+k");

  EtaReport report;
  report.u = u;
  report.v = v;
  const auto slots = symbolic_sign_product(n);
  if (auto it = slots.find(Monomial{n - 2 * u - v, v}); it != slots.end()) report.eta = it->second;

  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    for (const auto& [mask, c] : report.eta) {
      std::uint32_t moved = 0;
      for (unsigned r = 0; r < n; ++r)
        if (mask & (1u << r)) moved |= 1u << perm[r];
      report.permutation_sum[moved] += c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(report.permutation_sum, [](const auto& kv) { return kv.second == 0; });

  report.lambda = lambda_factor(spec.j, spec.k, u, v);
  report.xi = xi_factor(spec.j, spec.k, u, v);
  report.zeta = zeta_sum(spec.j, spec.k, u + v);

  const Rational lambda_xi = Rational(report.lambda) * report.xi;
  const unsigned degree = u + v;
  report.symbolic_ok = lambda_xi.get_den() == 1;
  if (report.symbolic_ok) {
    SignPolynomial expected;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (static_cast<unsigned>(std::popcount(mask)) == degree) expected[mask] = lambda_xi.get_num();
    report.symbolic_ok = expected == report.permutation_sum;
  }

  SignSequence canonical(spec.j, 1);
  canonical.insert(canonical.end(), spec.k, -1);
  report.canonical_value = evaluate(report.permutation_sum, canonical);
  report.canonical_ok = Rational(report.canonical_value) == lambda_xi * Rational(report.zeta);
  return report;
}

}  // namespace weylnorm
