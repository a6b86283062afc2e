#include "weylnorm/weyl_closed.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace weylnorm {

namespace {

#ifdef NDEBUG
std::atomic<bool> g_verify{false};
#else
std::atomic<bool> g_verify{true};
#endif

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class pow2(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

void require_in_range(unsigned j, unsigned k, unsigned u, unsigned v) {
  if (2 * u + v > j + k) {
    throw std::invalid_argument("(u,v) = (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range: need 2u+v <= j+k = " + std::to_string(j + k));
  }
}

// Coefficients of (1+x)^j (1-x)^k, index = power of x.
std::vector<mpz_class> mixed_binomial_poly(unsigned j, unsigned k) {
  std::vector<mpz_class> c{1};
  for (unsigned step = 0; step < j + k; ++step) {
    const int sign = step < j ? 1 : -1;
    std::vector<mpz_class> next(c.size() + 1, 0);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d] += c[d];
      next[d + 1] += sign * c[d];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

mpz_class binom(long a, long b) {
  if (a < 0) throw std::invalid_argument("binom: negative upper argument " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

mpz_class lambda_factor(unsigned j, unsigned k, unsigned u, unsigned v) {
  if (u + v > j + k) throw std::invalid_argument("lambda_factor: u+v exceeds j+k");
  return factorial(j + k - u - v) * factorial(u + v);
}

Rational xi_factor(unsigned j, unsigned k, unsigned u, unsigned v) {
  require_in_range(j, k, u, v);
  Rational r(factorial(j + k), pow2(u) * factorial(u) * factorial(v) * factorial(j + k - 2 * u - v));
  r.canonicalize();
  return r;
}

mpz_class zeta_sum(unsigned j, unsigned k, unsigned t) {
  mpz_class acc = 0;
  for (unsigned m = 0; m <= t; ++m) {
    const mpz_class term = binom(j, static_cast<long>(t) - m) * binom(k, m);
    if (m % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

mpz_class zeta_poly(unsigned j, unsigned k, unsigned t) {
  if (t > j + k) return 0;
  return mixed_binomial_poly(j, k)[t];
}

mpz_class zeta_gamma(unsigned j, unsigned k, unsigned t) {
  auto g = [](long a, long b) { return a >= b ? 1 : 0; };
  // C(a,b) via factorials, evaluated only where the guard admits it.
  auto gamma = [&](long a, long b) -> mpz_class {
    if (b < 0 || !g(a, b)) return 0;
    return factorial(static_cast<unsigned>(a)) /
           (factorial(static_cast<unsigned>(b)) * factorial(static_cast<unsigned>(a - b)));
  };
  mpz_class acc = 0;
  for (long m = 0; m <= static_cast<long>(t); ++m) {
    const mpz_class term = gamma(j, static_cast<long>(t) - m) * gamma(k, m);
    acc += (m % 2 == 0) ? term : mpz_class(-term);
  }
  return acc;
}

mpz_class zeta_range(unsigned j, unsigned k, unsigned t) {
  const long lo = std::max<long>(0, static_cast<long>(t) - static_cast<long>(j));
  const long hi = std::min<long>(k, t);
  mpz_class acc = 0;
  for (long m = lo; m <= hi; ++m) {
    const mpz_class term = binom(j, static_cast<long>(t) - m) * binom(k, m);
    acc += (m % 2 == 0) ? term : mpz_class(-term);
  }
  return acc;
}

void set_verification_mode(bool on) { g_verify.store(on, std::memory_order_relaxed); }

bool verification_mode() { return g_verify.load(std::memory_order_relaxed); }

Scalar h_coeff(unsigned j, unsigned k, unsigned u, unsigned v) {
  require_in_range(j, k, u, v);
  const unsigned n = j + k;
  const mpz_class zeta = zeta_poly(j, k, u + v);
  if (verification_mode()) {
    const mpz_class check = zeta_sum(j, k, u + v);
    if (check != zeta) {
      throw std::logic_error("zeta mismatch at j=" + std::to_string(j) + " k=" + std::to_string(k) +
                             " t=" + std::to_string(u + v) + ": poly " + zeta.get_str() + " vs sum " +
                             check.get_str());
    }
  }
  if (zeta == 0) return Scalar();
  Rational combinatorial(factorial(u) * binom(n - u - v, u) * binom(u + v, u) * zeta, pow2(u));
  combinatorial.canonicalize();
  return Scalar::i_pow(k) * Scalar::inv_sqrt2_pow(n) * combinatorial;
}

bool operator==(const HCoeffTable& a, const HCoeffTable& b) {
  if (!(a.spec == b.spec)) return false;
  auto nonzero = [](const HCoeffTable& t) {
    std::map<std::pair<unsigned, unsigned>, Scalar> out;
    for (const auto& [key, c] : t.entries)
      if (!c.is_zero()) out.emplace(key, c);
    return out;
  };
  return nonzero(a) == nonzero(b);
}

HCoeffTable h_table(const WeylSpec& spec) {
  HCoeffTable table{spec, {}};
  const unsigned n = spec.total();
  for (unsigned u = 0; 2 * u <= n; ++u)
    for (unsigned v = 0; v <= n - 2 * u; ++v) table.entries.emplace(std::pair{u, v}, h_coeff(spec.j, spec.k, u, v));
  return table;
}

NormalPoly weyl_normal_form(const HCoeffTable& table) {
  const unsigned n = table.spec.total();
  NormalPoly out;
  for (const auto& [key, c] : table.entries) {
    const auto [u, v] = key;
    out.add_term(n - 2 * u - v, v, c);
  }
  return out;
}

NormalPoly weyl_normal_form(const WeylSpec& spec) { return weyl_normal_form(h_table(spec)); }

SymmetryReport symmetry_report(const HCoeffTable& table) {
  SymmetryReport report;
  const unsigned n = table.spec.total();
  const bool k_odd = table.spec.k % 2 == 1;
  auto at = [&](unsigned u, unsigned v) {
    auto it = table.entries.find({u, v});
    return it == table.entries.end() ? Scalar() : it->second;
  };
  for (unsigned u = 0; 2 * u <= n; ++u) {
    const unsigned span = n - 2 * u;
    for (unsigned v = 0; v <= span; ++v) {
      const Scalar lhs = at(u, v);
      const Scalar partner = at(u, span - v);
      const Scalar rhs = k_odd ? -partner : partner;
      if (lhs != rhs) {
        report.reflection_ok = false;
        report.reflection_failures.push_back({u, v, span - v, lhs, rhs});
      }
    }
  }
  report.middle_applicable = table.spec.j % 2 == 1 && k_odd;
  if (report.middle_applicable) {
    // j+k even, so every row has a middle slot.
    for (unsigned u = 0; 2 * u <= n; ++u) {
      const unsigned mid = (n - 2 * u) / 2;
      const Scalar value = at(u, mid);
      if (!value.is_zero()) {
        report.middle_zero_ok = false;
        report.middle_failures.push_back({u, mid, mid, value, Scalar()});
      }
    }
  }
  return report;
}

SymmetryReport symmetry_report(const WeylSpec& spec) { return symmetry_report(h_table(spec)); }

}  // namespace weylnorm
