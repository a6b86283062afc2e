#pragma once

#include "weylnorm/normal_poly.hpp"
#include "weylnorm/scalar.hpp"

#include <map>
#include <utility>
#include <vector>

namespace weylnorm {

/// The monomial q^j p^k whose Weyl ordering is requested.
struct WeylSpec {
  unsigned j = 0;
  unsigned k = 0;

  unsigned total() const { return j + k; }
  friend bool operator==(const WeylSpec&, const WeylSpec&) = default;
};

/// Binomial coefficient, zero when b < 0 or b > a. Requires a >= 0.
mpz_class binom(long a, long b);

/// Number of times each sign product recurs per slot: (j+k-u-v)! (u+v)!.
mpz_class lambda_factor(unsigned j, unsigned k, unsigned u, unsigned v);

/// Weight sum per sign product: (j+k)! / (2^u u! v! (j+k-2u-v)!).
Rational xi_factor(unsigned j, unsigned k, unsigned u, unsigned v);

/// sum_m (-1)^m C(j, t-m) C(k, m).
mpz_class zeta_sum(unsigned j, unsigned k, unsigned t);

/// Coefficient of x^t in (1+x)^j (1-x)^k, by explicit expansion.
mpz_class zeta_poly(unsigned j, unsigned k, unsigned t);

/// sum_m (-1)^m gamma(j, t-m) gamma(k, m) with gamma(a,b) = g(a,b) a!/(b!(a-b)!)
/// and g(a,b) = [a >= b]. Used as a verification variant.
mpz_class zeta_gamma(unsigned j, unsigned k, unsigned t);

/// The same sum restricted to m in [max(0, t-j), min(k, t)]. Verification variant.
mpz_class zeta_range(unsigned j, unsigned k, unsigned t);

/// When on, every h_coeff call cross-checks zeta_poly against zeta_sum and
/// throws std::logic_error on disagreement. Defaults to on in debug builds.
void set_verification_mode(bool on);
bool verification_mode();

/// Coefficient of a†^{j+k-2u-v} a^v in the normal-ordered Weyl ordering of q^j p^k.
/// Requires 2u + v <= j + k.
Scalar h_coeff(unsigned j, unsigned k, unsigned u, unsigned v);

/// All h_coeff values of one (j,k), including zeros.
struct HCoeffTable {
  WeylSpec spec;
  std::map<std::pair<unsigned, unsigned>, Scalar> entries;

  /// Equality ignores zero-valued entries.
  friend bool operator==(const HCoeffTable& a, const HCoeffTable& b);
};

HCoeffTable h_table(const WeylSpec& spec);

/// Assembles sum_{u,v} h(u,v) a†^{j+k-2u-v} a^v from a table.
NormalPoly weyl_normal_form(const HCoeffTable& table);
NormalPoly weyl_normal_form(const WeylSpec& spec);

struct SymmetryWitness {
  unsigned u = 0;
  unsigned v = 0;
  /// Index paired with v (j+k-2u-v), or v itself for the middle-zero identity.
  unsigned v_partner = 0;
  Scalar lhs;
  Scalar rhs;
};

struct SymmetryReport {
  /// h(u,v) = (-1)^k h(u, j+k-2u-v) for every (u,v).
  bool reflection_ok = true;
  /// Middle coefficient vanishes; only meaningful when j and k are both odd.
  bool middle_applicable = false;
  bool middle_zero_ok = true;
  std::vector<SymmetryWitness> reflection_failures;
  std::vector<SymmetryWitness> middle_failures;

  bool ok() const { return reflection_ok && middle_zero_ok; }
};

SymmetryReport symmetry_report(const HCoeffTable& table);
SymmetryReport symmetry_report(const WeylSpec& spec);

}  // namespace weylnorm
