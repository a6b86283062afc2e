#pragma once

#include "weylnorm/normal_poly.hpp"
#include "weylnorm/weyl_closed.hpp"
#include "weylnorm/words.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace weylnorm {

/// Raised when a factorial-cost enumeration is asked to exceed its configured size.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const char* what, unsigned requested, unsigned limit);
  unsigned requested() const { return requested_; }
  unsigned limit() const { return limit_; }

 private:
  unsigned requested_;
  unsigned limit_;
};

inline constexpr unsigned kDefaultForcedCap = 8;
inline constexpr unsigned kDefaultEtaCap = 6;
inline constexpr unsigned kDefaultSweepCap = 10;

/// Every arrangement of j Q's and k P's exactly once, lexicographic with Q < P.
std::vector<QPWord> distinct_orderings(const WeylSpec& spec);

/// Average of expand_qp_word over distinct_orderings.
NormalPoly weyl_bruteforce(const WeylSpec& spec);

/// +1 for a q factor, -1 for a p factor.
using SignSequence = std::vector<int>;

/// Average over all (j+k)! sign-sequence permutations of prod_r (a† + s_r a),
/// scaled by i^k / 2^{(j+k)/2}. Distinct arrangements are visited once and
/// weighted by j! k!.
NormalPoly weyl_forced(const WeylSpec& spec, unsigned cap = kDefaultForcedCap);

/// Integer polynomial in commuting signs s_1..s_N; key bit r marks s_{r+1}.
/// Each sign occurs at most once per monomial.
using SignPolynomial = std::map<std::uint32_t, mpz_class>;

/// prod_{r=1}^{N} (a† + s_r a) with symbolic signs, normal ordered. The key is
/// the a†^m a^n slot; the value collects its sign polynomial.
std::map<Monomial, SignPolynomial, RenderOrder> symbolic_sign_product(unsigned n);

/// Evaluate a sign polynomial at a concrete assignment.
mpz_class evaluate(const SignPolynomial& poly, const SignSequence& signs);

struct EtaReport {
  unsigned u = 0;
  unsigned v = 0;
  /// Sign polynomial of the (u,v) slot for the identity arrangement.
  SignPolynomial eta;
  /// Sum of eta with signs relabelled by every permutation of positions.
  SignPolynomial permutation_sum;
  mpz_class lambda;
  Rational xi;
  mpz_class zeta;
  /// permutation_sum equals lambda*xi times the elementary symmetric polynomial.
  bool symbolic_ok = false;
  /// permutation_sum at the canonical signs equals lambda*xi*zeta.
  bool canonical_ok = false;
  mpz_class canonical_value;

  bool ok() const { return symbolic_ok && canonical_ok; }
};

/// Checks the lambda*xi*zeta factorization of sum_sigma eta for one (u,v) slot.
EtaReport eta_decomposition_check(const WeylSpec& spec, unsigned u, unsigned v, unsigned cap = kDefaultEtaCap);

}  // namespace weylnorm
