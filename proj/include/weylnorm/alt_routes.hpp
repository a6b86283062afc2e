#pragma once

#include "weylnorm/normal_poly.hpp"
#include "weylnorm/weyl_closed.hpp"
#include "weylnorm/words.hpp"

#include <vector>

namespace weylnorm {

/// Cahill–Glauber: the Weyl-ordered {a^m a†^n} written in normal order,
/// sum_l (l!/2^l) C(m,l) C(n,l) a†^{n-l} a^{m-l}.
NormalPoly cg_weyl_monomial(unsigned m, unsigned n);

/// Weyl ordering of q^j p^k through the Weyl symbol
/// 2^{-(j+k)/2} i^k (a + a†)^j (a† - a)^k and cg_weyl_monomial.
NormalPoly weyl_via_cg(const WeylSpec& spec);

/// Block form a†^{r_M} a^{s_M} ... a†^{r_1} a^{s_1}; index 0 is the rightmost block.
struct BosonString {
  std::vector<unsigned> r;
  std::vector<unsigned> s;

  std::size_t blocks() const { return r.size(); }
};

/// d_0 = 0, d_l = sum_{m<=l} (r_m - s_m).
std::vector<long> prefix_excess(const BosonString& x);

/// Maximal-run block decomposition of a word; the empty word gives one (0,0) block.
BosonString blockify(const BosonWord& w);
BosonWord flatten(const BosonString& x);

/// S_{r,s}(k) = (1/k!) sum_j C(k,j) (-1)^{k-j} prod_m (d_{m-1} + j)_{s_m}.
Rational blasiak_coeff(const std::vector<unsigned>& r, const std::vector<unsigned>& s, unsigned k);

/// Closed-form normal ordering of a boson string. Negative total excess is
/// handled through the adjoint string (roles of r and s swapped, blocks reversed).
NormalPoly blasiak_normal_order(const BosonString& x);

/// x(x-1)...(x-n+1), with (x)_0 = 1.
mpz_class falling_factorial(long x, unsigned n);

}  // namespace weylnorm
