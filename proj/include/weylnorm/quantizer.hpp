#pragma once

#include "weylnorm/normal_poly.hpp"
#include "weylnorm/scalar.hpp"

#include <map>
#include <utility>
#include <vector>

namespace weylnorm {

/// Sparse classical polynomial: (j,k) -> coefficient of q^j p^k.
using PolySide = std::map<std::pair<unsigned, unsigned>, Rational>;

/// Autonomous system q' = A(q,p), p' = B(q,p) with real rational coefficients.
struct PolySystem {
  PolySide qdot;
  PolySide pdot;
};

/// The Weyl-quantized monomial q^j p^k carries hbar^{(j+k)/2} once hbar is restored.
struct HbarNote {
  unsigned j = 0;
  unsigned k = 0;
  unsigned exponent_times_2 = 0;

  friend bool operator==(const HbarNote&, const HbarNote&) = default;
};

struct ExpectedDynamics {
  NormalPoly qdot_op;
  NormalPoly pdot_op;
  std::vector<HbarNote> qdot_notes;
  std::vector<HbarNote> pdot_notes;
};

/// sum_{(j,k)} coeff * weyl_normal_form(j,k). Zero coefficients are skipped.
NormalPoly quantize_side(const PolySide& side);

ExpectedDynamics quantize_system(const PolySystem& sys);

}  // namespace weylnorm
