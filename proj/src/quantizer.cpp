#include "weylnorm/quantizer.hpp"

#include "weylnorm/weyl_closed.hpp"

namespace weylnorm {

namespace {

std::vector<HbarNote> notes_for(const PolySide& side) {
  std::vector<HbarNote> notes;
  for (const auto& [jk, c] : side)
    if (c != 0) notes.push_back({jk.first, jk.second, jk.first + jk.second});
  return notes;
}

}  // namespace

NormalPoly quantize_side(const PolySide& side) {
  NormalPoly out;
  for (const auto& [jk, c] : side) {
    if (c == 0) continue;
    out += weyl_normal_form(WeylSpec{jk.first, jk.second}) * Scalar(c);
  }
  return out;
}

ExpectedDynamics quantize_system(const PolySystem& sys) {
  return ExpectedDynamics{quantize_side(sys.qdot), quantize_side(sys.pdot), notes_for(sys.qdot),
                          notes_for(sys.pdot)};
}

}  // namespace weylnorm
