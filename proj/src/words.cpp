#include "weylnorm/words.hpp"

#include <map>

namespace weylnorm {

namespace {

using Memo = std::map<BosonWord, NormalPoly>;

NormalPoly rewrite(const BosonWord& w, Memo& memo) {
  std::size_t pos = w.size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == Boson::Annihilate && w[i + 1] == Boson::Create) {
      pos = i;
      break;
    }
  }
  if (pos == w.size()) {
    // Every a† already precedes every a.
    unsigned m = 0;
    for (Boson b : w) m += b == Boson::Create;
    return NormalPoly::monomial(m, static_cast<unsigned>(w.size()) - m, Scalar(1));
  }
  if (auto it = memo.find(w); it != memo.end()) return it->second;

  BosonWord swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  BosonWord contracted;
  contracted.reserve(w.size() - 2);
  contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());

  NormalPoly out = rewrite(swapped, memo);
  out += rewrite(contracted, memo);
  memo.emplace(w, out);
  return out;
}

}  // namespace

NormalPoly normal_order_word(const BosonWord& w) {
  Memo memo;
  return rewrite(w, memo);
}

NormalPoly qp_letter(QP letter) {
  const Scalar r = Scalar::inv_sqrt2_pow(1);
  NormalPoly out;
  if (letter == QP::Q) {
    out.add_term(1, 0, r);
    out.add_term(0, 1, r);
  } else {
    const Scalar c = Scalar::imag_unit() * r;
    out.add_term(1, 0, c);
    out.add_term(0, 1, -c);
  }
  return out;
}

NormalPoly expand_qp_word(const QPWord& w) {
  const Scalar q_scale = Scalar::inv_sqrt2_pow(1);
  const Scalar p_scale = Scalar::imag_unit() * q_scale;
  NormalPoly acc = NormalPoly::identity();
  for (QP letter : w) {
    if (letter == QP::Q) {
      acc = (acc.times_creation() + acc.times_annihilation()) * q_scale;
    } else {
      acc = (acc.times_creation() - acc.times_annihilation()) * p_scale;
    }
  }
  return acc;
}

}  // namespace weylnorm
