#pragma once

#include "weylnorm/normal_poly.hpp"

#include <vector>

namespace weylnorm {

enum class Boson : unsigned char { Create, Annihilate };
enum class QP : unsigned char { Q, P };

/// Operator product written left to right; the empty word is the identity.
using BosonWord = std::vector<Boson>;
using QPWord = std::vector<QP>;

/// Normal-ordered equivalent by exhaustive rewriting a a† -> a† a + 1.
///
/// Always rewrites the leftmost out-of-order pair. Each rewrite lowers the
/// inversion count, so the recursion terminates; results are memoized per
/// call on the intermediate word.
NormalPoly normal_order_word(const BosonWord& w);

/// q -> (a + a†)/sqrt2, p -> i(a† - a)/sqrt2 (hbar = 1), product normal-ordered.
NormalPoly expand_qp_word(const QPWord& w);

/// Letter substitution alone, before any product is taken.
NormalPoly qp_letter(QP letter);

}  // namespace weylnorm
