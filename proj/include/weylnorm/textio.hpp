#pragma once

#include "weylnorm/normal_poly.hpp"
#include "weylnorm/quantizer.hpp"
#include "weylnorm/weyl_closed.hpp"
#include "weylnorm/words.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylnorm {

/// Half-open byte range [begin, end) into the parsed text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, Span span);
  Span span() const { return span_; }

 private:
  Span span_;
};

/// Malformed system document; entry() names the offending array element when known.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::optional<std::size_t> entry = std::nullopt)
      : std::runtime_error(message), entry_(entry) {}
  std::optional<std::size_t> entry() const { return entry_; }

 private:
  std::optional<std::size_t> entry_;
};

enum class TokenKind { QSym, PSym, ASym, AdagSym, Integer, Rational, Caret, Plus, Minus, Star };

struct ExprToken {
  TokenKind kind;
  Span span;
  std::string text;
};

std::vector<ExprToken> tokenize(std::string_view text);

struct QPMonomial {
  Rational coeff;
  WeylSpec spec;
};

/// [sign] [coeff [*]] [q[^j]] [p[^k]]; q must come before p.
QPMonomial parse_qp_monomial(std::string_view text);
/// Signed sum of monomials; like terms combined, zero terms dropped.
PolySide parse_qp_poly(std::string_view text);
/// Juxtaposed "a" / "ad" factors with optional "^n"; "1" or empty text is the identity.
BosonWord parse_boson_word(std::string_view text);
/// Parses "n" or "n/d" (optional sign); decimals and zero denominators are rejected.
Rational parse_rational(std::string_view text);

enum class Format { Plain, Latex, Structured };

/// Scalar as standalone text, e.g. "i/2", "-1 + sqrt2", "\frac{\sqrt{2}}{2}". Plain or LaTeX only.
std::string scalar_text(const Scalar& z, Format format);
/// Plain: "(i/2) ad^2 - (i/2) a^2"; LaTeX: "\frac{i}{2} \hat{a}^{\dagger 2} - ...";
/// Structured: {"terms":[{"m","n","x_re","x_im","y_re","y_im"}, ...]}.
std::string render(const NormalPoly& poly, Format format);
/// Structured Weyl result with the j, k and hbar metadata fields.
std::string render_weyl_structured(const WeylSpec& spec, const NormalPoly& poly);
std::string render_qp_poly(const PolySide& side);
std::string render_word(const BosonWord& w);
std::string render_dynamics(const ExpectedDynamics& dyn, Format format);

PolySystem parse_system(std::string_view document);
PolySystem load_system(const std::filesystem::path& path);

}  // namespace weylnorm
