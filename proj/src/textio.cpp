#include "weylnorm/textio.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace weylnorm {

using json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& message, Span span)
    : std::runtime_error(message + " at [" + std::to_string(span.begin) + "," + std::to_string(span.end) + ")"),
      span_(span) {}

// ---------------------------------------------------------------------------
// Lexing

std::vector<ExprToken> tokenize(std::string_view text) {
  std::vector<ExprToken> out;
  std::size_t i = 0;
  auto is_digit = [&](std::size_t at) { return at < text.size() && std::isdigit(static_cast<unsigned char>(text[at])); };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      const std::string word(text.substr(start, i - start));
      TokenKind kind;
      if (word == "q") kind = TokenKind::QSym;
      else if (word == "p") kind = TokenKind::PSym;
      else if (word == "a") kind = TokenKind::ASym;
      else if (word == "ad") kind = TokenKind::AdagSym;
      else throw ParseError("unknown symbol '" + word + "'", {start, i});
      out.push_back({kind, {start, i}, word});
      continue;
    }
    if (is_digit(i)) {
      while (is_digit(i)) ++i;
      TokenKind kind = TokenKind::Integer;
      if (i < text.size() && text[i] == '/') {
        if (!is_digit(i + 1)) throw ParseError("expected denominator after '/'", {start, i + 1});
        ++i;
        while (is_digit(i)) ++i;
        kind = TokenKind::Rational;
      }
      if (i < text.size() && (text[i] == '.' || text[i] == 'e' || text[i] == 'E')) {
        throw ParseError("decimal literals are not accepted; write an exact fraction n/d", {start, i + 1});
      }
      out.push_back({kind, {start, i}, std::string(text.substr(start, i - start))});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '^': kind = TokenKind::Caret; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '.': throw ParseError("decimal literals are not accepted; write an exact fraction n/d", {start, start + 1});
      default: throw ParseError(std::string("unexpected character '") + c + "'", {start, start + 1});
    }
    ++i;
    out.push_back({kind, {start, i}, std::string(1, c)});
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
  const auto digits = [&](std::size_t from) {
    std::size_t to = from;
    while (to < text.size() && std::isdigit(static_cast<unsigned char>(text[to]))) ++to;
    return to;
  };
  const std::size_t num_end = digits(pos);
  if (num_end == pos) throw ParseError("expected an integer or fraction n/d", {0, text.size()});
  mpz_class num(std::string(text.substr(pos, num_end - pos)));
  mpz_class den = 1;
  std::size_t end = num_end;
  if (end < text.size() && text[end] == '/') {
    const std::size_t den_end = digits(end + 1);
    if (den_end == end + 1) throw ParseError("expected denominator after '/'", {end, end + 1});
    den = mpz_class(std::string(text.substr(end + 1, den_end - end - 1)));
    if (den == 0) throw ParseError("zero denominator", {end + 1, den_end});
    end = den_end;
  }
  if (end != text.size()) {
    throw ParseError("not an exact rational (decimals are rejected; write n/d)", {end, text.size()});
  }
  Rational r(negative ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Cursor {
 public:
  Cursor(std::string_view text) : tokens_(tokenize(text)), length_(text.size()) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const ExprToken* peek() const { return done() ? nullptr : &tokens_[pos_]; }
  bool at(TokenKind kind) const { return !done() && tokens_[pos_].kind == kind; }
  const ExprToken& take() { return tokens_[pos_++]; }
  Span here() const { return done() ? Span{length_, length_} : tokens_[pos_].span; }

 private:
  std::vector<ExprToken> tokens_;
  std::size_t pos_ = 0;
  std::size_t length_;
};

unsigned parse_exponent(Cursor& cur) {
  if (!cur.at(TokenKind::Caret)) return 1;
  cur.take();
  if (!cur.at(TokenKind::Integer)) throw ParseError("expected a nonnegative integer exponent after '^'", cur.here());
  const ExprToken& tok = cur.take();
  if (tok.text.size() > 6) throw ParseError("exponent too large", tok.span);
  return static_cast<unsigned>(std::stoul(tok.text));
}

// One monomial after any leading sign has been consumed.
QPMonomial parse_term(Cursor& cur) {
  QPMonomial mono{Rational(1), {}};
  bool any = false;
  if (cur.at(TokenKind::Integer) || cur.at(TokenKind::Rational)) {
    mono.coeff = parse_rational(cur.take().text);
    any = true;
    if (cur.at(TokenKind::Star)) {
      cur.take();
      if (!cur.at(TokenKind::QSym) && !cur.at(TokenKind::PSym))
        throw ParseError("expected q or p after '*'", cur.here());
    }
  }
  if (cur.at(TokenKind::QSym)) {
    cur.take();
    mono.spec.j = parse_exponent(cur);
    any = true;
  }
  if (cur.at(TokenKind::Star) && any) {
    cur.take();
    if (!cur.at(TokenKind::PSym)) throw ParseError("expected p after '*'", cur.here());
  }
  if (cur.at(TokenKind::PSym)) {
    cur.take();
    mono.spec.k = parse_exponent(cur);
    any = true;
  }
  if (cur.at(TokenKind::QSym)) {
    throw ParseError("not a monomial: write factors in the canonical order q^j p^k (q before p, each at most once)",
                     cur.here());
  }
  if (!any) throw ParseError("expected a coefficient, q or p", cur.here());
  return mono;
}

}  // namespace

QPMonomial parse_qp_monomial(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) throw ParseError("empty input", cur.here());
  bool negative = false;
  if (cur.at(TokenKind::Minus) || cur.at(TokenKind::Plus)) negative = cur.take().kind == TokenKind::Minus;
  QPMonomial mono = parse_term(cur);
  if (negative) mono.coeff = -mono.coeff;
  if (!cur.done()) throw ParseError("unexpected trailing input '" + cur.peek()->text + "'", cur.here());
  return mono;
}

PolySide parse_qp_poly(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) throw ParseError("empty input", cur.here());
  PolySide out;
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.at(TokenKind::Minus) || cur.at(TokenKind::Plus)) {
      negative = cur.take().kind == TokenKind::Minus;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", cur.here());
    }
    QPMonomial mono = parse_term(cur);
    auto& slot = out[{mono.spec.j, mono.spec.k}];
    if (negative) slot -= mono.coeff;
    else slot += mono.coeff;
    first = false;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BosonWord parse_boson_word(std::string_view text) {
  Cursor cur(text);
  BosonWord w;
  while (!cur.done()) {
    if (cur.at(TokenKind::Integer) && cur.peek()->text == "1") {
      cur.take();
      continue;
    }
    Boson letter;
    if (cur.at(TokenKind::ASym)) letter = Boson::Annihilate;
    else if (cur.at(TokenKind::AdagSym)) letter = Boson::Create;
    else throw ParseError("expected 'a' or 'ad'", cur.here());
    cur.take();
    w.insert(w.end(), parse_exponent(cur), letter);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Component {
  const Rational* value;
  const char* plain_basis;
  const char* latex_basis;
};

std::vector<Component> components(const Scalar& z) {
  return {{&z.x_re(), "", ""}, {&z.x_im(), "i", "i"}, {&z.y_re(), "sqrt2", "\\sqrt{2}"},
          {&z.y_im(), "i*sqrt2", "i\\sqrt{2}"}};
}

// |value| * basis, without sign.
std::string magnitude_text(const Rational& value, const char* basis, Format format) {
  const mpz_class num = abs(value.get_num());
  const mpz_class& den = value.get_den();
  const std::string b(basis);
  std::string top;
  if (format == Format::Latex) {
    top = (num != 1 || b.empty()) ? num.get_str() + b : b;
    return den == 1 ? top : "\\frac{" + top + "}{" + den.get_str() + "}";
  }
  if (num != 1 || b.empty()) top = num.get_str();
  if (!b.empty()) top += (top.empty() ? "" : "*") + b;
  return den == 1 ? top : top + "/" + den.get_str();
}

// Coefficient split into an overall sign and a positive-leading body.
struct SignedText {
  bool negative = false;
  std::string body;
  bool is_one = false;
  bool bare = false;  // positive integer, needs no grouping
};

SignedText signed_scalar(const Scalar& z, Format format) {
  SignedText out;
  std::vector<std::pair<const Rational*, const char*>> parts;
  for (const auto& c : components(z))
    if (*c.value != 0) parts.emplace_back(c.value, format == Format::Latex ? c.latex_basis : c.plain_basis);
  if (parts.empty()) {
    out.body = "0";
    out.bare = true;
    return out;
  }
  out.negative = sgn(*parts.front().first) < 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool part_negative = (sgn(*parts[i].first) < 0) != out.negative;
    if (i > 0) out.body += part_negative ? " - " : " + ";
    out.body += magnitude_text(*parts[i].first, parts[i].second, format);
  }
  if (parts.size() == 1) {
    const Rational& v = *parts.front().first;
    out.bare = parts.front().second[0] == '\0' && v.get_den() == 1;
    out.is_one = out.bare && abs(v) == 1;
  }
  if (parts.size() > 1) {
    out.body = format == Format::Latex ? "\\left(" + out.body + "\\right)" : "(" + out.body + ")";
  } else if (!out.bare && format == Format::Plain) {
    out.body = "(" + out.body + ")";
  }
  return out;
}

std::string operator_text(const Monomial& mono, Format format) {
  std::string out;
  auto power = [](unsigned e) { return e == 1 ? std::string() : std::to_string(e); };
  if (format == Format::Latex) {
    if (mono.m > 0) out += "\\hat{a}^{\\dagger" + (mono.m == 1 ? std::string() : " " + power(mono.m)) + "}";
    if (mono.n > 0) out += mono.n == 1 ? "\\hat{a}" : "\\hat{a}^{" + power(mono.n) + "}";
    return out;
  }
  if (mono.m > 0) out += mono.m == 1 ? "ad" : "ad^" + power(mono.m);
  if (mono.n > 0) {
    if (!out.empty()) out += " ";
    out += mono.n == 1 ? "a" : "a^" + power(mono.n);
  }
  return out;
}

json scalar_json_fields(json& obj, const Scalar& z) {
  obj["x_re"] = rational_to_fraction(z.x_re());
  obj["x_im"] = rational_to_fraction(z.x_im());
  obj["y_re"] = rational_to_fraction(z.y_re());
  obj["y_im"] = rational_to_fraction(z.y_im());
  return obj;
}

json terms_json(const NormalPoly& poly) {
  json terms = json::array();
  for (const auto& [mono, c] : poly.terms()) {
    json t;
    t["m"] = mono.m;
    t["n"] = mono.n;
    scalar_json_fields(t, c);
    terms.push_back(std::move(t));
  }
  return terms;
}

json notes_json(const std::vector<HbarNote>& notes) {
  json out = json::array();
  for (const auto& n : notes) out.push_back({{"j", n.j}, {"k", n.k}, {"hbar_exponent_times_2", n.exponent_times_2}});
  return out;
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, text] = terms[i];
    if (i == 0) out += negative ? "-" + text : text;
    else out += (negative ? " - " : " + ") + text;
  }
  return out;
}

}  // namespace

std::string scalar_text(const Scalar& z, Format format) {
  if (format == Format::Structured) throw std::invalid_argument("scalar_text: structured format has no scalar text");
  // Standalone form: no parentheses around single components.
  std::string out;
  bool first = true;
  for (const auto& c : components(z)) {
    if (*c.value == 0) continue;
    const bool negative = sgn(*c.value) < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += magnitude_text(*c.value, format == Format::Latex ? c.latex_basis : c.plain_basis, format);
    first = false;
  }
  return first ? "0" : out;
}

std::string render(const NormalPoly& poly, Format format) {
  if (format == Format::Structured) {
    json doc;
    doc["terms"] = terms_json(poly);
    return doc.dump();
  }
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [mono, c] : poly.terms()) {
    const SignedText coeff = signed_scalar(c, format);
    const std::string op = operator_text(mono, format);
    std::string text;
    if (op.empty()) text = coeff.is_one ? "1" : coeff.body;
    else if (coeff.is_one) text = op;
    else text = coeff.body + " " + op;
    terms.emplace_back(coeff.negative, std::move(text));
  }
  return join_terms(terms);
}

std::string render_weyl_structured(const WeylSpec& spec, const NormalPoly& poly) {
  json doc;
  doc["j"] = spec.j;
  doc["k"] = spec.k;
  doc["hbar_exponent_times_2"] = spec.total();
  doc["terms"] = terms_json(poly);
  return doc.dump();
}

std::string render_qp_poly(const PolySide& side) {
  std::vector<std::pair<std::pair<unsigned, unsigned>, Rational>> ordered(side.begin(), side.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.first > b.first.first;
  });
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [jk, c] : ordered) {
    if (c == 0) continue;
    const auto [j, k] = jk;
    std::string symbols;
    if (j > 0) symbols += j == 1 ? "q" : "q^" + std::to_string(j);
    if (k > 0) symbols += std::string(symbols.empty() ? "" : " ") + (k == 1 ? "p" : "p^" + std::to_string(k));
    const Rational mag = abs(c);
    std::string text;
    if (symbols.empty()) text = mag.get_str();
    else if (mag == 1) text = symbols;
    else text = mag.get_str() + " " + symbols;
    terms.emplace_back(sgn(c) < 0, std::move(text));
  }
  return join_terms(terms);
}

std::string render_word(const BosonWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t run = i;
    while (run < w.size() && w[run] == w[i]) ++run;
    if (!out.empty()) out += " ";
    out += w[i] == Boson::Create ? "ad" : "a";
    if (run - i > 1) out += "^" + std::to_string(run - i);
    i = run;
  }
  return out;
}

std::string render_dynamics(const ExpectedDynamics& dyn, Format format) {
  if (format == Format::Structured) {
    json doc;
    doc["qdot"] = {{"terms", terms_json(dyn.qdot_op)}, {"hbar_notes", notes_json(dyn.qdot_notes)}};
    doc["pdot"] = {{"terms", terms_json(dyn.pdot_op)}, {"hbar_notes", notes_json(dyn.pdot_notes)}};
    return doc.dump();
  }
  auto notes_text = [](const std::vector<HbarNote>& notes) {
    std::string out;
    for (const auto& n : notes) {
      if (!out.empty()) out += ", ";
      out += "(" + std::to_string(n.j) + "," + std::to_string(n.k) + "):" + std::to_string(n.exponent_times_2) + "/2";
    }
    return out.empty() ? std::string("none") : out;
  };
  std::ostringstream os;
  if (format == Format::Latex) {
    os << "\\frac{d}{dt}\\langle\\hat{q}\\rangle = " << render(dyn.qdot_op, format) << "\n";
    os << "\\frac{d}{dt}\\langle\\hat{p}\\rangle = " << render(dyn.pdot_op, format) << "\n";
  } else {
    os << "qdot = " << render(dyn.qdot_op, format) << "\n";
    os << "pdot = " << render(dyn.pdot_op, format) << "\n";
  }
  os << "% hbar exponents qdot: " << notes_text(dyn.qdot_notes) << "\n";
  os << "% hbar exponents pdot: " << notes_text(dyn.pdot_notes);
  return os.str();
}

// ---------------------------------------------------------------------------
// System documents

namespace {

PolySide parse_side(const json& doc, const char* name) {
  PolySide side;
  if (!doc.contains(name)) throw InputError(std::string("missing array \"") + name + "\"");
  const json& arr = doc.at(name);
  if (!arr.is_array()) throw InputError(std::string("\"") + name + "\" must be an array");
  for (std::size_t idx = 0; idx < arr.size(); ++idx) {
    const json& entry = arr[idx];
    const std::string where = std::string(name) + "[" + std::to_string(idx) + "]";
    if (!entry.is_object()) throw InputError(where + ": entry must be an object", idx);
    for (const char* field : {"j", "k", "coeff"})
      if (!entry.contains(field)) throw InputError(where + ": missing field \"" + field + "\"", idx);
    unsigned exps[2];
    const char* exp_names[2] = {"j", "k"};
    for (int e = 0; e < 2; ++e) {
      const json& v = entry.at(exp_names[e]);
      if (!v.is_number_integer()) throw InputError(where + ": \"" + exp_names[e] + "\" must be an integer", idx);
      const auto value = v.get<long long>();
      if (value < 0) throw InputError(where + ": negative exponent " + exp_names[e] + " = " + std::to_string(value), idx);
      if (value > 1000) throw InputError(where + ": exponent " + exp_names[e] + " too large", idx);
      exps[e] = static_cast<unsigned>(value);
    }
    const json& coeff = entry.at("coeff");
    if (!coeff.is_string()) throw InputError(where + ": \"coeff\" must be a \"num/den\" string", idx);
    Rational c;
    try {
      c = parse_rational(coeff.get<std::string>());
    } catch (const ParseError& e) {
      throw InputError(where + ": non-rational coefficient \"" + coeff.get<std::string>() + "\" (" + e.what() + ")", idx);
    }
    side[{exps[0], exps[1]}] += c;
  }
  std::erase_if(side, [](const auto& kv) { return kv.second == 0; });
  return side;
}

}  // namespace

PolySystem parse_system(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("malformed document: top level must be an object");
  return PolySystem{parse_side(doc, "qdot"), parse_side(doc, "pdot")};
}

PolySystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

}  // namespace weylnorm
