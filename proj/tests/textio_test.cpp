#include "weylnorm/textio.hpp"

#include "bargmann_oracle.hpp"
#include "weylnorm/weyl_closed.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace weylnorm;

namespace {

constexpr Boson C = Boson::Create;
constexpr Boson A = Boson::Annihilate;

const std::string kData = WEYLNORM_DATA_DIR;

ParseError parse_error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ParseError";
  return ParseError("none", {});
}

}  // namespace

TEST(tokenize, spans_cover_input) {
  const auto toks = tokenize("3/2 q^2 - ad");
  ASSERT_EQ(toks.size(), 6u);
  EXPECT_EQ(toks[0].kind, TokenKind::Rational);
  EXPECT_EQ(toks[0].span.begin, 0u);
  EXPECT_EQ(toks[0].span.end, 3u);
  EXPECT_EQ(toks[1].kind, TokenKind::QSym);
  EXPECT_EQ(toks[2].kind, TokenKind::Caret);
  EXPECT_EQ(toks[3].kind, TokenKind::Integer);
  EXPECT_EQ(toks[4].kind, TokenKind::Minus);
  EXPECT_EQ(toks[5].kind, TokenKind::AdagSym);
  EXPECT_EQ(toks[5].span.begin, 10u);
  const ParseError e = parse_error_of([] { tokenize("q + x"); });
  EXPECT_EQ(e.span().begin, 4u);
}

TEST(parse_qp_monomial, examples) {
  const QPMonomial a = parse_qp_monomial("q^2 p");
  EXPECT_EQ(a.coeff, Rational(1));
  EXPECT_EQ(a.spec, (WeylSpec{2, 1}));
  const QPMonomial b = parse_qp_monomial("3/2 p^3");
  EXPECT_EQ(b.coeff, Rational(3, 2));
  EXPECT_EQ(b.spec, (WeylSpec{0, 3}));
  EXPECT_EQ(parse_qp_monomial("-2 * q").coeff, Rational(-2));
  EXPECT_EQ(parse_qp_monomial("7").spec, (WeylSpec{0, 0}));
}

TEST(parse_qp_monomial, rejects_non_monomials) {
  const ParseError e = parse_error_of([] { parse_qp_monomial("q p q"); });
  EXPECT_EQ(e.span().begin, 4u);
  const ParseError rev = parse_error_of([] { parse_qp_monomial("p q"); });
  EXPECT_NE(std::string(rev.what()).find("q before p"), std::string::npos);
  EXPECT_EQ(rev.span().begin, 2u);
  parse_error_of([] { parse_qp_monomial("q q"); });
  parse_error_of([] { parse_qp_monomial(""); });
  parse_error_of([] { parse_qp_monomial("q^"); });
  parse_error_of([] { parse_qp_monomial("0.5 q"); });
  parse_error_of([] { parse_qp_monomial("q + p"); });
}

TEST(parse_qp_poly, examples) {
  const PolySide p = parse_qp_poly("3/2 q p^3 - p");
  EXPECT_EQ(p, (PolySide{{{1, 3}, Rational(3, 2)}, {{0, 1}, Rational(-1)}}));
  EXPECT_TRUE(parse_qp_poly("q - q").empty());
  const ParseError e = parse_error_of([] { parse_qp_poly(""); });
  EXPECT_EQ(e.span().begin, 0u);
  const ParseError missing_op = parse_error_of([] { parse_qp_poly("q 2 p"); });
  EXPECT_EQ(missing_op.span().begin, 2u);
  EXPECT_EQ(parse_qp_poly("-q^2 + 1/3 + q^2 p^0"), (PolySide{{{0, 0}, Rational(1, 3)}}));
}

TEST(parse_boson_word, examples) {
  EXPECT_EQ(parse_boson_word("ad^2 a"), (BosonWord{C, C, A}));
  EXPECT_EQ(parse_boson_word("a ad"), (BosonWord{A, C}));
  EXPECT_TRUE(parse_boson_word("ad^0").empty());
  EXPECT_TRUE(parse_boson_word("1").empty());
  const ParseError e = parse_error_of([] { parse_boson_word("a q"); });
  EXPECT_EQ(e.span().begin, 2u);
  EXPECT_EQ(e.span().end, 3u);
  parse_error_of([] { parse_boson_word("a^"); });
  parse_error_of([] { parse_boson_word("a + ad"); });
}

TEST(parse_rational, exact_only) {
  EXPECT_EQ(parse_rational("-1/1"), Rational(-1));
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("0.5"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
  EXPECT_THROW(parse_rational("i"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(render, plain_examples) {
  EXPECT_EQ(render(weyl_normal_form(WeylSpec{1, 1}), Format::Plain), "(i/2) ad^2 - (i/2) a^2");
  EXPECT_EQ(render(NormalPoly{}, Format::Plain), "0");
  EXPECT_EQ(render(weyl_normal_form(WeylSpec{2, 0}), Format::Plain), "(1/2) ad^2 + ad a + (1/2) a^2 + (1/2)");
  EXPECT_EQ(render(NormalPoly::monomial(1, 1, Scalar(-1)), Format::Plain), "-ad a");
  EXPECT_EQ(render(weyl_normal_form(WeylSpec{0, 1}), Format::Plain), "(i*sqrt2/2) ad - (i*sqrt2/2) a");
  EXPECT_EQ(render(NormalPoly::monomial(0, 0, Scalar(-1, 0, -3, 0)), Format::Plain), "-(1 + 3*sqrt2)");
  EXPECT_EQ(render(NormalPoly::monomial(2, 0, Scalar(1, 0, -1, 0)), Format::Plain), "(1 - sqrt2) ad^2");
}

TEST(render, latex_examples) {
  EXPECT_EQ(render(weyl_normal_form(WeylSpec{1, 1}), Format::Latex),
            "\\frac{i}{2} \\hat{a}^{\\dagger 2} - \\frac{i}{2} \\hat{a}^{2}");
  EXPECT_EQ(render(NormalPoly::monomial(1, 1, Scalar(0, 0, 3, 0)), Format::Latex),
            "3\\sqrt{2} \\hat{a}^{\\dagger}\\hat{a}");
  EXPECT_EQ(render(NormalPoly{}, Format::Latex), "0");
}

TEST(render, structured_examples) {
  const auto doc = nlohmann::json::parse(render(NormalPoly::monomial(0, 0, Scalar(1, 0, 1, 0)), Format::Structured));
  ASSERT_EQ(doc["terms"].size(), 1u);
  EXPECT_EQ(doc["terms"][0]["x_re"], "1/1");
  EXPECT_EQ(doc["terms"][0]["y_re"], "1/1");
  EXPECT_EQ(doc["terms"][0]["x_im"], "0/1");
  const std::string weyl = render_weyl_structured(WeylSpec{1, 1}, weyl_normal_form(WeylSpec{1, 1}));
  EXPECT_EQ(weyl,
            R"({"j":1,"k":1,"hbar_exponent_times_2":2,"terms":[)"
            R"({"m":2,"n":0,"x_re":"0/1","x_im":"1/2","y_re":"0/1","y_im":"0/1"},)"
            R"({"m":0,"n":2,"x_re":"0/1","x_im":"-1/2","y_re":"0/1","y_im":"0/1"}]})");
}

TEST(render, injective_on_random_polys) {
  std::mt19937_64 rng(8);
  std::map<std::string, NormalPoly> seen;
  for (int i = 0; i < 300; ++i) {
    const NormalPoly p = oracle::random_normal_poly(rng, 2, 2);
    const std::string text = render(p, Format::Plain);
    auto [it, inserted] = seen.emplace(text, p);
    if (!inserted) ASSERT_EQ(it->second, p) << text;
  }
}

TEST(round_trip, qp_polys_and_words) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<unsigned> exp(0, 4);
  for (int i = 0; i < 300; ++i) {
    PolySide side;
    for (int t = 0; t < 4; ++t) side[{exp(rng), exp(rng)}] += oracle::random_rational(rng);
    std::erase_if(side, [](const auto& kv) { return kv.second == 0; });
    ASSERT_EQ(parse_qp_poly(render_qp_poly(side)), side) << render_qp_poly(side);

    const BosonWord w = oracle::random_word(rng, 10);
    ASSERT_EQ(parse_boson_word(render_word(w)), w) << render_word(w);
  }
}

TEST(load_system, harmonic_oscillator) {
  const PolySystem sys = load_system(kData + "/harmonic.json");
  EXPECT_EQ(sys.qdot, (PolySide{{{0, 1}, Rational(1)}}));
  EXPECT_EQ(sys.pdot, (PolySide{{{1, 0}, Rational(-1)}}));
}

TEST(load_system, duplicates_are_summed) {
  EXPECT_EQ(load_system(kData + "/duplicate.json").qdot, (PolySide{{{0, 1}, Rational(1)}}));
}

TEST(load_system, errors_name_the_entry) {
  try {
    load_system(kData + "/decimal.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.entry(), 0u);
    EXPECT_NE(std::string(e.what()).find("pdot[0]"), std::string::npos);
  }
  try {
    load_system(kData + "/negative_exponent.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.entry(), 1u);
    EXPECT_NE(std::string(e.what()).find("negative exponent"), std::string::npos);
  }
  EXPECT_THROW(parse_system("{\"qdot\": []"), InputError);
  EXPECT_THROW(parse_system("{\"qdot\": []}"), InputError);
  EXPECT_THROW(parse_system(R"({"qdot": [{"j":0,"k":1,"coeff":1}], "pdot": []})"), InputError);
  EXPECT_THROW(parse_system(R"({"qdot": [{"j":0,"coeff":"1"}], "pdot": []})"), InputError);
  EXPECT_THROW(parse_system(R"({"qdot": [{"j":0,"k":0,"coeff":"i"}], "pdot": []})"), InputError);
  EXPECT_THROW(load_system(kData + "/does_not_exist.json"), InputError);
}

TEST(render_dynamics, plain) {
  const ExpectedDynamics dyn = quantize_system(load_system(kData + "/harmonic.json"));
  EXPECT_EQ(render_dynamics(dyn, Format::Plain),
            "qdot = (i*sqrt2/2) ad - (i*sqrt2/2) a\n"
            "pdot = -(sqrt2/2) ad - (sqrt2/2) a\n"
            "% hbar exponents qdot: (0,1):1/2\n"
            "% hbar exponents pdot: (1,0):1/2");
  const ExpectedDynamics empty = quantize_system(load_system(kData + "/empty.json"));
  const std::string text = render_dynamics(empty, Format::Plain);
  EXPECT_NE(text.find("qdot = 0\n"), std::string::npos);
  EXPECT_NE(text.find("pdot = 0\n"), std::string::npos);
}
