// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// All comparisons are exact; there is no tolerance anywhere.

#include "weylnorm/alt_routes.hpp"
#include "weylnorm/quantizer.hpp"
#include "weylnorm/textio.hpp"
#include "weylnorm/weyl_closed.hpp"
#include "weylnorm/weyl_enum.hpp"
#include "weylnorm/words.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace weylnorm;

namespace {

constexpr double kRouteSweepSeconds = 300.0;
constexpr unsigned kRouteMax = 10;
constexpr unsigned kForcedMax = 8;
constexpr unsigned kEtaMax = 6;
constexpr unsigned kZetaMax = 20;
constexpr unsigned kSymmetryMax = 16;
constexpr unsigned kHermiticityMax = 12;
constexpr unsigned kExhaustiveWordLength = 8;
constexpr unsigned kRandomWords = 1000;
constexpr unsigned kRandomWordLength = 14;
constexpr unsigned kRandomSystems = 100;
constexpr unsigned kSystemMaxTotal = 8;

/// Collects the first failure message of a criterion.
class Criterion {
 public:
  void fail(const std::string& why) {
    if (message_.empty()) message_ = why;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  bool ok() const { return message_.empty(); }
  const std::string& message() const { return message_; }
  std::string note;

 private:
  std::string message_;
};

std::string jk(unsigned j, unsigned k) { return "(j,k)=(" + std::to_string(j) + "," + std::to_string(k) + ")"; }

NormalPoly poly(std::initializer_list<std::tuple<unsigned, unsigned, Scalar>> terms) {
  NormalPoly p;
  for (const auto& [m, n, c] : terms) p.add_term(m, n, c);
  return p;
}

void route_equality(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  unsigned count = 0;
  for (unsigned n = 0; n <= kRouteMax; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      const WeylSpec spec{j, n - j};
      const NormalPoly closed = weyl_normal_form(spec);
      c.expect(closed == weyl_bruteforce(spec), "closed != brute at " + jk(j, n - j));
      c.expect(closed == weyl_via_cg(spec), "closed != cg at " + jk(j, n - j));
      ++count;
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < kRouteSweepSeconds, "sweep took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << count << " (j,k) pairs in " << secs << " s";
  c.note = os.str();
}

void forced_equality(Criterion& c) {
  unsigned count = 0;
  for (unsigned n = 0; n <= kForcedMax; ++n)
    for (unsigned j = 0; j <= n; ++j, ++count)
      c.expect(weyl_forced(WeylSpec{j, n - j}, kForcedMax) == weyl_bruteforce(WeylSpec{j, n - j}),
               "forced != brute at " + jk(j, n - j));
  c.note = std::to_string(count) + " (j,k) pairs";
}

void eta_decomposition(Criterion& c) {
  unsigned slots = 0;
  for (unsigned n = 0; n <= kEtaMax; ++n)
    for (unsigned j = 0; j <= n; ++j)
      for (unsigned u = 0; 2 * u <= n; ++u)
        for (unsigned v = 0; v <= n - 2 * u; ++v, ++slots)
          c.expect(eta_decomposition_check(WeylSpec{j, n - j}, u, v, kEtaMax).ok(),
                   "decomposition fails at " + jk(j, n - j) + " u=" + std::to_string(u) + " v=" + std::to_string(v));
  // Three factors, u = v = 1: lambda = 2, xi = 3, sum = 2(2+1+0)(s1s2 + s1s3 + s2s3).
  const EtaReport worked = eta_decomposition_check(WeylSpec{2, 1}, 1, 1, kEtaMax);
  c.expect(worked.eta == SignPolynomial{{0b011, 2}, {0b101, 1}}, "worked case: eta is not 2 s1s2 + s1s3");
  c.expect(worked.lambda == 2, "worked case: lambda != 2");
  c.expect(worked.xi == Rational(3), "worked case: xi != 3");
  c.expect(worked.permutation_sum == SignPolynomial{{0b011, 6}, {0b101, 6}, {0b110, 6}},
           "worked case: permutation sum is not 6 e2(s)");
  c.note = std::to_string(slots) + " (j,k,u,v) slots";
}

void zeta_agreement(Criterion& c) {
  unsigned count = 0;
  for (unsigned j = 0; j <= kZetaMax; ++j)
    for (unsigned k = 0; k <= kZetaMax; ++k)
      for (unsigned t = 0; t <= j + k + 1; ++t, ++count) {
        const mpz_class s = zeta_sum(j, k, t);
        c.expect(s == zeta_poly(j, k, t) && s == zeta_gamma(j, k, t) && s == zeta_range(j, k, t),
                 "zeta forms disagree at " + jk(j, k) + " t=" + std::to_string(t));
      }
  c.note = std::to_string(count) + " (j,k,t) triples";
}

void symmetries(Criterion& c) {
  for (unsigned n = 0; n <= kSymmetryMax; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      const SymmetryReport r = symmetry_report(WeylSpec{j, n - j});
      c.expect(r.reflection_ok, "reflection symmetry fails at " + jk(j, n - j));
      c.expect(r.middle_zero_ok, "middle coefficient nonzero at " + jk(j, n - j));
    }
  for (unsigned n = 0; n <= kHermiticityMax; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      const NormalPoly s = weyl_normal_form(WeylSpec{j, n - j});
      c.expect(np_adjoint(s) == s, "not self-adjoint at " + jk(j, n - j));
    }
  c.note = "reflection/middle to j+k=" + std::to_string(kSymmetryMax) + ", hermiticity to j+k=" +
           std::to_string(kHermiticityMax);
}

void blasiak_vs_rewriting(Criterion& c) {
  unsigned count = 0;
  auto compare = [&](const BosonWord& w) {
    ++count;
    c.expect(blasiak_normal_order(blockify(w)) == normal_order_word(w), "disagree on \"" + render_word(w) + "\"");
  };
  for (unsigned len = 0; len <= kExhaustiveWordLength; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      BosonWord w(len);
      for (unsigned i = 0; i < len; ++i) w[i] = (bits >> i) & 1u ? Boson::Annihilate : Boson::Create;
      compare(w);
    }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<unsigned> len_dist(0, kRandomWordLength);
  std::bernoulli_distribution coin(0.5);
  for (unsigned i = 0; i < kRandomWords; ++i) {
    BosonWord w(len_dist(rng));
    for (auto& b : w) b = coin(rng) ? Boson::Create : Boson::Annihilate;
    compare(w);
  }
  c.note = std::to_string(count) + " words";
}

void pinned_values(Criterion& c) {
  const Scalar half(Rational(1, 2));
  const Scalar half_i(0, Rational(1, 2), 0, 0);
  c.expect(weyl_normal_form(WeylSpec{1, 1}) == poly({{2, 0, half_i}, {0, 2, -half_i}}), "S_11");
  c.expect(weyl_normal_form(WeylSpec{2, 0}) == poly({{2, 0, half}, {1, 1, Scalar(1)}, {0, 2, half}, {0, 0, half}}),
           "S_20");
  c.expect(cg_weyl_monomial(1, 1) == poly({{1, 1, Scalar(1)}, {0, 0, half}}), "{a a†}_W");
  const NormalPoly a_adag = poly({{1, 1, Scalar(1)}, {0, 0, Scalar(1)}});
  const BosonWord w{Boson::Annihilate, Boson::Create};
  c.expect(normal_order_word(w) == a_adag, "a a† by rewriting");
  c.expect(blasiak_normal_order(blockify(w)) == a_adag, "a a† by Blasiak");
  c.expect(np_mul(NormalPoly::annihilation(), NormalPoly::creation()) == a_adag, "a a† by product");
  c.note = "S_11, S_20, {a a†}_W, a a†";
}

void quantizer(Criterion& c) {
  const ExpectedDynamics ho = quantize_system(load_system(std::string(WEYLNORM_DATA_DIR) + "/harmonic.json"));
  c.expect(ho.qdot_op == weyl_normal_form(WeylSpec{0, 1}), "harmonic qdot != S_01");
  c.expect(ho.pdot_op == weyl_normal_form(WeylSpec{1, 0}) * Scalar(-1), "harmonic pdot != -S_10");

  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<unsigned> total(0, kSystemMaxTotal), entries(1, 5);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
  auto rational = [&] { return Rational(num(rng), den(rng)); };
  auto side = [&] {
    PolySide s;
    for (unsigned e = entries(rng); e > 0; --e) {
      const unsigned n = total(rng);
      const unsigned j = std::uniform_int_distribution<unsigned>(0, n)(rng);
      Rational r = rational();
      r.canonicalize();
      s[{j, n - j}] += r;
    }
    return s;
  };
  for (unsigned i = 0; i < kRandomSystems; ++i) {
    const PolySystem f{side(), side()}, g{side(), side()};
    Rational alpha = rational(), beta = rational();
    alpha.canonicalize();
    beta.canonicalize();
    auto combine = [&](const PolySide& x, const PolySide& y) {
      PolySide out;
      for (const auto& [key, v] : x) out[key] += alpha * v;
      for (const auto& [key, v] : y) out[key] += beta * v;
      return out;
    };
    const ExpectedDynamics df = quantize_system(f), dg = quantize_system(g);
    const ExpectedDynamics dc = quantize_system(PolySystem{combine(f.qdot, g.qdot), combine(f.pdot, g.pdot)});
    c.expect(dc.qdot_op == df.qdot_op * Scalar(alpha) + dg.qdot_op * Scalar(beta), "qdot not linear");
    c.expect(dc.pdot_op == df.pdot_op * Scalar(alpha) + dg.pdot_op * Scalar(beta), "pdot not linear");
    for (const auto* d : {&df, &dg, &dc}) {
      c.expect(np_adjoint(d->qdot_op) == d->qdot_op, "qdot not self-adjoint");
      c.expect(np_adjoint(d->pdot_op) == d->pdot_op, "pdot not self-adjoint");
    }
  }
  c.note = "harmonic oscillator + " + std::to_string(kRandomSystems) + " random systems";
}

struct Process {
  int code;
  std::string out;
};

Process run_cli_binary(const std::string& args) {
  const std::string cmd = std::string(WEYLNORM_CLI_PATH) + " " + args + " 2>/dev/null";
  Process p{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

void cli_behaviour(Criterion& c) {
  const std::vector<std::string> commands{
      "weyl 3 2", "weyl 4 4 --format latex", "weyl 2 3 --format structured", "normal-order \"a^2 ad^3 a\"",
      "coeffs 3 3 --which h", "coeffs 5 2 --which zeta --format structured",
      "quantize " + std::string(WEYLNORM_DATA_DIR) + "/duffing.json"};
  for (const auto& cmd : commands) {
    const Process a = run_cli_binary(cmd), b = run_cli_binary(cmd);
    c.expect(a.code == 0 && !a.out.empty(), "`" + cmd + "` failed");
    c.expect(a.out == b.out, "`" + cmd + "` is not deterministic");
  }
  unsigned compared = 0;
  for (unsigned n = 0; n <= kForcedMax; ++n)
    for (unsigned j = 0; j <= n; ++j)
      for (const char* format : {"plain", "structured"}) {
        const std::string base = "weyl " + std::to_string(j) + " " + std::to_string(n - j) + " --format " + format;
        const std::string closed = run_cli_binary(base + " --method closed").out;
        for (const char* method : {"brute", "forced", "cg"}) {
          ++compared;
          c.expect(run_cli_binary(base + " --method " + method).out == closed,
                   std::string(method) + " output differs at " + jk(j, n - j));
        }
      }
  const Process check = run_cli_binary("check --max 6");
  c.expect(check.code == 0, "`check --max 6` exited " + std::to_string(check.code));
  c.note = std::to_string(compared) + " route byte comparisons, check --max 6 exit " + std::to_string(check.code);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"AC1 route equality closed=brute=cg, j+k<=10, under 5 min", route_equality},
      {"AC2 forced orderings equal distinct orderings, j+k<=8", forced_equality},
      {"AC3 eta permutation sum = lambda*xi*zeta, j+k<=6", eta_decomposition},
      {"AC4 zeta sum/poly/gamma/range agree, j,k<=20", zeta_agreement},
      {"AC5 reflection, middle-zero and hermiticity symmetries", symmetries},
      {"AC6 Blasiak formula equals rewriting on boson words", blasiak_vs_rewriting},
      {"AC7 pinned values", pinned_values},
      {"AC8 quantizer: harmonic oscillator, linearity, self-adjointness", quantizer},
      {"AC9 CLI determinism, route byte-equality, check --max 6", cli_behaviour},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Criterion c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    if (c.ok()) {
      std::cout << "[PASS] " << name << " (" << c.note << ")\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << name << ": " << c.message() << "\n";
    }
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
