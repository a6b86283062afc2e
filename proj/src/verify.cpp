#include "weylnorm/verify.hpp"

#include "weylnorm/alt_routes.hpp"
#include "weylnorm/textio.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace weylnorm {

namespace {

using Outcome = std::optional<std::string>;

std::vector<WeylSpec> specs_up_to(unsigned max_total) {
  std::vector<WeylSpec> out;
  for (unsigned n = 0; n <= max_total; ++n)
    for (unsigned j = 0; j <= n; ++j) out.push_back({j, n - j});
  return out;
}

std::string jk(const WeylSpec& s) { return "j=" + std::to_string(s.j) + " k=" + std::to_string(s.k); }

// Runs one task per item; results come back in item order either way.
template <typename Item, typename Fn>
std::vector<Outcome> run_all(const std::vector<Item>& items, bool parallel, Fn fn) {
  std::vector<Outcome> out(items.size());
  auto guarded = [&fn](const Item& item) -> Outcome {
    try {
      return fn(item);
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  };
  if (!parallel) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = guarded(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) out[i] = guarded(items[i]);
  };
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

void record(CheckReport& report, const std::string& name, const std::vector<Outcome>& outcomes) {
  CheckCount count{name, 0, outcomes.size()};
  for (const auto& o : outcomes) {
    if (!o) ++count.passed;
    else if (!report.first_failure) report.first_failure = name + ": " + *o;
  }
  report.counts.push_back(std::move(count));
}

// First differing monomial between two polys, described with its (u,v) slot.
std::string first_difference(const WeylSpec& spec, const NormalPoly& lhs, const char* lhs_name,
                             const NormalPoly& rhs, const char* rhs_name) {
  const NormalPoly diff = lhs - rhs;
  const Monomial mono = diff.terms().begin()->first;
  std::ostringstream os;
  os << jk(spec);
  const unsigned n = spec.total();
  if (mono.degree() <= n && (n - mono.degree()) % 2 == 0)
    os << " u=" << (n - mono.degree()) / 2 << " v=" << mono.n;
  os << " term ad^" << mono.m << " a^" << mono.n << ": " << lhs_name << " = "
     << scalar_text(lhs.coeff(mono.m, mono.n), Format::Plain) << ", " << rhs_name << " = "
     << scalar_text(rhs.coeff(mono.m, mono.n), Format::Plain);
  return os.str();
}

HCoeffTable closed_table(const WeylSpec& spec, const CheckOptions& options) {
  HCoeffTable table = h_table(spec);
  if (options.tamper_h) options.tamper_h(table);
  return table;
}

std::vector<BosonWord> all_words(unsigned max_len) {
  std::vector<BosonWord> out;
  for (unsigned len = 0; len <= max_len; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      BosonWord w(len);
      for (unsigned i = 0; i < len; ++i) w[i] = (bits >> i) & 1u ? Boson::Annihilate : Boson::Create;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& c : counts) os << c.name << ": " << c.passed << "/" << c.total << " passed\n";
  os << (ok() ? "all checks passed" : "FAILED " + *first_failure);
  return os.str();
}

CheckReport run_checks(const CheckOptions& options) {
  CheckReport report;
  const unsigned max = options.max_degree;
  const bool par = options.parallel;

  const auto all = specs_up_to(max);
  record(report, "zeta-agreement", run_all(all, par, [](const WeylSpec& s) -> Outcome {
           for (unsigned t = 0; t <= s.total() + 1; ++t) {
             const mpz_class a = zeta_sum(s.j, s.k, t), b = zeta_poly(s.j, s.k, t), c = zeta_gamma(s.j, s.k, t),
                             d = zeta_range(s.j, s.k, t);
             if (a != b || a != c || a != d)
               return jk(s) + " t=" + std::to_string(t) + ": sum " + a.get_str() + ", poly " + b.get_str() +
                      ", gamma " + c.get_str() + ", range " + d.get_str();
           }
           return std::nullopt;
         }));

  const auto swept = specs_up_to(std::min(max, options.sweep_cap));
  record(report, "closed=brute=cg", run_all(swept, par, [&](const WeylSpec& s) -> Outcome {
           const NormalPoly closed = weyl_normal_form(closed_table(s, options));
           const NormalPoly brute = weyl_bruteforce(s);
           if (closed != brute) return first_difference(s, closed, "closed", brute, "brute");
           const NormalPoly cg = weyl_via_cg(s);
           if (cg != brute) return first_difference(s, cg, "cg", brute, "brute");
           return std::nullopt;
         }));

  const auto forced = specs_up_to(std::min(max, options.forced_cap));
  record(report, "forced=brute", run_all(forced, par, [&](const WeylSpec& s) -> Outcome {
           const NormalPoly f = weyl_forced(s, options.forced_cap);
           const NormalPoly b = weyl_bruteforce(s);
           if (f != b) return first_difference(s, f, "forced", b, "brute");
           return std::nullopt;
         }));

  const auto eta = specs_up_to(std::min(max, options.eta_cap));
  record(report, "eta-decomposition", run_all(eta, par, [&](const WeylSpec& s) -> Outcome {
           for (unsigned u = 0; 2 * u <= s.total(); ++u)
             for (unsigned v = 0; v <= s.total() - 2 * u; ++v) {
               const EtaReport r = eta_decomposition_check(s, u, v, options.eta_cap);
               if (!r.ok())
                 return jk(s) + " u=" + std::to_string(u) + " v=" + std::to_string(v) +
                        ": permutation sum at canonical signs " + r.canonical_value.get_str() +
                        ", lambda*xi*zeta = " + Rational(Rational(r.lambda) * r.xi * Rational(r.zeta)).get_str();
             }
           return std::nullopt;
         }));

  std::vector<SymmetryReport> symmetry(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) symmetry[i] = symmetry_report(closed_table(all[i], options));
  auto symmetry_outcomes = [&](bool middle) {
    std::vector<Outcome> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& r = symmetry[i];
      const auto& failures = middle ? r.middle_failures : r.reflection_failures;
      if (failures.empty()) {
        out.emplace_back();
        continue;
      }
      const auto& w = failures.front();
      out.push_back(jk(all[i]) + " u=" + std::to_string(w.u) + " v=" + std::to_string(w.v) + " partner v=" +
                    std::to_string(w.v_partner) + ": " + scalar_text(w.lhs, Format::Plain) + " vs " +
                    scalar_text(w.rhs, Format::Plain));
    }
    return out;
  };
  record(report, "reflection-symmetry", symmetry_outcomes(false));
  record(report, "middle-zero", symmetry_outcomes(true));

  record(report, "hermiticity", run_all(all, par, [&](const WeylSpec& s) -> Outcome {
           const NormalPoly p = weyl_normal_form(closed_table(s, options));
           if (p.adjoint() != p) return first_difference(s, p.adjoint(), "adjoint", p, "closed");
           return std::nullopt;
         }));

  const auto words = all_words(std::min(max, options.sweep_cap));
  record(report, "blasiak=rewrite", run_all(words, par, [](const BosonWord& w) -> Outcome {
           const NormalPoly a = blasiak_normal_order(blockify(w));
           const NormalPoly b = normal_order_word(w);
           if (a != b) return "word \"" + render_word(w) + "\": blasiak " + render(a, Format::Plain) +
                              ", rewrite " + render(b, Format::Plain);
           return std::nullopt;
         }));

  return report;
}

}  // namespace weylnorm
