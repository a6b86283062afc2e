#include "weylnorm/cli.hpp"

#include "weylnorm/alt_routes.hpp"
#include "weylnorm/quantizer.hpp"
#include "weylnorm/textio.hpp"
#include "weylnorm/verify.hpp"
#include "weylnorm/weyl_closed.hpp"
#include "weylnorm/weyl_enum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <ostream>
#include <sstream>

namespace weylnorm {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, Format> kFormats{
    {"plain", Format::Plain}, {"latex", Format::Latex}, {"structured", Format::Structured}};

struct WeylArgs {
  unsigned j = 0, k = 0;
  std::string method = "closed";
  Format format = Format::Plain;
  unsigned forced_cap = kDefaultForcedCap;
};

struct NormalOrderArgs {
  std::string expr;
  std::string route = "rewrite";
  Format format = Format::Plain;
};

struct CoeffsArgs {
  unsigned j = 0, k = 0;
  std::string which = "h";
  Format format = Format::Plain;
};

struct QuantizeArgs {
  std::string path;
  Format format = Format::Plain;
};

struct CheckArgs {
  CheckOptions options;
  std::vector<unsigned> tamper;
};

int cmd_weyl(const WeylArgs& a, std::ostream& out, std::ostream& err) {
  const WeylSpec spec{a.j, a.k};
  NormalPoly result;
  if (a.method == "closed") result = weyl_normal_form(spec);
  else if (a.method == "brute") result = weyl_bruteforce(spec);
  else if (a.method == "forced") result = weyl_forced(spec, a.forced_cap);
  else result = weyl_via_cg(spec);

  if (a.format == Format::Structured) {
    out << render_weyl_structured(spec, result) << "\n";
    return kExitOk;
  }
  err << "# weyl j=" << a.j << " k=" << a.k << " method=" << a.method << " hbar^(" << spec.total() << "/2)\n";
  out << render(result, a.format) << "\n";
  return kExitOk;
}

int cmd_normal_order(const NormalOrderArgs& a, std::ostream& out, std::ostream& err) {
  const BosonWord w = parse_boson_word(a.expr);
  const NormalPoly rewritten = normal_order_word(w);
  const NormalPoly blasiak = blasiak_normal_order(blockify(w));
  if (rewritten != blasiak) {
    err << "error: routes disagree on \"" << render_word(w) << "\": rewrite " << render(rewritten, Format::Plain)
        << ", blasiak " << render(blasiak, Format::Plain) << "\n";
    return kExitVerificationFailed;
  }
  out << render(a.route == "blasiak" ? blasiak : rewritten, a.format) << "\n";
  return kExitOk;
}

int cmd_coeffs(const CoeffsArgs& a, std::ostream& out) {
  const unsigned n = a.j + a.k;
  struct Row {
    std::vector<std::pair<std::string, unsigned>> key;
    Scalar value;
  };
  std::vector<Row> rows;
  if (a.which == "zeta") {
    for (unsigned t = 0; t <= n; ++t) rows.push_back({{{"t", t}}, Scalar(Rational(zeta_poly(a.j, a.k, t)))});
  } else {
    for (unsigned u = 0; 2 * u <= n; ++u) {
      for (unsigned v = 0; v <= n - 2 * u; ++v) {
        Scalar value;
        if (a.which == "h") value = h_coeff(a.j, a.k, u, v);
        else if (a.which == "lambda") value = Scalar(Rational(lambda_factor(a.j, a.k, u, v)));
        else value = Scalar(xi_factor(a.j, a.k, u, v));
        rows.push_back({{{"u", u}, {"v", v}}, value});
      }
    }
  }

  if (a.format == Format::Structured) {
    json doc;
    doc["j"] = a.j;
    doc["k"] = a.k;
    doc["which"] = a.which;
    json entries = json::array();
    for (const auto& row : rows) {
      json e;
      for (const auto& [name, idx] : row.key) e[name] = idx;
      if (a.which == "h") {
        e["x_re"] = rational_to_fraction(row.value.x_re());
        e["x_im"] = rational_to_fraction(row.value.x_im());
        e["y_re"] = rational_to_fraction(row.value.y_re());
        e["y_im"] = rational_to_fraction(row.value.y_im());
      } else {
        e["value"] = rational_to_fraction(row.value.x_re());
      }
      entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    out << doc.dump() << "\n";
    return kExitOk;
  }

  for (const auto& row : rows) {
    if (a.format == Format::Latex) {
      std::string sub = std::to_string(a.j) + "," + std::to_string(a.k);
      for (const auto& [name, idx] : row.key) sub += "," + std::to_string(idx);
      const std::string symbol = a.which == "h" ? "h" : "\\" + a.which;
      out << symbol << "_{" << sub << "} = " << scalar_text(row.value, Format::Latex) << " \\\\\n";
    } else {
      out << a.which;
      for (const auto& [name, idx] : row.key) out << " " << name << "=" << idx;
      out << ": " << scalar_text(row.value, Format::Plain) << "\n";
    }
  }
  return kExitOk;
}

int cmd_quantize(const QuantizeArgs& a, std::ostream& out) {
  const PolySystem sys = load_system(a.path);
  out << render_dynamics(quantize_system(sys), a.format) << "\n";
  return kExitOk;
}

int cmd_check(CheckArgs a, std::ostream& out, std::ostream& err) {
  if (!a.tamper.empty()) {
    const std::vector<unsigned> t = a.tamper;
    a.options.tamper_h = [t](HCoeffTable& table) {
      if (table.spec.j == t[0] && table.spec.k == t[1]) {
        auto it = table.entries.find({t[2], t[3]});
        if (it != table.entries.end()) it->second += Scalar(1);
      }
    };
  }
  const CheckReport report = run_checks(a.options);
  out << report.summary() << "\n";
  if (!report.ok()) {
    err << "error: " << *report.first_failure << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

void add_format(CLI::App* cmd, Format& target) {
  cmd->add_option("--format", target, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("plain");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal-ordered Weyl ordering of q^j p^k, by several exact routes", "weylnorm"};
  app.require_subcommand(1);

  WeylArgs weyl;
  auto* weyl_cmd = app.add_subcommand("weyl", "Normal-ordered Weyl ordering of q^j p^k");
  weyl_cmd->add_option("j", weyl.j, "Power of q")->required();
  weyl_cmd->add_option("k", weyl.k, "Power of p")->required();
  weyl_cmd->add_option("--method", weyl.method, "Route: closed, brute, forced or cg")
      ->check(CLI::IsMember({"closed", "brute", "forced", "cg"}))
      ->capture_default_str();
  weyl_cmd->add_option("--forced-cap", weyl.forced_cap, "Largest j+k for --method forced")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(weyl_cmd, weyl.format);

  NormalOrderArgs no;
  auto* no_cmd = app.add_subcommand("normal-order", "Normal-order a boson word such as \"a^2 ad^2\"");
  no_cmd->add_option("expr", no.expr, "Word over a and ad")->required();
  no_cmd->add_option("--route", no.route, "rewrite or blasiak")
      ->check(CLI::IsMember({"rewrite", "blasiak"}))
      ->capture_default_str();
  add_format(no_cmd, no.format);

  CoeffsArgs coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficient tables for one (j,k)");
  coeffs_cmd->add_option("j", coeffs.j, "Power of q")->required();
  coeffs_cmd->add_option("k", coeffs.k, "Power of p")->required();
  coeffs_cmd->add_option("--which", coeffs.which, "h, zeta, lambda or xi")
      ->check(CLI::IsMember({"h", "zeta", "lambda", "xi"}))
      ->capture_default_str();
  add_format(coeffs_cmd, coeffs.format);

  QuantizeArgs quant;
  auto* quant_cmd = app.add_subcommand("quantize", "Weyl-quantize a polynomial system file");
  quant_cmd->add_option("path", quant.path, "System document")->required();
  add_format(quant_cmd, quant.format);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Cross-route verification sweep");
  check_cmd->add_option("--max", check.options.max_degree, "Largest j+k")->capture_default_str();
  check_cmd->add_option("--forced-cap", check.options.forced_cap, "Largest j+k for forced orderings")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check_cmd->add_option("--eta-cap", check.options.eta_cap, "Largest j+k for the eta oracle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check_cmd->add_option("--sweep-cap", check.options.sweep_cap, "Largest j+k for route sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check_cmd->add_flag("--parallel", check.options.parallel, "Run per-(j,k) tasks on all cores");
  check_cmd->add_option("--tamper-h", check.tamper, "Test hook: add 1 to h at J,K,U,V")
      ->delimiter(',')
      ->expected(4)
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*weyl_cmd) return cmd_weyl(weyl, out, err);
    if (*no_cmd) return cmd_normal_order(no, out, err);
    if (*coeffs_cmd) return cmd_coeffs(coeffs, out);
    if (*quant_cmd) return cmd_quantize(quant, out);
    if (*check_cmd) return cmd_check(check, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace weylnorm
