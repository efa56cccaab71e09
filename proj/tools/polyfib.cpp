// polyfib command-line front end.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyfib/bernoulli.hpp"
#include "polyfib/errors.hpp"
#include "polyfib/expression.hpp"
#include "polyfib/fibseries.hpp"
#include "polyfib/harness.hpp"
#include "polyfib/polylog.hpp"
#include "polyfib/seqcore.hpp"

namespace {

using namespace polyfib;
using json = nlohmann::ordered_json;

constexpr long kDefaultPrec = 128;

long default_prec() {
  if (const char* env = std::getenv("POLYFIB_PREC")) {
    try {
      const long p = std::stol(env);
      if (p >= kMinPrecision) return p;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring POLYFIB_PREC=" << env << "\n";
  }
  return kDefaultPrec;
}

int digits_for(Bits prec) { return std::max<int>(4, static_cast<int>(prec / 4)); }

// "RE" or "RE,IM"; each part may be an expression such as 1/2 or -alpha.
Complex parse_point(const std::string& text, Bits prec) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return evaluate_expression(text, prec);
  Real re = evaluate_real_expression(text.substr(0, comma), prec);
  Real im = evaluate_real_expression(text.substr(comma + 1), prec);
  return Complex(std::move(re), std::move(im));
}

Side parse_side(const std::string& s) { return s == "lower" ? Side::Lower : Side::Upper; }

void print_complex(const Complex& v, int digits) {
  std::cout << v.re().to_string(digits);
  if (!v.is_real()) std::cout << (v.im().sign() < 0 ? " - " : " + ") << abs(v.im()).to_string(digits) << " i";
  std::cout << "\n";
}

struct SeriesOptions {
  std::string family = "F";
  std::string weight = "auto";
  long r = 1;
  long s = 0;
  long k = 0;
  std::string z = "0";
  std::string x = "0";
  std::string part;
  std::string method = "auto";
  std::string side = "upper";
  int start = 1;
  int levels = 8;
};

SeriesValue run_series(const SeriesOptions& o, const SeriesSpec& spec, Bits prec) {
  if (o.method == "direct") return direct_sum(spec, prec);
  if (o.method == "polylog") return polylog_form(spec, prec);
  if (o.method == "bernoulli") {
    if (spec.weight == Weight::Quarter) return quarter_series_form(spec.family, spec.r, spec.k, prec);
    return bernoulli_form(spec, prec);
  }
  if (o.method == "abel") return abel_regularized_sum(spec, o.levels, prec);
  // auto: a certified direct sum when it converges, otherwise a closed form.
  if (growth_ratio(spec, 64) < Real(1L, 64) || spec.z.is_zero()) return direct_sum(spec, prec);
  if (spec.weight == Weight::Alternating || spec.weight == Weight::Quarter) {
    try {
      if (spec.weight == Weight::Quarter) return quarter_series_form(spec.family, spec.r, spec.k, prec);
      return bernoulli_form(spec, prec);
    } catch (const DomainError&) {
    }
  }
  return polylog_form(spec, prec);
}

int cmd_series(const SeriesOptions& o, Bits prec, const std::string& format) {
  SeriesSpec spec;
  spec.family = family_from_string(o.family);
  spec.r = o.r;
  spec.s = o.s;
  spec.k = o.k;
  spec.z = parse_point(o.z, prec + kGuardBits);
  spec.x = evaluate_real_expression(o.x, prec + kGuardBits);
  spec.start = o.start;
  spec.side = parse_side(o.side);
  if (!o.part.empty()) {
    if (o.part != "cos" && o.part != "sin") throw DomainError("--part must be cos or sin");
    spec.weight = o.part == "cos" ? Weight::TrigCos : Weight::TrigSin;
  } else if (o.weight == "auto") {
    // z = -1 means the (-1)^{j-1} weighting used throughout the closed forms.
    spec.weight = spec.z == Complex(Real(-1L, 64)) ? Weight::Alternating : Weight::Plain;
  } else {
    spec.weight = weight_from_string(o.weight);
  }
  SeriesValue v = (spec.weight == Weight::TrigCos || spec.weight == Weight::TrigSin) && o.method == "auto" && spec.k == 1
                      ? trig_series_form(spec, prec)
                      : run_series(o, spec, prec);
  const int digits = digits_for(prec);
  if (format == "json") {
    json j{{"family", to_string(spec.family)}, {"weight", to_string(spec.weight)}, {"r", spec.r}, {"s", spec.s},
           {"k", spec.k}, {"z", o.z}, {"x", o.x}, {"start", spec.start}, {"prec", prec},
           {"value_re", v.value.re().to_string(digits)}, {"value_im", v.value.im().to_string(digits)},
           {"method", to_string(v.method)}, {"error_estimate", v.error_estimate.to_string(6)}};
    std::cout << j.dump(2) << "\n";
  } else {
    print_complex(v.value, digits);
    std::cout << "method " << to_string(v.method) << ", error estimate " << v.error_estimate.to_string(6) << "\n";
  }
  return 0;
}

int cmd_li(long k, const std::string& z_text, Bits prec, const std::string& side, const std::string& format) {
  const Complex z = parse_point(z_text, prec + kGuardBits);
  PolylogValue v = li(k, z, prec, parse_side(side));
  const int digits = digits_for(prec);
  if (format == "json") {
    json j{{"k", k},
           {"z", z_text},
           {"value_re", v.value.re().to_string(digits)},
           {"value_im", v.value.im().to_string(digits)},
           {"path", to_string(v.path)},
           {"tail_bound", v.tail_bound.to_string(6)}};
    std::cout << j.dump(2) << "\n";
  } else {
    print_complex(v.value, digits);
    std::cout << "path " << to_string(v.path) << ", tail bound " << v.tail_bound.to_string(6) << "\n";
  }
  return 0;
}

int cmd_verify(const std::optional<std::string>& id, Bits prec, unsigned workers, const std::string& format) {
  std::vector<VerificationReport> reports;
  if (id) reports.push_back(verify(*id, prec));
  else reports = verify_all(prec, workers);
  if (format == "json") std::cout << format_json(reports);
  else if (format == "csv") std::cout << format_csv(reports);
  else std::cout << format_table(reports);
  return summarize(reports).failed == 0 ? 0 : 1;
}

int cmd_audit() {
  const auto violations = independence_violations(registry());
  std::size_t verification = 0;
  for (const IdentityRecord& rec : registry()) {
    if (rec.record_class == RecordClass::Verification) ++verification;
  }
  for (const std::string& id : violations) std::cout << "shared method tag: " << id << "\n";
  std::cout << verification << " verification records, " << violations.size() << " violations\n";
  return violations.empty() ? 0 : 1;
}

int cmd_list() {
  for (const IdentityRecord& rec : registry()) {
    std::cout << rec.id << "  [" << to_string(rec.record_class) << "; " << method_tag(rec.lhs) << " vs "
              << method_tag(rec.rhs) << "]\n    " << rec.anchor << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polylogarithms, Bernoulli polynomials and Fibonacci/Lucas series"};
  app.require_subcommand(1);
  long prec = default_prec();

  auto add_prec = [&](CLI::App* sub) {
    sub->add_option("--prec", prec, "working precision in bits (default $POLYFIB_PREC or 128)")
        ->check(CLI::Range(static_cast<long>(kMinPrecision), 1L << 20));
  };

  long index = 0;
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci number F_n (n may be negative)");
  fib_cmd->add_option("n", index)->required()->allow_extra_args(false);
  auto* lucas_cmd = app.add_subcommand("lucas", "Lucas number L_n (n may be negative)");
  lucas_cmd->add_option("n", index)->required();

  unsigned long bk = 0;
  auto* bern_cmd = app.add_subcommand("bernoulli", "Bernoulli number B_k as an exact fraction");
  bern_cmd->add_option("k", bk)->required();

  std::string bre, bim = "0";
  auto* bpoly_cmd = app.add_subcommand("bpoly", "Bernoulli polynomial B_k(x) at a complex point");
  bpoly_cmd->add_option("k", bk)->required();
  bpoly_cmd->add_option("re", bre)->required();
  bpoly_cmd->add_option("im", bim);
  add_prec(bpoly_cmd);

  long li_k = 2;
  std::string li_z, side = "upper", format = "text";
  auto* li_cmd = app.add_subcommand("li", "Polylogarithm Li_k(z)");
  li_cmd->add_option("--k", li_k, "integer order")->required();
  li_cmd->add_option("--z", li_z, "argument RE[,IM]; parts may be expressions")->required();
  li_cmd->add_option("--side", side, "side of the cut for real z > 1")->check(CLI::IsMember({"upper", "lower"}));
  li_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_prec(li_cmd);

  SeriesOptions so;
  auto* series_cmd = app.add_subcommand("series", "Weighted Fibonacci/Lucas series");
  series_cmd->add_option("--family", so.family)->check(CLI::IsMember({"F", "L", "FF", "FL", "LL"}));
  series_cmd->add_option("--weight", so.weight)
      ->check(CLI::IsMember({"auto", "plain", "alternating", "quarter"}));
  series_cmd->add_option("--r", so.r);
  series_cmd->add_option("--s", so.s, "shift for F/L; second multiplier for products");
  series_cmd->add_option("--k", so.k);
  series_cmd->add_option("--z", so.z, "RE[,IM]");
  series_cmd->add_option("--x", so.x, "angle for --part");
  series_cmd->add_option("--part", so.part, "cos or sin weighting z^j cos(jx) / sin(jx)")
      ->check(CLI::IsMember({"cos", "sin"}));
  series_cmd->add_option("--method", so.method)
      ->check(CLI::IsMember({"auto", "direct", "polylog", "bernoulli", "abel"}));
  series_cmd->add_option("--side", so.side)->check(CLI::IsMember({"upper", "lower"}));
  series_cmd->add_option("--start", so.start, "first index (0 or 1)")->check(CLI::IsMember({0, 1}));
  series_cmd->add_option("--levels", so.levels, "Abel extrapolation levels");
  series_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_prec(series_cmd);

  std::string verify_id;
  bool verify_all_flag = false;
  unsigned workers = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check registry identities");
  auto* id_opt = verify_cmd->add_option("--id", verify_id, "single record id");
  auto* all_opt = verify_cmd->add_flag("--all", verify_all_flag, "every record");
  id_opt->excludes(all_opt);
  verify_cmd->add_option("--workers", workers, "worker threads (0 = hardware count)");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv", "text"}));
  add_prec(verify_cmd);

  auto* audit_cmd = app.add_subcommand("audit", "Independence audit of the registry");
  auto* list_cmd = app.add_subcommand("list", "List registry records");

  CLI11_PARSE(app, argc, argv);

  try {
    const Bits p = static_cast<Bits>(prec);
    if (*fib_cmd) {
      std::cout << fib(index).get_str() << "\n";
    } else if (*lucas_cmd) {
      std::cout << lucas(index).get_str() << "\n";
    } else if (*bern_cmd) {
      std::cout << bernoulli_number(bk).get_str() << "\n";
    } else if (*bpoly_cmd) {
      Complex x(evaluate_real_expression(bre, p + kGuardBits), evaluate_real_expression(bim, p + kGuardBits));
      print_complex(bernoulli_poly(bk, x).rounded(p), digits_for(p));
    } else if (*li_cmd) {
      return cmd_li(li_k, li_z, p, side, format);
    } else if (*series_cmd) {
      return cmd_series(so, p, format);
    } else if (*verify_cmd) {
      if (verify_id.empty() && !verify_all_flag) throw DomainError("verify needs --id ID or --all");
      const std::string f = format == "text" ? "table" : format;
      return cmd_verify(verify_id.empty() ? std::nullopt : std::optional<std::string>(verify_id), p, workers, f);
    } else if (*audit_cmd) {
      return cmd_audit();
    } else if (*list_cmd) {
      return cmd_list();
    }
  } catch (const UnknownIdError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
