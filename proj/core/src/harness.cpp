#include "polyfib/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "polyfib/errors.hpp"
#include "polyfib/expression.hpp"
#include "polyfib/polylog.hpp"

namespace polyfib {
namespace detail {
extern const char* const kRegistryJson;
}

namespace {

using json = nlohmann::ordered_json;

constexpr std::pair<PlanOp, std::string_view> kOpNames[] = {
    {PlanOp::DirectSum, "direct_sum"},
    {PlanOp::PolylogForm, "polylog_form"},
    {PlanOp::BernoulliForm, "bernoulli_form"},
    {PlanOp::QuarterSeriesForm, "quarter_series_form"},
    {PlanOp::GeneratingFunction, "generating_function"},
    {PlanOp::LogSeriesForm, "log_series_form"},
    {PlanOp::TrigSeriesForm, "trig_series_form"},
    {PlanOp::Abel, "abel"},
    {PlanOp::NamedConstant, "named_constant"},
    {PlanOp::SpecialValue, "special_value"},
    {PlanOp::Expr, "expr"},
};

PlanOp op_from_string(std::string_view name) {
  for (const auto& [op, text] : kOpNames) {
    if (text == name) return op;
  }
  throw DomainError("registry: unknown plan op '" + std::string(name) + "'");
}

Plan parse_plan(const json& j) {
  Plan p;
  p.op = op_from_string(j.at("op").get<std::string>());
  if (j.contains("family")) p.family = family_from_string(j["family"].get<std::string>());
  if (j.contains("weight")) p.weight = weight_from_string(j["weight"].get<std::string>());
  p.r = j.value("r", p.r);
  p.s = j.value("s", p.s);
  p.k = j.value("k", p.k);
  p.z = j.value("z", p.z);
  p.x = j.value("x", p.x);
  p.start = j.value("start", p.start);
  if (j.contains("side")) {
    const std::string side = j["side"].get<std::string>();
    if (side != "upper" && side != "lower") throw DomainError("registry: bad side '" + side + "'");
    p.side = side == "upper" ? Side::Upper : Side::Lower;
  }
  p.levels = j.value("levels", p.levels);
  p.name = j.value("name", p.name);
  p.index = j.value("index", p.index);
  p.expr = j.value("expr", p.expr);
  if (p.op == PlanOp::Expr && p.expr.empty()) throw DomainError("registry: expr plan without expression");
  return p;
}

struct PlanResult {
  Complex value;
  std::optional<Real> abel_estimate;
};

PlanResult evaluate(const Plan& plan, Bits prec) {
  switch (plan.op) {
    case PlanOp::DirectSum: return {direct_sum(plan.series_spec(prec), prec).value, std::nullopt};
    case PlanOp::PolylogForm: return {polylog_form(plan.series_spec(prec), prec).value, std::nullopt};
    case PlanOp::BernoulliForm: return {bernoulli_form(plan.series_spec(prec), prec).value, std::nullopt};
    case PlanOp::QuarterSeriesForm:
      return {quarter_series_form(plan.family, plan.r, plan.k, prec).value, std::nullopt};
    case PlanOp::GeneratingFunction:
      return {generating_function(plan.series_spec(prec), prec).value, std::nullopt};
    case PlanOp::LogSeriesForm: return {log_series_form(plan.series_spec(prec), prec).value, std::nullopt};
    case PlanOp::TrigSeriesForm: return {trig_series_form(plan.series_spec(prec), prec).value, std::nullopt};
    case PlanOp::Abel: {
      SeriesValue v = abel_regularized_sum(plan.series_spec(prec), plan.levels, prec);
      return {v.value, v.error_estimate};
    }
    case PlanOp::NamedConstant:
      return {named_constant(named_constant_from_string(plan.name), plan.index, prec).value, std::nullopt};
    case PlanOp::SpecialValue:
      return {Complex(special_value(special_value_from_string(plan.name), prec)), std::nullopt};
    case PlanOp::Expr: return {evaluate_expression(plan.expr, prec), std::nullopt};
  }
  throw std::logic_error("unhandled plan op");
}

std::string sci(const Real& x, int digits) { return x.to_string(digits); }

std::string status_text(const VerificationReport& r) {
  if (r.status == Status::Skipped) return "skipped(" + r.reason + ")";
  return std::string(to_string(r.status));
}

int value_digits(Bits prec) { return std::max<int>(4, static_cast<int>(prec / 4)); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

SeriesSpec Plan::series_spec(Bits prec) const {
  SeriesSpec spec;
  spec.family = family;
  spec.weight = weight;
  spec.r = r;
  spec.s = s;
  spec.k = k;
  spec.z = evaluate_expression(z, prec + kGuardBits);
  spec.x = evaluate_real_expression(x, prec + kGuardBits);
  spec.start = start;
  spec.side = side;
  return spec;
}

std::string method_tag(const Plan& plan) {
  switch (plan.op) {
    case PlanOp::DirectSum: return "direct";
    case PlanOp::PolylogForm: return "polylog_form";
    case PlanOp::BernoulliForm:
    case PlanOp::QuarterSeriesForm: return "bernoulli_form";
    case PlanOp::GeneratingFunction: return "rational_gf";
    case PlanOp::LogSeriesForm: return "log_form";
    case PlanOp::TrigSeriesForm: return "trig_form";
    case PlanOp::Abel: return "abel_oracle";
    case PlanOp::NamedConstant: return "named_constant";
    case PlanOp::SpecialValue: return "special_value";
    case PlanOp::Expr:
      if (expression_uses_log_expansion(plan.expr)) return "log_expansion";
      if (expression_uses_polylog(plan.expr)) return "polylog";
      return "closed_form";
  }
  return "?";
}

std::string_view to_string(PlanOp op) {
  for (const auto& [o, text] : kOpNames) {
    if (o == op) return text;
  }
  return "?";
}

std::string_view to_string(RecordClass c) {
  return c == RecordClass::Verification ? "verification" : "derivation_check";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::vector<IdentityRecord> parse_registry(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("registry: ") + e.what());
  }
  std::vector<IdentityRecord> out;
  try {
    for (const json& j : doc.at("records")) {
      IdentityRecord rec;
      rec.id = j.at("id").get<std::string>();
      rec.anchor = j.at("anchor").get<std::string>();
      const std::string cls = j.value("class", std::string("verification"));
      if (cls == "verification") rec.record_class = RecordClass::Verification;
      else if (cls == "derivation_check") rec.record_class = RecordClass::DerivationCheck;
      else throw DomainError("registry: unknown class '" + cls + "' in " + rec.id);
      rec.lhs = parse_plan(j.at("lhs"));
      rec.rhs = parse_plan(j.at("rhs"));
      rec.domain = j.value("domain", std::string());
      if (j.contains("skip")) rec.skip_reason = j["skip"].get<std::string>();
      rec.regularized = j.value("regularized", false);
      rec.abel_check = j.value("abel_check", false);
      out.push_back(std::move(rec));
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("registry: ") + e.what());
  }
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      if (out[a].id == out[b].id) throw DomainError("registry: duplicate id " + out[a].id);
    }
  }
  return out;
}

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> records = parse_registry(detail::kRegistryJson);
  return records;
}

Real tolerance(Bits prec) { return Real::exp2i(24 - prec, 64); }

VerificationReport verify(std::string_view id, Bits prec) {
  for (const IdentityRecord& rec : registry()) {
    if (rec.id == id) return verify(rec, prec);
  }
  throw UnknownIdError("unknown identity id: " + std::string(id));
}

VerificationReport verify(const IdentityRecord& record, Bits prec) {
  if (prec < kMinPrecision) throw DomainError("precision below " + std::to_string(kMinPrecision) + " bits");
  const auto started = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = record.id;
  rep.prec = prec;
  rep.lhs_value = Complex(prec);
  rep.rhs_value = Complex(prec);
  rep.abs_error = Real(0L, 64);
  rep.rel_error = Real(0L, 64);
  auto finish = [&]() {
    rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
  };
  if (record.skip_reason) {
    rep.status = Status::Skipped;
    rep.reason = *record.skip_reason;
    return finish();
  }
  try {
    PlanResult lhs = evaluate(record.lhs, prec);
    PlanResult rhs = evaluate(record.rhs, prec);
    rep.lhs_value = lhs.value.rounded(prec);
    rep.rhs_value = rhs.value.rounded(prec);
    const Complex diff = lhs.value - rhs.value;
    rep.abs_error = abs(diff).rounded(64);
    const Real scale = max(abs(lhs.value), abs(rhs.value));
    if (!scale.is_zero()) rep.rel_error = (abs(diff) / scale).rounded(64);

    std::optional<Real> abel_estimate = lhs.abel_estimate ? lhs.abel_estimate : rhs.abel_estimate;
    const bool pass =
        abel_estimate ? rep.abs_error <= *abel_estimate : rep.rel_error < tolerance(prec);
    rep.status = pass ? Status::Pass : Status::Fail;
    if (!pass) {
      rep.reason = abel_estimate ? "exceeds Abel estimate " + sci(*abel_estimate, 3)
                                 : "relative error above 2^" + std::to_string(24 - prec);
    }
    if (record.abel_check) {
      SeriesValue abel = abel_regularized_sum(record.lhs.series_spec(prec), 8, prec);
      rep.abel_error = abs(abel.value - lhs.value).to_double();
      if (!(*rep.abel_error < 1e-6)) {
        rep.status = Status::Fail;
        rep.reason = "Abel cross-check off by " + std::to_string(*rep.abel_error);
      }
    }
  } catch (const std::exception& e) {
    rep.status = Status::Fail;
    rep.reason = e.what();
  }
  return finish();
}

std::vector<VerificationReport> verify_all(const std::vector<IdentityRecord>& records, Bits prec,
                                           unsigned workers) {
  if (prec < kMinPrecision) throw DomainError("precision below " + std::to_string(kMinPrecision) + " bits");
  std::vector<VerificationReport> reports(records.size());
  if (records.empty()) return reports;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(records.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < records.size(); i = next++) reports[i] = verify(records[i], prec);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  return reports;
}

std::vector<VerificationReport> verify_all(Bits prec, unsigned workers) {
  return verify_all(registry(), prec, workers);
}

VerificationSummary summarize(const std::vector<VerificationReport>& reports) {
  VerificationSummary s;
  for (const VerificationReport& r : reports) {
    switch (r.status) {
      case Status::Pass: ++s.passed; break;
      case Status::Fail: ++s.failed; break;
      case Status::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

std::vector<std::string> independence_violations(const std::vector<IdentityRecord>& records) {
  std::vector<std::string> out;
  for (const IdentityRecord& rec : records) {
    if (rec.record_class != RecordClass::Verification) continue;
    if (method_tag(rec.lhs) == method_tag(rec.rhs)) out.push_back(rec.id);
  }
  return out;
}

std::string format_table(const std::vector<VerificationReport>& reports) {
  std::size_t width = 2;
  for (const VerificationReport& r : reports) width = std::max(width, r.id.size());
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s %5s %12s %12s %8s  %s\n", static_cast<int>(width), "id", "prec",
                "abs_error", "rel_error", "elapsed", "status");
  out << line;
  for (const VerificationReport& r : reports) {
    std::snprintf(line, sizeof line, "%-*s %5ld %12.3e %12.3e %8.3f  ", static_cast<int>(width), r.id.c_str(),
                  static_cast<long>(r.prec), r.abs_error.to_double(), r.rel_error.to_double(), r.elapsed);
    out << line << status_text(r);
    if (r.status == Status::Fail && !r.reason.empty()) out << "  " << r.reason;
    out << '\n';
  }
  const VerificationSummary s = summarize(reports);
  out << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
  return out.str();
}

std::string format_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const VerificationReport& r : reports) {
    const int digits = value_digits(r.prec);
    json j;
    j["id"] = r.id;
    j["prec"] = r.prec;
    j["lhs_value"] = {{"re", sci(r.lhs_value.re(), digits)}, {"im", sci(r.lhs_value.im(), digits)}};
    j["rhs_value"] = {{"re", sci(r.rhs_value.re(), digits)}, {"im", sci(r.rhs_value.im(), digits)}};
    j["abs_error"] = sci(r.abs_error, 6);
    j["rel_error"] = sci(r.rel_error, 6);
    j["status"] = to_string(r.status);
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["elapsed"] = r.elapsed;
    if (r.abel_error) j["abel_error"] = *r.abel_error;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string format_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "id,prec,abs_error,rel_error,status,elapsed\n";
  for (const VerificationReport& r : reports) {
    out << csv_field(r.id) << ',' << r.prec << ',' << sci(r.abs_error, 6) << ',' << sci(r.rel_error, 6) << ','
        << csv_field(status_text(r)) << ',' << fixed_seconds(r.elapsed) << '\n';
  }
  return out.str();
}

}  // namespace polyfib
