#include <doctest.h>

#include <set>
#include <string>

#include "json.hpp"
#include "polyfib/errors.hpp"
#include "polyfib/expression.hpp"
#include "polyfib/harness.hpp"
#include "polyfib/seqcore.hpp"
#include "support.hpp"

using namespace polyfib;
using polyfib::testing::log2_rel;

namespace {

const IdentityRecord& find(const std::string& id) {
  for (const IdentityRecord& rec : registry()) {
    if (rec.id == id) return rec;
  }
  FAIL("missing record " << id);
  throw std::logic_error("unreachable");
}

bool same_report(const VerificationReport& a, const VerificationReport& b) {
  return a.id == b.id && a.prec == b.prec && a.lhs_value == b.lhs_value && a.rhs_value == b.rhs_value &&
         a.abs_error == b.abs_error && a.rel_error == b.rel_error && a.status == b.status && a.reason == b.reason &&
         a.abel_error == b.abel_error;
}

constexpr const char* kSynthetic = R"({"records": [
  {"id": "abel-L-r2-k2", "anchor": "alternating L_{2j}/j^2 by the Abel oracle",
   "lhs": {"op": "abel", "family": "L", "weight": "alternating", "r": 2, "k": 2},
   "rhs": {"op": "expr", "expr": "pi^2/6 + 2*log(alpha)^2"}},
  {"id": "abel-L-r2-k2-wrong", "anchor": "off by 1e-4",
   "lhs": {"op": "abel", "family": "L", "weight": "alternating", "r": 2, "k": 2},
   "rhs": {"op": "expr", "expr": "pi^2/6 + 2*log(alpha)^2 + 1e-4"}},
  {"id": "shared", "anchor": "both sides direct",
   "lhs": {"op": "direct_sum", "family": "F", "r": 1, "k": 2, "z": "1/2"},
   "rhs": {"op": "direct_sum", "family": "F", "r": 1, "k": 2, "z": "1/2"}},
  {"id": "shared-derivation", "anchor": "allowed for derivation checks", "class": "derivation_check",
   "lhs": {"op": "expr", "expr": "1"}, "rhs": {"op": "expr", "expr": "2/2"}},
  {"id": "broken", "anchor": "bad parity",
   "lhs": {"op": "bernoulli_form", "family": "F", "weight": "alternating", "r": 2, "k": 2},
   "rhs": {"op": "polylog_form", "family": "F", "weight": "alternating", "r": 2, "k": 2}}
]})";

}  // namespace

TEST_CASE("expression evaluator") {
  const Bits prec = 128;
  CHECK(evaluate_expression("1 + 2*3", prec) == Complex(Real(7L, prec)));
  CHECK(evaluate_expression("-2^2", prec) == Complex(Real(-4L, prec)));
  CHECK(evaluate_expression("(1/2)^-2", prec) == Complex(Real(4L, prec)));
  CHECK(evaluate_expression("F(10) - L(-3)", prec) == Complex(Real(59L, prec)));
  CHECK(log2_rel(evaluate_real_expression("alpha*beta", prec), Real(-1L, prec)) < -(prec - 4));
  CHECK(log2_rel(evaluate_real_expression("sqrt5^2", prec), Real(5L, prec)) < -(prec - 4));
  CHECK(log2_rel(evaluate_expression("i^2", prec), Complex(Real(-1L, prec))) < -(prec - 4));
  CHECK(log2_rel(evaluate_real_expression("1.5e2", prec), Real(150L, prec)) < -(prec - 4));
  CHECK(log2_rel(evaluate_real_expression("exp(log(3))", prec), Real(3L, prec)) < -(prec - 4));
  CHECK(log2_rel(evaluate_real_expression("4*atan(1)", prec), pi(prec)) < -(prec - 4));
  CHECK(log2_rel(evaluate_real_expression("cos(pi/3) + sin(0)", prec), Real(1L, prec) / 2L) < -(prec - 4));
  CHECK(log2_rel(evaluate_real_expression("zeta(2)", prec), pi(prec) * pi(prec) / 6L) < -(prec - 4));
  CHECK(log2_rel(evaluate_real_expression("Li(2,1/2)", prec),
                 evaluate_real_expression("pi^2/12 - log(2)^2/2", prec)) < -(prec - 8));
  CHECK(log2_rel(evaluate_expression("LiExp(2,-alpha)", prec), evaluate_expression("Li(2,-alpha)", prec)) <
        -(prec - 8));
  Complex lower = evaluate_expression("LiLower(2,3)", prec);
  CHECK(lower.im().sign() < 0);
  CHECK(log2_rel(evaluate_expression("sqrt(-4)", prec), Complex(Real(0L, prec), Real(2L, prec))) < -(prec - 4));

  CHECK_THROWS_AS(evaluate_expression("1 +", prec), DomainError);
  CHECK_THROWS_AS(evaluate_expression("foo", prec), DomainError);
  CHECK_THROWS_AS(evaluate_expression("log(1, 2)", prec), DomainError);
  CHECK_THROWS_AS(evaluate_expression("2^(1/2)", prec), DomainError);
  CHECK_THROWS_AS(evaluate_expression("1/0", prec), DomainError);
  CHECK_THROWS_AS(evaluate_expression("(1", prec), DomainError);
  CHECK_THROWS_AS(evaluate_real_expression("i", prec), DomainError);

  CHECK(expression_uses_polylog("Li(2, x)"));
  CHECK(expression_uses_polylog("2*LiLower (3,2)"));
  CHECK_FALSE(expression_uses_polylog("log(alpha)"));
  CHECK_FALSE(expression_uses_polylog("Lix"));
  CHECK(expression_uses_log_expansion("LiExp(2,beta)"));
  CHECK_FALSE(expression_uses_log_expansion("Li(2,beta)"));
}

TEST_CASE("registry shape") {
  const auto& recs = registry();
  CHECK(recs.size() >= 45);
  std::set<std::string> ids;
  for (const IdentityRecord& rec : recs) {
    CHECK(ids.insert(rec.id).second);
    CHECK_FALSE(rec.anchor.empty());
  }
  const IdentityRecord& f = find("alt-F-r2-k3-bernoulli");
  CHECK(f.lhs.op == PlanOp::BernoulliForm);
  CHECK(f.rhs.op == PlanOp::PolylogForm);
  CHECK(f.regularized);
  CHECK(f.abel_check);
  const IdentityRecord& l = find("L-half-k2-constant");
  CHECK(l.lhs.op == PlanOp::DirectSum);
  CHECK(l.rhs.op == PlanOp::NamedConstant);
  CHECK_FALSE(l.regularized);
  const IdentityRecord& d = find("dilog-minus-alpha-plus-minus-beta");
  CHECK(method_tag(d.lhs) == "polylog");
  CHECK(method_tag(d.rhs) == "closed_form");
  CHECK(find("alt-FF-r1-s3-k2-bernoulli").skip_reason.has_value());
}

TEST_CASE("independence audit") {
  CHECK(independence_violations(registry()).empty());
  const auto synthetic = parse_registry(kSynthetic);
  const auto bad = independence_violations(synthetic);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == "shared");
}

TEST_CASE("verify reports") {
  VerificationReport thm = verify("alt-L-r1-k3-constant", 192);
  CHECK(thm.status == Status::Pass);
  CHECK(thm.rel_error < Real::exp2i(-168, 64));
  CHECK(thm.abel_error.has_value());
  CHECK(*thm.abel_error < 1e-6);

  CHECK(verify("L-half-k2-constant", 64).status == Status::Pass);

  VerificationReport skipped = verify("alt-FF-r1-s3-k2-bernoulli", 128);
  CHECK(skipped.status == Status::Skipped);
  CHECK_FALSE(skipped.reason.empty());

  CHECK_THROWS_AS(verify("no-such-identity", 128), UnknownIdError);
  CHECK_THROWS_AS(verify("L-half-k2-constant", 32), DomainError);
}

TEST_CASE("abel plans use the oracle's own estimate") {
  const auto synthetic = parse_registry(kSynthetic);
  VerificationReport good = verify(synthetic[0], 128);
  CHECK(good.status == Status::Pass);
  CHECK(good.rel_error > tolerance(128));  // passes on the estimate, not the relative tolerance
  CHECK(verify(synthetic[1], 128).status == Status::Fail);
  VerificationReport broken = verify(synthetic[4], 128);
  CHECK(broken.status == Status::Fail);
  CHECK(broken.reason.find("k odd") != std::string::npos);
}

TEST_CASE("malformed registries are rejected") {
  CHECK_THROWS_AS(parse_registry("{"), DomainError);
  CHECK_THROWS_AS(parse_registry(R"({"records": [{"id": "x"}]})"), DomainError);
  CHECK_THROWS_AS(parse_registry(R"({"records": [{"id": "x", "anchor": "a",
      "lhs": {"op": "nope"}, "rhs": {"op": "expr", "expr": "1"}}]})"),
                  DomainError);
  CHECK_THROWS_AS(parse_registry(R"({"records": [
      {"id": "x", "anchor": "a", "lhs": {"op": "expr", "expr": "1"}, "rhs": {"op": "expr", "expr": "1"}},
      {"id": "x", "anchor": "a", "lhs": {"op": "expr", "expr": "1"}, "rhs": {"op": "expr", "expr": "1"}}]})"),
                  DomainError);
  CHECK(parse_registry(R"({"records": []})").empty());
}

TEST_CASE("verify_all is ordered and deterministic") {
  const Bits prec = 96;
  auto serial = verify_all(prec, 1);
  auto parallel = verify_all(prec, 4);
  REQUIRE(serial.size() == registry().size());
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].id == registry()[i].id);
    CHECK(same_report(serial[i], parallel[i]));
  }
  const VerificationSummary s = summarize(serial);
  CHECK(s.failed == 0);
  CHECK(s.passed + s.skipped == serial.size());
  CHECK(verify_all(std::vector<IdentityRecord>{}, prec, 4).empty());
}

TEST_CASE("tolerance is monotone in precision") {
  const auto high = verify_all(256, 0);
  const auto low = verify_all(128, 0);
  for (std::size_t i = 0; i < high.size(); ++i) {
    if (high[i].status != Status::Pass) continue;
    if (!(high[i].rel_error * 2L < tolerance(256))) continue;
    INFO(high[i].id);
    CHECK(low[i].status == Status::Pass);
  }
}

TEST_CASE("report formats") {
  std::vector<VerificationReport> reports{verify("L-half-k2-constant", 128), verify("alt-FF-r1-s3-k2-bernoulli", 128)};
  const std::string csv = format_csv(reports);
  CHECK(csv.rfind("id,prec,abs_error,rel_error,status,elapsed\n", 0) == 0);
  CHECK(csv.find("L-half-k2-constant,128,") != std::string::npos);
  CHECK(csv.find("skipped(") != std::string::npos);

  auto doc = nlohmann::json::parse(format_json(reports));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["id"] == "L-half-k2-constant");
  CHECK(doc[0]["status"] == "pass");
  CHECK(doc[0]["prec"] == 128);
  for (const char* key : {"lhs_value", "rhs_value", "abs_error", "rel_error", "elapsed"}) CHECK(doc[0].contains(key));
  CHECK(doc[1]["status"] == "skipped");
  CHECK(doc[1].contains("reason"));
  const double lhs = std::stod(doc[0]["lhs_value"]["re"].get<std::string>());
  CHECK(lhs == doctest::Approx(0.8051436606603).epsilon(1e-12));

  const std::string table = format_table(reports);
  CHECK(table.find("1 passed, 0 failed, 1 skipped") != std::string::npos);
}
