#ifndef POLYFIB_HARNESS_HPP
#define POLYFIB_HARNESS_HPP

// Identity registry and verification runner. Every record names two
// evaluation plans; verify() evaluates both at the requested precision and
// compares them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyfib/fibseries.hpp"
#include "polyfib/real.hpp"

namespace polyfib {

enum class PlanOp {
  DirectSum,
  PolylogForm,
  BernoulliForm,
  QuarterSeriesForm,
  GeneratingFunction,
  LogSeriesForm,
  TrigSeriesForm,
  Abel,
  NamedConstant,
  SpecialValue,
  Expr,
};

/// One side of an identity. Series plans read the spec fields; z and x are
/// expressions so that arguments such as 1/L(4) stay exact until the
/// working precision is known.
struct Plan {
  PlanOp op = PlanOp::Expr;
  Family family = Family::F;
  Weight weight = Weight::Plain;
  SeqIndex r = 1;
  SeqIndex s = 0;
  long k = 0;
  std::string z = "0";
  std::string x = "0";
  int start = 1;
  Side side = Side::Upper;
  int levels = 8;
  /// Named constant or special value name.
  std::string name;
  SeqIndex index = 0;
  std::string expr;

  SeriesSpec series_spec(Bits prec) const;
};

/// Method tag used by the independence audit.
std::string method_tag(const Plan& plan);

enum class RecordClass { Verification, DerivationCheck };

struct IdentityRecord {
  std::string id;
  /// The identity written out as a formula.
  std::string anchor;
  RecordClass record_class = RecordClass::Verification;
  Plan lhs;
  Plan rhs;
  std::string domain;
  /// Set when the parameters fall outside what the closed forms cover.
  std::optional<std::string> skip_reason;
  bool regularized = false;
  /// Also compare lhs against the Abel oracle (low precision).
  bool abel_check = false;
};

enum class Status { Pass, Fail, Skipped };

struct VerificationReport {
  std::string id;
  Bits prec = 0;
  Complex lhs_value;
  Complex rhs_value;
  Real abs_error;
  Real rel_error;
  Status status = Status::Skipped;
  /// Skip reason or failure detail.
  std::string reason;
  double elapsed = 0.0;
  /// |lhs - abel| when the record carries an Abel cross-check.
  std::optional<double> abel_error;
};

struct VerificationSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

std::string_view to_string(PlanOp op);
std::string_view to_string(RecordClass c);
std::string_view to_string(Status s);

/// Parses the registry embedded at build time (cached after the first call).
const std::vector<IdentityRecord>& registry();
/// Parses a registry from JSON text; DomainError on malformed input.
std::vector<IdentityRecord> parse_registry(std::string_view json_text);

/// Relative tolerance 2^{-prec+24}.
Real tolerance(Bits prec);

/// Throws UnknownIdError for ids not in the registry.
VerificationReport verify(std::string_view id, Bits prec);
VerificationReport verify(const IdentityRecord& record, Bits prec);

/// Verifies every record on `workers` threads (0 picks the hardware count);
/// reports come back in registry order.
std::vector<VerificationReport> verify_all(const std::vector<IdentityRecord>& records, Bits prec, unsigned workers);
std::vector<VerificationReport> verify_all(Bits prec, unsigned workers);

VerificationSummary summarize(const std::vector<VerificationReport>& reports);

/// Ids of verification records whose two sides share a method tag.
std::vector<std::string> independence_violations(const std::vector<IdentityRecord>& records);

std::string format_table(const std::vector<VerificationReport>& reports);
std::string format_json(const std::vector<VerificationReport>& reports);
std::string format_csv(const std::vector<VerificationReport>& reports);

}  // namespace polyfib

#endif  // POLYFIB_HARNESS_HPP
