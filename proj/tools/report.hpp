#ifndef FROBKIT_TOOLS_REPORT_HPP
#define FROBKIT_TOOLS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frobkit/equimult.hpp"

namespace frobkit::cli {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Row-per-e view of a report, used for CSV and table output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
};

struct CommandResult {
  json payload = json::object();
  Table table;
  bool violation = false;  // exit code 2
  json warranty = json::object();
};

json to_json(const BigInt& v);
json to_json(const Rational& v);
json to_json(const Estimate& e);
json to_json(const HKReport& r);
json to_json(const FSigReport& r);
json to_json(const ClosureVerdict& v);
json to_json(const ChainCheck& c);
json to_json(const MultiplicityResult& m);
json to_json(const DescentReport& r);
json to_json(const LechReport& r);
json to_json(const AssocReport& r);
json to_json(const WYReport& r);
json to_json(const EquimultVerdict& v);
json to_json(const IdentityReport& r);
json to_json(const RigidityReport& r);
json to_json(const std::vector<LocalizationRow>& rows);
json to_json(const MonskyResult& m);
json to_json(const BMReport& r);

/// Exact rational as "num/den" ("num" when the denominator is 1).
std::string exact(const Rational& v);

Table hk_table(const HKReport& r);
void add_estimate(Table& t, const Estimate& e);

json result_to_json(const CommandResult& r);
CommandResult result_from_json(const json& j);

/// JSON with sorted keys and two-space indent, newline terminated.
std::string emit_json(const json& envelope);
std::string emit_csv(const Table& t);
std::string emit_table(const Table& t);

}  // namespace frobkit::cli

#endif  // FROBKIT_TOOLS_REPORT_HPP
