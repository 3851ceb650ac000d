#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace frobkit::cli {

namespace {

std::string big(const BigInt& v) { return v.str(); }

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const BigInt& v) { return big(v); }

json to_json(const Rational& v) {
  return {{"num", big(boost::multiprecision::numerator(v))}, {"den", big(boost::multiprecision::denominator(v))}};
}

std::string exact(const Rational& v) {
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return big(boost::multiprecision::numerator(v));
  return big(boost::multiprecision::numerator(v)) + "/" + big(den);
}

json to_json(const Estimate& e) {
  return {{"value", to_json(e.value)},
          {"decimal", to_decimal_string(e.value, 6)},
          {"error_band", to_json(e.error_band)},
          {"method", e.method},
          {"last_row", to_json(e.last_row)}};
}

namespace {

json hk_rows(const std::vector<HKRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(json::array({r.e, r.q, big(r.colength), to_json(r.normalized)}));
  return out;
}

}  // namespace

json to_json(const HKReport& r) {
  return {{"dimension", r.dimension},
          {"rows", hk_rows(r.rows)},
          {"cauchy", rationals(r.cauchy)},
          {"estimate", to_json(r.estimate)}};
}

json to_json(const ChainCheck& c) {
  return {{"contains_bracket", c.contains_bracket}, {"chain", c.chain}, {"failures", c.failures}};
}

json to_json(const FSigReport& r) {
  return {{"dimension", r.dimension},
          {"rows", hk_rows(r.rows)},
          {"cauchy", rationals(r.cauchy)},
          {"estimate", to_json(r.estimate)},
          {"chain", to_json(r.chain)}};
}

json to_json(const ClosureVerdict& v) {
  return {{"status", to_string(v.status)},
          {"exponent", v.exponent},
          {"e_max", v.e_max},
          {"multiplier", v.multiplier},
          {"conditional_on_test_element", v.conditional_on_test_element}};
}

json to_json(const MultiplicityResult& m) {
  json lengths = json::array();
  for (const auto& l : m.lengths) lengths.push_back(big(l));
  return {{"multiplicity", m.multiplicity},
          {"colength_x", m.colength_x},
          {"cm_defect", m.cm_defect},
          {"lengths", lengths}};
}

json to_json(const DescentReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells) cells.push_back(json::array({c.n, c.e, c.q, big(c.colength), to_json(c.normalized)}));
  json out = {{"dimension", r.dimension},
              {"n_max", r.n_max},
              {"e_max", r.e_max},
              {"cells", cells},
              {"per_n_estimate", rationals(r.per_n_estimate)},
              {"non_increasing_in_n", r.non_increasing_in_n},
              {"two_parameter_bound", r.two_parameter_bound}};
  out["prediction"] = r.prediction ? to_json(*r.prediction) : json(nullptr);
  return out;
}

json to_json(const LechReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows) rows.push_back(json::array({x.e, big(x.lhs), big(x.rhs), x.pass}));
  return {{"rows", rows}, {"pass", r.pass}};
}

json to_json(const AssocReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"e", x.e},
                    {"whole", to_json(x.whole)},
                    {"weighted", to_json(x.weighted)},
                    {"discrepancy", to_json(x.discrepancy)},
                    {"components", rationals(x.components)}});
  return {{"rows", rows}, {"shrinking", r.shrinking}};
}

json to_json(const WYReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"e", x.e},
                    {"hk", big(x.hk)},
                    {"upper", big(x.upper)},
                    {"lower", big(x.lower)},
                    {"pass", x.pass},
                    {"hypothesis", x.hypothesis}});
  return {{"rows", rows},
          {"p_to_d", big(r.p_to_d)},
          {"bracket_colength", big(r.bracket_colength)},
          {"kunz_regular", r.kunz_regular},
          {"pass", r.pass}};
}

json to_json(const EquimultVerdict& v) {
  json records = json::array();
  for (const auto& rec : v.records) {
    json extras = json::array();
    for (const auto& w : rec.extras)
      extras.push_back({{"element", w.element},
                        {"frobenius_closure", to_json(w.frobenius_closure)},
                        {"tight_closure", to_json(w.tight_closure)}});
    records.push_back({{"e", rec.e}, {"saturation_size", rec.saturation_size}, {"extras", extras}});
  }
  json out = {{"status", to_string(v.status)},
              {"multiplier", v.multiplier},
              {"tc_e_max", v.tc_e_max},
              {"records", records},
              {"conditional_on_test_element", v.conditional_on_test_element},
              {"unmixedness_warranted_by_caller", v.unmixedness_warranted_by_caller}};
  out["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  out["witness_e"] = v.witness_e ? json(*v.witness_e) : json(nullptr);
  return out;
}

json to_json(const IdentityReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows) rows.push_back(json::array({x.e, big(x.lhs), big(x.rhs), big(x.residual)}));
  return {{"multiplicity", r.multiplicity}, {"rows", rows}, {"all_zero", r.all_zero}};
}

json to_json(const RigidityReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows) rows.push_back(json::array({x.e, big(x.ambient), big(x.scaled), x.pass}));
  return {{"rows", rows},
          {"pass", r.pass},
          {"weak_f_regularity_warranted_by_caller", r.weak_f_regularity_warranted_by_caller}};
}

json to_json(const std::vector<LocalizationRow>& rows) {
  json out = json::array();
  for (const auto& x : rows) out.push_back(json::array({x.e, big(x.fiber_scaled), big(x.ambient), big(x.slack)}));
  return out;
}

json to_json(const MonskyResult& m) {
  return {{"alpha", m.alpha},
          {"field", m.field},
          {"m", m.m},
          {"target", to_json(m.target)},
          {"report", to_json(m.report)},
          {"deviation", to_json(m.report.estimate.value - m.target)}};
}

json to_json(const BMReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"alpha", x.alpha},
                    {"e", x.e},
                    {"q", x.q},
                    {"quartic_colength", big(x.quartic_colength)},
                    {"specialized", big(x.specialized)},
                    {"fiber_colength", big(x.fiber_colength)},
                    {"gap", to_json(x.gap)},
                    {"consistent", x.consistent}});
  return {{"rows", rows}, {"min_gap", to_json(r.min_gap)}, {"consistency", r.consistency}};
}

Table hk_table(const HKReport& r) {
  Table t;
  t.columns = {"e", "q", "colength", "normalized"};
  for (const auto& row : r.rows)
    t.rows.push_back({std::to_string(row.e), std::to_string(row.q), big(row.colength), exact(row.normalized)});
  return t;
}

void add_estimate(Table& t, const Estimate& e) {
  t.summary.emplace_back("estimate", exact(e.value) + " (" + to_decimal_string(e.value, 6) + ")");
  t.summary.emplace_back("error band", exact(e.error_band));
  t.summary.emplace_back("method", e.method);
}

json result_to_json(const CommandResult& r) {
  json summary = json::array();
  for (const auto& [k, v] : r.table.summary) summary.push_back(json::array({k, v}));
  return {{"payload", r.payload},
          {"table", {{"columns", r.table.columns}, {"rows", r.table.rows}, {"summary", summary}}},
          {"violation", r.violation},
          {"warranty", r.warranty}};
}

CommandResult result_from_json(const json& j) {
  CommandResult r;
  r.payload = j.at("payload");
  r.violation = j.at("violation").get<bool>();
  r.warranty = j.at("warranty");
  const auto& t = j.at("table");
  r.table.columns = t.at("columns").get<std::vector<std::string>>();
  r.table.rows = t.at("rows").get<std::vector<std::vector<std::string>>>();
  for (const auto& kv : t.at("summary")) r.table.summary.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
  return r;
}

std::string emit_json(const json& envelope) { return envelope.dump(2) + "\n"; }

std::string emit_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string emit_table(const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - cells[i].size(), ' ') << cells[i];
    }
    out << "\n";
  };
  if (!t.columns.empty()) {
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  std::size_t key_width = 0;
  for (const auto& kv : t.summary) key_width = std::max(key_width, kv.first.size());
  if (!t.summary.empty() && !t.columns.empty()) out << "\n";
  for (const auto& [k, v] : t.summary) out << k << std::string(key_width - k.size(), ' ') << " : " << v << "\n";
  return out.str();
}

}  // namespace frobkit::cli
