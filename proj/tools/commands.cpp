#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iterator>
#include <sstream>

#include <omp.h>

#include "cache.hpp"
#include "frobkit/parallel.hpp"

#ifndef FROBKIT_VERSION
#define FROBKIT_VERSION "0.0.0"
#endif

namespace frobkit::cli {

namespace {

json optional_json(const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); }
json optional_json(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

MonomialOrder order_of(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw InputError("unknown monomial order '" + name + "'");
}

template <class K>
class Context {
public:
  using Poly = Polynomial<K>;

  Context(const RunOptions& opts, const RingSpecDocument& doc) : o(opts), doc_(doc), built(build_spec<K>(doc)) {}

  const auto& ring() const { return built.ring; }

  /// Named ideal; without a name, "m" if declared, else the origin.
  Ideal<K> ideal(const std::optional<std::string>& name) const {
    if (name) return built.ideal(*name);
    if (doc_.find_ideal("m")) return built.ideal("m");
    return origin_ideal<K>(built.ring);
  }

  /// Named element, or an expression over the ring.
  Poly element(const std::string& text) const {
    if (auto it = built.elements.find(text); it != built.elements.end()) return it->second;
    return build_polynomial<K>(built.ring, parse_expr(text));
  }

  Poly required(const std::optional<std::string>& text, const char* flag) const {
    if (!text) throw InputError(std::string("missing ") + flag);
    return element(*text);
  }

  Poly test_element() const {
    if (o.testel) return element(*o.testel);
    // every element of a regular ring is a test element
    if (built.ring->is_polynomial_ring()) return built.ring->one();
    return jacobian_candidate<K>(built.ring);
  }

  json basis_json(const Ideal<K>& ideal) const {
    json out = json::array();
    const Ideal<K> zero(ring(), {});
    for (const auto& g : ideal.basis(order_of(o.order))->polynomials())
      if (ring()->is_polynomial_ring() || !zero.contains(g)) out.push_back(ring()->format(g));
    return out;
  }

  const RunOptions& o;

private:
  const RingSpecDocument& doc_;
  BuiltSpec<K> built;
};

Table generator_table(const json& gens) {
  Table t;
  t.columns = {"index", "generator"};
  for (std::size_t i = 0; i < gens.size(); ++i) t.rows.push_back({std::to_string(i), gens[i].get<std::string>()});
  return t;
}

Table verdict_table(const ClosureVerdict& v) {
  Table t;
  t.summary = {{"status", to_string(v.status)},
               {"exponent", std::to_string(v.exponent)},
               {"e_max", std::to_string(v.e_max)},
               {"multiplier", v.multiplier}};
  return t;
}

template <class K>
CommandResult run_typed(const RunOptions& o, const RingSpecDocument& doc) {
  Context<K> ctx(o, doc);
  const auto& ring = ctx.ring();
  const std::string& cmd = o.command;
  CommandResult r;

  if (cmd == "hk" || cmd == "ehk") {
    const auto ideal = ctx.ideal(o.ideal);
    const auto report = ehk_estimate(ideal, o.emax);
    r.table = hk_table(report);
    if (cmd == "hk") {
      r.payload = {{"ideal", ideal.to_string()}, {"dimension", report.dimension}, {"rows", to_json(report)["rows"]}};
    } else {
      r.payload = to_json(report);
      r.payload["ideal"] = ideal.to_string();
      add_estimate(r.table, report.estimate);
    }
  } else if (cmd == "fsig") {
    const auto report = fsig_function<K>(ring, o.emax);
    r.payload = to_json(report);
    r.table.columns = {"e", "q", "a_e", "normalized"};
    for (const auto& row : report.rows)
      r.table.rows.push_back(
          {std::to_string(row.e), std::to_string(row.q), row.colength.str(), exact(row.normalized)});
    add_estimate(r.table, report.estimate);
    r.violation = !report.chain.contains_bracket || !report.chain.chain;
  } else if (cmd == "mult") {
    auto target = ring;
    if (o.ideal) {
      auto rels = ring->relations();
      const auto quotient_by = ctx.ideal(o.ideal);
      for (const auto& g : quotient_by.generators()) rels.push_back(g);
      target = PresentedRing<K>::make(ring->field(), ring->names(), rels, ring->origin());
    }
    const auto m = hs_multiplicity<K>(target, ctx.required(o.x, "--x"), o.nmax.value_or(64));
    r.payload = to_json(m);
    r.table.columns = {"n", "length"};
    for (std::size_t i = 0; i < m.lengths.size(); ++i) r.table.rows.push_back({std::to_string(i + 1), m.lengths[i].str()});
    r.table.summary = {{"multiplicity", std::to_string(m.multiplicity)}, {"cm defect", std::to_string(m.cm_defect)}};
  } else if (cmd == "frobpow") {
    const auto ideal = ctx.ideal(o.ideal);
    const auto power = frobenius_power(ideal, o.emax);
    const auto c = power.colength();
    r.payload = {{"ideal", ideal.to_string()},
                 {"e", o.emax},
                 {"q", frobenius_q(ring->characteristic(), o.emax)},
                 {"basis", ctx.basis_json(power)},
                 {"colength", c.finite ? json(c.count.str()) : json(nullptr)}};
    r.table = generator_table(r.payload["basis"]);
    r.table.summary = {{"colength", c.finite ? c.count.str() : "infinite"}};
  } else if (cmd == "colon" || cmd == "saturate") {
    const auto ideal = ctx.ideal(o.ideal);
    std::optional<Ideal<K>> result;
    json by;
    if (cmd == "colon" && o.elt) {
      const auto f = ctx.element(*o.elt);
      result = ideal_colon(ideal, f);
      by = ring->format(f);
    } else {
      const auto other = o.by ? ctx.ideal(o.by) : origin_ideal<K>(ring);
      result = cmd == "colon" ? ideal_colon_ideal(ideal, other) : saturate(ideal, other);
      by = other.to_string();
    }
    r.payload = {{"ideal", ideal.to_string()}, {"by", by}, {"basis", ctx.basis_json(*result)}};
    r.table = generator_table(r.payload["basis"]);
  } else if (cmd == "tc-member" || cmd == "fclosure-member") {
    const auto z = ctx.required(o.elt, "--elt");
    const auto ideal = ctx.ideal(o.ideal);
    ClosureVerdict v;
    if (cmd == "tc-member") {
      v = tc_membership(z, ideal, ctx.test_element(), o.emax);
      r.warranty["conditional_on_test_element"] = v.conditional_on_test_element;
    } else {
      v = frobenius_closure_membership(z, ideal, o.emax);
    }
    r.payload = to_json(v);
    r.payload["element"] = ring->format(z);
    r.payload["ideal"] = ideal.to_string();
    r.table = verdict_table(v);
  } else if (cmd == "descent") {
    const auto report = descent_sequence(ctx.ideal(o.ideal), ctx.required(o.x, "--x"), o.nmax.value_or(3), o.emax);
    r.payload = to_json(report);
    r.table.columns = {"n", "e", "q", "colength", "normalized"};
    for (const auto& c : report.cells)
      r.table.rows.push_back({std::to_string(c.n), std::to_string(c.e), std::to_string(c.q), c.colength.str(),
                              exact(c.normalized)});
    r.violation = !report.non_increasing_in_n || !report.two_parameter_bound;
  } else if (cmd == "lech") {
    if (!o.large) throw InputError("missing --large");
    const auto report = lech_check(ctx.ideal(o.ideal), ctx.ideal(o.large), o.emax);
    r.payload = to_json(report);
    r.table.columns = {"e", "lhs", "rhs", "pass"};
    for (const auto& x : report.rows)
      r.table.rows.push_back({std::to_string(x.e), x.lhs.str(), x.rhs.str(), x.pass ? "yes" : "no"});
    r.violation = !report.pass;
  } else if (cmd == "assoc") {
    std::vector<std::pair<Polynomial<K>, unsigned>> factors;
    for (const auto& spec : o.factors) {
      const auto colon = spec.rfind(':');
      unsigned a = 1;
      std::string text = spec;
      if (colon != std::string::npos) {
        text = spec.substr(0, colon);
        try {
          a = static_cast<unsigned>(std::stoul(spec.substr(colon + 1)));
        } catch (const std::exception&) {
          throw InputError("bad factor multiplicity in '" + spec + "'");
        }
      }
      factors.emplace_back(ctx.element(text), a);
    }
    const auto report = assoc_check<K>(ring, factors, o.emax);
    r.payload = to_json(report);
    r.table.columns = {"e", "whole", "weighted", "discrepancy"};
    for (const auto& x : report.rows)
      r.table.rows.push_back({std::to_string(x.e), exact(x.whole), exact(x.weighted), exact(x.discrepancy)});
  } else if (cmd == "wy") {
    const auto report = wy_inequality_check(ctx.ideal(o.ideal), o.emax);
    r.payload = to_json(report);
    r.table.columns = {"e", "hk", "upper", "lower", "pass"};
    for (const auto& x : report.rows)
      r.table.rows.push_back({std::to_string(x.e), x.hk.str(), x.upper.str(), x.lower.str(), x.pass ? "yes" : "no"});
    r.violation = !report.pass;
  } else if (cmd == "equimult" || cmd == "rigidity") {
    if constexpr (std::is_same_v<K, GaloisField>) {
      const auto prime = ctx.ideal(o.ideal);
      auto fiber = [&] {
        std::size_t t = 0;
        if (o.param) {
          t = ring->index_of(*o.param);
        } else {
          const auto found = find_parameter_variable(prime);
          if (!found) throw InputError("R/P is not a polynomial ring in one of the variables");
          t = *found;
        }
        return fiber_presentation(prime, t);
      };
      if (cmd == "equimult") {
        const auto v = equimult_check(prime, ctx.test_element(), o.emax, o.tc_emax);
        r.payload = to_json(v);
        if (o.x) r.payload["identity"] = to_json(colength_identity_check(fiber(), ctx.element(*o.x), o.emax));
        r.warranty = {{"conditional_on_test_element", v.conditional_on_test_element},
                      {"unmixedness_warranted_by_caller", v.unmixedness_warranted_by_caller}};
        r.table.columns = {"e", "saturation_size", "extras"};
        for (const auto& rec : v.records)
          r.table.rows.push_back(
              {std::to_string(rec.e), std::to_string(rec.saturation_size), std::to_string(rec.extras.size())});
        r.table.summary = {{"status", to_string(v.status)}};
        if (v.witness) r.table.summary.emplace_back("witness", *v.witness);
        r.violation = v.status == EquimultStatus::violates_necessary_condition;
      } else {
        const auto fp = fiber();
        const auto report = rigidity_check(fp, o.emax);
        r.payload = to_json(report);
        r.payload["parameter"] = ring->names()[fp.t_index];
        r.payload["localization"] = to_json(localization_surrogate(fp, o.emax));
        r.payload["localized_hk"] = to_json(localized_hk(fp, o.emax));
        r.warranty = {{"weak_f_regularity_warranted_by_caller", report.weak_f_regularity_warranted_by_caller}};
        r.table.columns = {"e", "ambient", "scaled", "pass"};
        for (const auto& x : report.rows)
          r.table.rows.push_back({std::to_string(x.e), x.ambient.str(), x.scaled.str(), x.pass ? "yes" : "no"});
        r.violation = !report.pass;
      }
    } else {
      throw InputError(cmd + " needs a finite coefficient field");
    }
  } else {
    throw InputError("unknown command '" + cmd + "'");
  }
  return r;
}

MonskySpec monsky_spec(const std::string& alpha) {
  MonskySpec spec;
  if (alpha == "0") {
    spec.kind = MonskySpec::Kind::zero;
  } else if (alpha == "t") {
    spec.kind = MonskySpec::Kind::transcendental;
  } else {
    // alpha = 1 is lambda^2 + lambda with lambda a root of a^2 + a + 1
    const std::string modulus = alpha == "1" ? "a^2 + a + 1" : alpha;
    RingSpecDocument doc;
    doc.characteristic = 2;
    doc.ext_symbol = "a";
    doc.ext_modulus = parse_expr(modulus);
    spec.kind = MonskySpec::Kind::algebraic;
    spec.lambda_modulus = field_spec_of(doc)->modulus();
  }
  return spec;
}

CommandResult run_repro(const RunOptions& o) {
  CommandResult r;
  if (o.command == "repro-monsky") {
    const auto m = monsky_repro(monsky_spec(o.alpha.value_or("0")), o.emax);
    r.payload = to_json(m);
    r.table = hk_table(m.report);
    add_estimate(r.table, m.report.estimate);
    r.table.summary.emplace_back("target", exact(m.target) + " (" + to_decimal_string(m.target, 6) + ")");
  } else {
    const auto report = brenner_monsky(o.emin.value_or(2), o.emax);
    r.payload = to_json(report);
    r.table.columns = {"alpha", "e", "quartic", "specialized", "fiber", "gap"};
    for (const auto& x : report.rows)
      r.table.rows.push_back({x.alpha, std::to_string(x.e), x.quartic_colength.str(), x.specialized.str(),
                              x.fiber_colength.str(), exact(x.gap)});
    r.table.summary = {{"min gap", exact(report.min_gap)}, {"consistency", report.consistency ? "yes" : "no"}};
    r.violation = !report.consistency;
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "hk",      "ehk",      "fsig",     "mult", "frobpow", "colon", "saturate",     "tc-member", "fclosure-member",
      "descent", "equimult", "rigidity", "lech", "assoc",   "wy",    "repro-monsky", "repro-bm"};
  return names;
}

bool command_needs_spec(const std::string& command) { return command != "repro-monsky" && command != "repro-bm"; }

json parameters_of(const RunOptions& o) {
  json factors = o.factors;
  return {{"emax", o.emax},        {"emin", optional_json(o.emin)},   {"nmax", optional_json(o.nmax)},
          {"tc_emax", o.tc_emax},  {"order", o.order},                {"ideal", optional_json(o.ideal)},
          {"by", optional_json(o.by)}, {"large", optional_json(o.large)}, {"elt", optional_json(o.elt)},
          {"x", optional_json(o.x)}, {"testel", optional_json(o.testel)}, {"alpha", optional_json(o.alpha)},
          {"param", optional_json(o.param)}, {"factors", factors}};
}

std::string input_digest(const std::optional<RingSpecDocument>& doc, const RunOptions& opts) {
  std::string material = doc ? print_spec(*doc) : std::string();
  material += "\n" + opts.command + "\n" + parameters_of(opts).dump();
  return sha256_hex(material);
}

CommandResult run_command(const RunOptions& opts, const std::optional<RingSpecDocument>& doc) {
  if (!command_needs_spec(opts.command)) return run_repro(opts);
  if (!doc) throw InputError(opts.command + " needs a ring spec file");
  if (field_spec_of(*doc)->kind() == FieldKind::rational_function) return run_typed<RationalFunctionField>(opts, *doc);
  return run_typed<GaloisField>(opts, *doc);
}

Outcome execute(const RunOptions& opts) {
  Outcome out;
  try {
    if (opts.format != "json" && opts.format != "csv" && opts.format != "table")
      throw InputError("unknown format '" + opts.format + "'");
    if (opts.jobs) {
      sweep_jobs() = opts.jobs;
      omp_set_num_threads(static_cast<int>(opts.jobs));
    }
    std::optional<RingSpecDocument> doc;
    if (command_needs_spec(opts.command)) {
      if (!opts.spec_path) throw InputError(opts.command + " needs a ring spec file");
      doc = parse_spec(read_file(*opts.spec_path));
    }
    const std::string digest = input_digest(doc, opts);
    const auto start = std::chrono::steady_clock::now();
    std::optional<CommandResult> result;
    std::optional<ResultCache> cache;
    if (auto dir = cache_directory(opts.cache)) cache.emplace(*dir);
    if (cache) {
      if (auto bytes = cache->load(digest)) {
        try {
          result = result_from_json(json::parse(*bytes));
        } catch (const std::exception&) {
          result.reset();
        }
      }
    }
    if (!result) {
      result = run_command(opts, doc);
      if (cache) cache->store(digest, result_to_json(*result).dump());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (opts.format == "json") {
      json env = {{"tool", "frobkit"},
                  {"version", FROBKIT_VERSION},
                  {"schema_version", kSchemaVersion},
                  {"command", opts.command},
                  {"input_digest", digest},
                  {"parameters", parameters_of(opts)},
                  {"payload", result->payload},
                  {"warranty", result->warranty}};
      if (opts.timing) env["timing"] = {{"seconds", seconds}};
      out.output = emit_json(env);
    } else if (opts.format == "csv") {
      out.output = emit_csv(result->table);
    } else {
      out.output = emit_table(result->table);
    }
    out.exit_code = result->violation ? 2 : 0;
  } catch (const ParseError& e) {
    out.error = std::string("parse error: ") + e.what();
    out.exit_code = 3;
  } catch (const std::invalid_argument& e) {
    out.error = std::string("input error: ") + e.what();
    out.exit_code = 3;
  } catch (const std::exception& e) {
    out.error = std::string("error: ") + e.what();
    out.exit_code = 1;
  }
  return out;
}

}  // namespace frobkit::cli
