#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace frobkit;
using namespace frobkit::testing;

namespace {

// Tolerances and budgets (seconds).
constexpr double kA1Target = 1.5, kA1Tol = 0.05, kA1Budget = 60;
constexpr double kMonskyZeroTarget = 3.5, kMonskyZeroTol = 0.1, kMonskyZeroBudget = 600;
constexpr double kMonskyAlgTarget = 3.0625, kMonskyAlgTol = 0.1, kMonskyAlgBudget = 600;
constexpr double kMonskyTrTarget = 3.0, kMonskyTrTol = 0.15, kMonskyTrBudget = 1800;
constexpr double kGapMin = 0.02;
constexpr double kRegularBudget = 1;
constexpr double kFsigBudget = 300;
constexpr double kFsigLow = 0.3, kFsigHigh = 0.7, kFsigSquareMax = 0.15;
constexpr unsigned kRandomInstances = 50;
constexpr std::uint64_t kSeed = 20261015;

struct Outcome {
  std::string id;
  bool pass;
  std::string detail;
};

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string secs(double v) { return fmt(v, 2) + "s"; }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Outcome regularity() {
  Stopwatch clock;
  std::vector<std::string> bad;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (unsigned d = 1; d <= 3; ++d) {
      std::vector<std::string> names;
      for (unsigned i = 0; i < d; ++i) names.push_back("x" + std::to_string(i));
      const auto ring = PresentedRing<GaloisField>::make(prime_field(p), names, {});
      const auto m = origin_ideal<GaloisField>(ring);
      const auto fsig = fsig_function<GaloisField>(ring, 3);
      for (unsigned e = 1; e <= 3; ++e) {
        BigInt expected = 1;
        for (unsigned i = 0; i < e * d; ++i) expected *= p;
        if (hk_function(m, e) != expected) bad.push_back("hk p=" + std::to_string(p) + " d=" + std::to_string(d));
        if (fsig.rows[e - 1].normalized != 1) bad.push_back("fsig p=" + std::to_string(p) + " d=" + std::to_string(d));
      }
    }
  }
  const double t = clock.seconds();
  const bool pass = bad.empty() && t < kRegularBudget;
  return {"1", pass, bad.empty() ? "27 rings x 3 exponents exact in " + secs(t) : bad.front() + " mismatch"};
}

Outcome a1_quadric() {
  Stopwatch clock;
  const auto a1 = load_finite("a1_char2.ring");
  const auto report = ehk_estimate(a1.ideal("m"), 6);
  const double est = to_double(report.estimate.value), t = clock.seconds();
  const bool pass = std::abs(est - kA1Target) <= kA1Tol && t < kA1Budget;
  return {"2", pass, "estimate " + fmt(est) + " target " + fmt(kA1Target) + " in " + secs(t)};
}

Outcome monsky(const std::string& id, const MonskySpec& spec, unsigned e_max, double target, double tol,
               double budget, bool strictly_above_three) {
  Stopwatch clock;
  const auto r = monsky_repro(spec, e_max);
  const double est = to_double(r.report.estimate.value), t = clock.seconds();
  bool pass = std::abs(est - target) <= tol && t < budget;
  if (strictly_above_three) pass = pass && r.report.estimate.value > 3 && r.report.rows.back().normalized > 3;
  return {id, pass,
          "alpha " + r.alpha + ", estimate " + fmt(est) + " (last row " + fmt(to_double(r.report.rows.back().normalized)) +
              ") target " + fmt(target) + " +- " + fmt(tol, 2) + " in " + secs(t)};
}

Outcome brenner_monsky_gap() {
  Stopwatch clock;
  const auto report = brenner_monsky(2, 4);
  bool gaps = true;
  for (const auto& row : report.rows) gaps = gaps && to_double(row.gap) >= kGapMin;
  return {"4", gaps && report.consistency,
          std::string("specialization ") + (report.consistency ? "exact" : "INCONSISTENT") + ", min gap " +
              fmt(to_double(report.min_gap)) + " (need >= " + fmt(kGapMin, 2) + ") in " + secs(clock.seconds())};
}

Outcome fsignature() {
  Stopwatch clock;
  const auto node = load_finite("node_f2.ring");
  const auto n = fsig_function<GaloisField>(node.ring, 4);
  bool node_ok = true;
  for (const auto& row : n.rows) node_ok = node_ok && row.colength == 1;

  const auto whitney = load_finite("whitney_f3.ring");
  const auto w = fsig_function<GaloisField>(whitney.ring, 3);
  bool linear_ok = true, square_ok = true;
  std::string ae, lin, sq;
  double prev = 1e9;
  for (const auto& row : w.rows) {
    const double a = row.colength.convert_to<double>();
    const double by_q = a / row.q, by_q2 = a / (double(row.q) * row.q);
    linear_ok = linear_ok && by_q >= kFsigLow && by_q <= kFsigHigh;
    square_ok = square_ok && by_q2 <= kFsigSquareMax && by_q2 < prev;
    prev = by_q2;
    ae += (ae.empty() ? "" : ",") + row.colength.str();
    lin += (lin.empty() ? "" : ",") + fmt(by_q, 3);
    sq += (sq.empty() ? "" : ",") + fmt(by_q2, 3);
  }
  const double t = clock.seconds();
  return {"5", node_ok && linear_ok && square_ok && t < kFsigBudget,
          std::string("node a_e==1 ") + (node_ok ? "yes" : "no") + "; a_e=" + ae + ", a_e/3^e=" + lin + ", a_e/9^e=" + sq +
              " (need <= " + fmt(kFsigSquareMax, 2) + ", decreasing) in " + secs(t)};
}

Outcome property_suites() {
  Stopwatch clock;
  std::vector<std::string> failed;
  unsigned instances = 0;
  for (const auto& suite : all_suites()) {
    const auto r = suite.run(kRandomInstances, kSeed);
    instances += r.corpus_instances + r.random_instances;
    if (!r.ok()) failed.push_back(r.name + ": " + r.failures.front());
  }
  return {"6", failed.empty(),
          failed.empty() ? std::to_string(all_suites().size()) + " suites, " + std::to_string(instances) +
                               " instances in " + secs(clock.seconds())
                         : failed.front()};
}

Outcome determinism() {
  Stopwatch clock;
  std::vector<std::string> bad;
  for (const auto& name : corpus_files()) {
    const auto doc = load_corpus(name);
    const auto printed = print_spec(doc);
    const auto again = parse_spec(printed);
    if (!(again == doc) || print_spec(again) != printed) bad.push_back("round trip " + name);
  }
  unsigned runs = 0;
  for (const auto& [command, spec] : std::vector<std::pair<std::string, std::string>>{
           {"ehk", "a1_char2.ring"}, {"ehk", "monsky_q1.ring"}, {"fsig", "whitney_f3.ring"},
           {"fsig", "node_f2.ring"}, {"equimult", "a1_char2.ring"}, {"ehk", "fermat_f7.ring"}}) {
    cli::RunOptions o;
    o.command = command;
    o.spec_path = corpus_dir() + "/" + spec;
    o.timing = false;
    if (command == "equimult") o.ideal = "p";
    const auto a = cli::execute(o), b = cli::execute(o);
    ++runs;
    if (a.output != b.output || a.output.empty()) bad.push_back(command + " " + spec);
  }
  return {"7", bad.empty(),
          bad.empty() ? std::to_string(corpus_files().size()) + " corpus files round-trip, " + std::to_string(runs) +
                            " commands byte-identical in " + secs(clock.seconds())
                      : bad.front()};
}

std::set<std::string> split_ids(const std::string& s) {
  std::set<std::string> out;
  std::stringstream in(s);
  for (std::string id; std::getline(in, id, ',');)
    if (!id.empty()) out.insert(id);
  return out;
}

void print(const Outcome& o, const std::string& indent = "") {
  std::cout << indent << "criterion " << o.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string expect_fail;
  std::string only;
  app.add_option("--expect-fail", expect_fail, "comma-separated criteria known to fail");
  app.add_option("--only", only, "comma-separated criteria to run");
  CLI11_PARSE(app, argc, argv);
  const auto selected = split_ids(only);
  auto wanted = [&](const std::string& id) {
    return selected.empty() || selected.count(id) || selected.count(id.substr(0, 1));
  };

  std::vector<Outcome> leaves;
  auto run = [&](const std::string& id, auto&& f) {
    if (!wanted(id)) return;
    try {
      leaves.push_back(f());
    } catch (const std::exception& e) {
      leaves.push_back({id, false, std::string("threw: ") + e.what()});
    }
    print(leaves.back());
  };

  run("1", regularity);
  run("2", a1_quadric);
  run("3a", [] {
    return monsky("3a", {MonskySpec::Kind::zero, {}}, 7, kMonskyZeroTarget, kMonskyZeroTol, kMonskyZeroBudget, false);
  });
  run("3b", [] {
    return monsky("3b", {MonskySpec::Kind::algebraic, {1, 1, 1}}, 7, kMonskyAlgTarget, kMonskyAlgTol, kMonskyAlgBudget,
                  true);
  });
  run("3c", [] {
    return monsky("3c", {MonskySpec::Kind::transcendental, {}}, 5, kMonskyTrTarget, kMonskyTrTol, kMonskyTrBudget,
                  false);
  });
  if (std::any_of(leaves.begin(), leaves.end(), [](const Outcome& o) { return o.id[0] == '3'; })) {
    bool all = true;
    for (const auto& o : leaves)
      if (o.id[0] == '3') all = all && o.pass;
    std::cout << "criterion 3: " << (all ? "PASS" : "FAIL") << "  (sub-criteria above)" << std::endl;
  }
  run("4", brenner_monsky_gap);
  run("5", fsignature);
  run("6", property_suites);
  run("7", determinism);

  std::set<std::string> failed;
  for (const auto& o : leaves)
    if (!o.pass) failed.insert(o.id);
  const auto expected = split_ids(expect_fail);
  std::set<std::string> expected_run;
  for (const auto& id : expected)
    if (wanted(id)) expected_run.insert(id);

  std::cout << "summary: " << leaves.size() - failed.size() << "/" << leaves.size() << " passed";
  if (!failed.empty()) {
    std::cout << "; failing:";
    for (const auto& id : failed) std::cout << ' ' << id;
  }
  std::cout << std::endl;
  if (failed == expected_run) {
    if (!expected_run.empty()) std::cout << "failing set matches the expected known failures" << std::endl;
    return 0;
  }
  std::cout << "failing set differs from the expected set" << std::endl;
  return 1;
}
