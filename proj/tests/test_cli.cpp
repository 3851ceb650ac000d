#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cache.hpp"
#include "commands.hpp"
#include "support.hpp"

using namespace frobkit;
using namespace frobkit::testing;
using frobkit::cli::execute;
using frobkit::cli::json;
using frobkit::cli::RunOptions;

namespace {

std::string corpus_path(const std::string& name) { return (std::filesystem::path(corpus_dir()) / name).string(); }

RunOptions options(const std::string& command, const std::string& spec) {
  RunOptions o;
  o.command = command;
  if (!spec.empty()) o.spec_path = corpus_path(spec);
  o.timing = false;
  return o;
}

struct Shell {
  int status;
  std::string out;
};

Shell run_tool(const std::string& args) {
  const std::string cmd = std::string(FROBKIT_TOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("frobkit-test-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void expect_parse_error(const std::string& text, int line, int col, const std::string& fragment) {
  CAPTURE(text);
  try {
    parse_spec(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == col);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("spec documents") {
  const auto q0 = parse_spec("char 2; vars x y z; rel z^4 + x*y*z^2 + (x^3+y^3)*z; ideal m = (x,y,z);");
  CHECK(q0.characteristic == 2);
  CHECK(q0.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(q0.relations.size() == 1);
  REQUIRE(q0.find_ideal("m") != nullptr);
  CHECK(q0.find_ideal("m")->generators.size() == 3);
  const auto q0b = load_corpus("monsky_q0.ring");
  CHECK(build_spec<GaloisField>(q0).ring->relations() == build_spec<GaloisField>(q0b).ring->relations());

  const auto f3 = parse_spec("char 3; vars x; ideal m = (x);");
  CHECK(build_spec<GaloisField>(f3).ring->dimension() == 1);

  const auto ext = parse_spec("char 2; ext a : a^2 + a + 1; vars x; elt u = a*x;");
  CHECK(field_spec_of(ext)->order() == 4);
  const auto par = parse_spec("# comment\nchar 2; param t; vars x y;\nrel x^2 + t*y^3;");
  CHECK(field_spec_of(par)->kind() == FieldKind::rational_function);
  CHECK_THROWS_AS(field_spec_of(parse_spec("char 2; ext a : a^2 + 1; vars x;")), ParseError);
}

TEST_CASE("positioned parse errors") {
  expect_parse_error("char 4; vars x;", 1, 6, "not a prime");
  expect_parse_error("char 3;\nvars x y;\nrel x + w;", 3, 9, "unknown variable");
  expect_parse_error("char 3; vars x x;", 1, 16, "duplicate");
  expect_parse_error("char 3; vars x; ideal m = (x); ideal m = (x^2);", 1, 38, "duplicate");
  expect_parse_error("vars x; char 3;", 1, 1, "char");
  expect_parse_error("char 3; vars x; rel x^;", 1, 23, "");
  expect_parse_error("char 2; param t; ext a : a^2 + a + 1; vars x;", 1, 18, "");
}

TEST_CASE("corpus round trip is a fixed point") {
  const auto files = corpus_files();
  CHECK(files.size() >= 12);
  for (const auto& name : files) {
    CAPTURE(name);
    const auto doc = load_corpus(name);
    const std::string printed = print_spec(doc);
    const auto again = parse_spec(printed);
    CHECK(again == doc);
    CHECK(print_spec(again) == printed);
  }
}

TEST_CASE("ehk report on the regular plane") {
  auto o = options("ehk", "regular_f2_xy.ring");
  const auto out = execute(o);
  CHECK(out.exit_code == 0);
  const auto env = json::parse(out.output);
  CHECK(env["tool"] == "frobkit");
  CHECK(env["schema_version"] == 1);
  CHECK(env["command"] == "ehk");
  CHECK_FALSE(env.contains("timing"));
  const auto& rows = env["payload"]["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0][2] == "4");
  CHECK(rows[1][2] == "16");
  CHECK(rows[2][2] == "64");
  for (const auto& row : rows) CHECK(row[3] == json{{"num", "1"}, {"den", "1"}});
  CHECK(env["payload"]["estimate"]["value"] == json{{"num", "1"}, {"den", "1"}});
}

TEST_CASE("fsig on the node") {
  auto o = options("fsig", "node_f2.ring");
  o.emax = 4;
  const auto env = json::parse(execute(o).output);
  for (const auto& row : env["payload"]["rows"]) CHECK(row[2] == "1");
  o.format = "csv";
  const auto csv = execute(o).output;
  CHECK(csv.rfind("e,q,", 0) == 0);
  CHECK(csv.find("4,16,1,1/16") != std::string::npos);
}

TEST_CASE("emit formats") {
  auto o = options("ehk", "a1_char2.ring");
  o.format = "csv";
  const auto csv = execute(o).output;
  CHECK(csv.rfind("e,q,colength,normalized\n", 0) == 0);
  CHECK(csv.find("1,2,6,3/2") != std::string::npos);
  o.format = "table";
  const auto table = execute(o).output;
  CHECK(table.find("colength") != std::string::npos);
  CHECK(table.find("estimate") != std::string::npos);
  o.format = "yaml";
  CHECK(execute(o).exit_code == 3);
}

TEST_CASE("verdicts with witnesses") {
  auto o = options("equimult", "a1_char2.ring");
  o.ideal = "p";
  o.emax = 2;
  const auto out = execute(o);
  CHECK(out.exit_code == 2);
  const auto env = json::parse(out.output);
  CHECK(env["payload"]["status"] == "violates-necessary-condition");
  CHECK(env["payload"]["witness"] == "y");
  CHECK(env["warranty"]["conditional_on_test_element"] == true);

  auto tc = options("tc-member", "fermat_f7.ring");
  tc.ideal = "j";
  tc.elt = "c";
  tc.emax = 2;
  const auto t = execute(tc);
  CHECK(t.exit_code == 0);
  CHECK(json::parse(t.output)["payload"]["status"] == "member-up-to");
}

TEST_CASE("every command runs on a small input") {
  struct Case {
    std::string command, spec;
    std::function<void(RunOptions&)> tweak;
  };
  const std::vector<Case> cases{
      {"hk", "a1_char2.ring", [](RunOptions& o) { o.emax = 2; }},
      {"ehk", "node_f2.ring", [](RunOptions& o) { o.emax = 2; }},
      {"fsig", "whitney_f3.ring", [](RunOptions& o) { o.emax = 2; }},
      {"mult", "a1_char2.ring", [](RunOptions& o) { o.ideal = "p"; o.x = "z"; }},
      {"frobpow", "a1_char2.ring", [](RunOptions& o) { o.emax = 1; }},
      {"colon", "a1_char2.ring", [](RunOptions& o) { o.ideal = "j"; o.elt = "y"; }},
      {"saturate", "a1_char2.ring", [](RunOptions& o) { o.ideal = "j"; o.by = "m"; }},
      {"tc-member", "a1_char2.ring", [](RunOptions& o) { o.ideal = "j"; o.elt = "c"; o.emax = 2; }},
      {"fclosure-member", "a1_char2.ring", [](RunOptions& o) { o.ideal = "j"; o.elt = "c"; o.emax = 2; }},
      {"descent", "a1_char2.ring", [](RunOptions& o) { o.ideal = "p"; o.x = "z"; o.nmax = 2; o.emax = 2; }},
      {"equimult", "regular_f2_xy.ring", [](RunOptions& o) { o.ideal = "p"; o.emax = 2; }},
      {"rigidity", "regular_f2_xy.ring", [](RunOptions& o) { o.ideal = "p"; o.emax = 2; }},
      {"lech", "a1_char2.ring", [](RunOptions& o) { o.ideal = "j"; o.large = "m"; o.emax = 2; }},
      {"assoc", "regular_f2_xy.ring", [](RunOptions& o) { o.factors = {"x", "y"}; o.emax = 2; }},
      {"wy", "a1_char2.ring", [](RunOptions& o) { o.ideal = "w"; o.emax = 2; }},
      {"repro-monsky", "", [](RunOptions& o) { o.alpha = "1"; o.emax = 3; }},
      {"repro-bm", "", [](RunOptions& o) { o.emin = 1; o.emax = 2; }},
  };
  CHECK(cases.size() == cli::command_names().size());
  for (const auto& c : cases) {
    CAPTURE(c.command);
    auto o = options(c.command, c.spec);
    c.tweak(o);
    const auto out = execute(o);
    CHECK(out.error.empty());
    CHECK((out.exit_code == 0 || out.exit_code == 2));
    const auto env = json::parse(out.output);
    CHECK(env["command"] == c.command);
    CHECK(env["payload"].is_object());
  }
}

TEST_CASE("repeated runs are byte identical") {
  for (const auto& [command, spec] : std::vector<std::pair<std::string, std::string>>{
           {"ehk", "a1_char2.ring"}, {"fsig", "whitney_f3.ring"}, {"ehk", "monsky_q1.ring"}}) {
    CAPTURE(command);
    CAPTURE(spec);
    const auto o = options(command, spec);
    CHECK(execute(o).output == execute(o).output);
  }
  const auto a = run_tool("ehk --no-timing --emax 3 " + corpus_path("fermat_f7.ring"));
  const auto b = run_tool("ehk --no-timing --emax 3 " + corpus_path("fermat_f7.ring"));
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cache hits reproduce recomputation") {
  const auto dir = scratch_dir("cache");
  for (const auto& name : {"a1_char2.ring", "node_f2.ring", "whitney_f3.ring", "regular_f3_xyz.ring"}) {
    CAPTURE(name);
    auto o = options("ehk", name);
    o.emax = 2;
    const auto fresh = execute(o);
    o.cache = dir.string();
    const auto first = execute(o);
    const auto digest = json::parse(first.output)["input_digest"].get<std::string>();
    CHECK(std::filesystem::exists(dir / (digest + ".json")));
    const auto hit = execute(o);
    CHECK(hit.output == fresh.output);
    CHECK(first.output == fresh.output);
  }
  // a different parameter set gets a different entry
  auto o = options("ehk", "node_f2.ring");
  o.cache = dir.string();
  o.emax = 2;
  const auto d2 = json::parse(execute(o).output)["input_digest"];
  o.emax = 3;
  const auto d3 = json::parse(execute(o).output)["input_digest"];
  CHECK(d2 != d3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("digests follow canonical spec text") {
  const auto dir = scratch_dir("digest");
  {
    std::ofstream(dir / "a.ring") << "char 2; vars x y; rel x*y; ideal m = (x, y);";
    std::ofstream(dir / "b.ring") << "# same ring\nchar 2;\nvars x y;\nrel x*y;\nideal m = (x,y);\n";
  }
  RunOptions a;
  a.command = "ehk";
  a.timing = false;
  a.spec_path = (dir / "a.ring").string();
  RunOptions b = a;
  b.spec_path = (dir / "b.ring").string();
  CHECK(execute(a).output == execute(b).output);
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes from the binary") {
  CHECK(run_tool("ehk --no-timing " + corpus_path("regular_f2_xy.ring")).status == 0);
  CHECK(run_tool("equimult --no-timing --ideal p --emax 2 " + corpus_path("a1_char2.ring")).status == 2);
  CHECK(run_tool("ehk /nonexistent/spec.ring").status == 3);
  CHECK(run_tool("ehk --ideal nosuch " + corpus_path("regular_f2_xy.ring")).status == 3);
  CHECK(run_tool("hk --ideal p " + corpus_path("regular_f2_xy.ring")).status == 3);
  CHECK(run_tool("nosuchcommand").status == 3);
  const auto dir = scratch_dir("exit");
  std::ofstream(dir / "bad.ring") << "char 4; vars x;";
  CHECK(run_tool("ehk " + (dir / "bad.ring").string()).status == 3);
  std::filesystem::remove_all(dir);
}
