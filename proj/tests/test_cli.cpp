#include <doctest.h>

#include <eigenkit/cli.hpp>
#include <eigenkit/report.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace eigenkit;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("eigenkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  CliResult r;
  try {
    r.code = cli::run(static_cast<int>(argv.size()), argv.data());
  } catch (...) {
    std::cout.rdbuf(old);
    throw;
  }
  std::cout.rdbuf(old);
  r.out = captured.str();
  return r;
}

// Reports are deterministic except for wall-clock timings; zero those out
// before comparing serialized output.
std::string normalize_ms(const std::string& json_text) {
  auto reports = reports_from_json(json_text);
  for (auto& r : reports) r.ms = 0;
  return reports_to_json(reports);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parse_range handles single values and closed ranges") {
  CHECK(cli::parse_range("7") == std::pair<unsigned, unsigned>{7, 7});
  CHECK(cli::parse_range("2..60") == std::pair<unsigned, unsigned>{2, 60});
  CHECK(cli::parse_range("0") == std::pair<unsigned, unsigned>{0, 0});
  CHECK_THROWS_AS(cli::parse_range(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("a"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("5.."), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("..5"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("3..x"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("7..2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("-3"), std::invalid_argument);
}

TEST_CASE("report JSON serialization round-trips byte for byte") {
  VerificationReport r;
  r.task = "demo task";
  r.add("first", "42", "42", true);
  r.add("second", "0", "1", false);
  r.note("aside", "context", "extra information");
  r.ms = 17;

  const std::string s = report_to_json(r);
  const VerificationReport back = report_from_json(s);
  CHECK(report_to_json(back) == s);
  CHECK(back.task == r.task);
  CHECK(back.items.size() == 3);
  CHECK(back.items[2].id == "note:aside");
  CHECK(back.ms == 17);
  CHECK(back.status() == Status::fail);

  VerificationReport skipped;
  skipped.task = "skipped task";
  skipped.explicitly_skipped = true;
  const std::string sk = report_to_json(skipped);
  CHECK(contains(sk, "\"skipped\""));
  CHECK(report_from_json(sk).status() == Status::skipped);

  const std::string arr = reports_to_json({r, skipped});
  const auto vec = reports_from_json(arr);
  REQUIRE(vec.size() == 2);
  CHECK(reports_to_json(vec) == arr);

  // A single object parses as a one-element vector.
  CHECK(reports_from_json(s).size() == 1);
}

TEST_CASE("report status and text rendering") {
  VerificationReport r;
  r.task = "text demo";
  r.add("same", "5", "5", true);
  r.add("broken", "1", "2", false);
  CHECK(r.status() == Status::fail);
  CHECK(r.pass_count() == 1);
  const std::string text = report_to_text(r);
  CHECK(contains(text, "[fail] text demo (1/2 checks"));
  CHECK(contains(text, "ok   same: 5"));
  CHECK(contains(text, "FAIL broken: expected 1, computed 2"));

  r.items.pop_back();
  CHECK(r.status() == Status::pass);
  r.explicitly_skipped = true;
  CHECK(r.status() == Status::skipped);
}

TEST_CASE("cli json output parses and reserializes identically") {
  const auto res = run_cli({"combi", "det", "--family", "A", "--n", "5..8", "--format", "json"});
  CHECK(res.code == 0);
  REQUIRE(!res.out.empty());
  CHECK(res.out.back() == '\n');
  const std::string body = res.out.substr(0, res.out.size() - 1);
  const VerificationReport r = report_from_json(body);
  CHECK(report_to_json(r) == body);
  CHECK(r.task == "combi det family=A n=5..8");
  CHECK(r.passed());
}

TEST_CASE("cli text output prints the matrix for a single order") {
  const auto res = run_cli({"combi", "det", "--family", "A", "--n", "8"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "A(8):"));
  CHECK(contains(res.out, "56"));
  CHECK(contains(res.out, "[pass]"));
  CHECK(contains(res.out, "8192"));

  const auto tr = run_cli({"combi", "det", "--family", "B", "--n", "10", "--transpose"});
  CHECK(tr.code == 0);
  CHECK(contains(tr.out, "B(10) transposed:"));
  CHECK(contains(tr.out, "-1048576"));
}

TEST_CASE("cli runs are deterministic for a fixed seed") {
  const std::vector<std::string> cmd = {"torus",  "classify", "--basis", "1,0;0,1",
                                        "--q",    "2",        "--seed",  "5",
                                        "--format", "json"};
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(normalize_ms(a.out) == normalize_ms(b.out));

  const std::vector<std::string> cone = {"cone", "check", "--n", "2..3", "--max-degree", "2",
                                         "--seed", "9", "--format", "json"};
  CHECK(normalize_ms(run_cli(cone).out) == normalize_ms(run_cli(cone).out));
}

TEST_CASE("environment seed overrides the seed flag") {
  setenv("EIGENKIT_SEED", "7", 1);
  const auto via_env = run_cli(
      {"torus", "classify", "--basis", "1,0;0,1", "--q", "1", "--seed", "99", "--format", "json"});
  unsetenv("EIGENKIT_SEED");
  const auto via_flag = run_cli(
      {"torus", "classify", "--basis", "1,0;0,1", "--q", "1", "--seed", "7", "--format", "json"});
  CHECK(via_env.code == 0);
  CHECK(normalize_ms(via_env.out) == normalize_ms(via_flag.out));

  setenv("EIGENKIT_SEED", "not-a-number", 1);
  const auto bad = run_cli({"torus", "classify", "--basis", "1,0;0,1", "--q", "1"});
  unsetenv("EIGENKIT_SEED");
  CHECK(bad.code == 2);
}

TEST_CASE("jobs flag affects wall time only") {
  const auto two = run_cli(
      {"combi", "det", "--family", "A", "--n", "1..12", "--jobs", "2", "--format", "json"});
  const auto one = run_cli(
      {"combi", "det", "--family", "A", "--n", "1..12", "--jobs", "1", "--format", "json"});
  CHECK(two.code == 0);
  CHECK(normalize_ms(two.out) == normalize_ms(one.out));
}

TEST_CASE("cli exit codes distinguish usage errors from verification results") {
  CHECK(run_cli({}).code == 2);                       // missing subcommand
  CHECK(run_cli({"bogus"}).code == 2);                // unknown subcommand
  CHECK(run_cli({"--help"}).code == 0);               // help is not an error
  CHECK(run_cli({"combi", "det", "--family", "Brect", "--n", "4"}).code == 2);
  CHECK(run_cli({"combi", "det", "--family", "A", "--n", "0..5"}).code == 2);
  CHECK(run_cli({"combi", "det", "--family", "A", "--n", "2..1"}).code == 2);
  CHECK(run_cli({"combi", "det", "--family", "A", "--n", "3", "--format", "yaml"}).code == 2);
  CHECK(run_cli({"torus", "classify", "--basis", "1,0;2,0", "--q", "1"}).code == 2);  // singular
  CHECK(run_cli({"torus", "classify", "--basis", "1,0;0,1", "--q", "3"}).code == 2);  // empty shell
  CHECK(run_cli({"sphere", "verify", "--example", "s7", "--a", "0", "--b", "0", "--c", "0",
                 "--d", "0"}).code == 2);
  CHECK(run_cli({"sphere", "l2", "--example", "coordinates", "--n", "2..3"}).code == 2);
}

TEST_CASE("s7 verification reports the eigenvalue discrepancy as a note") {
  const auto res = run_cli({"sphere", "verify", "--example", "s7", "--a", "1", "--b", "0",
                            "--c", "0", "--d", "0", "--format", "json"});
  CHECK(res.code == 0);
  const VerificationReport r = report_from_json(res.out.substr(0, res.out.size() - 1));
  CHECK(r.passed());
  bool saw_mu = false, saw_lambda = false, saw_note = false;
  for (const auto& it : r.items) {
    if (it.id == "mu") {
      saw_mu = true;
      CHECK(it.computed == "-9");
    }
    if (it.id == "lambda") {
      saw_lambda = true;
      CHECK(it.expected == "-27");
    }
    if (it.id == "note:cited lambda") {
      saw_note = true;
      CHECK(it.expected == "-15");
      CHECK(contains(it.computed, "-27"));
      CHECK(it.pass);  // informational, never fails the report
    }
  }
  CHECK(saw_mu);
  CHECK(saw_lambda);
  CHECK(saw_note);
}

TEST_CASE("remaining subcommands produce passing reports") {
  const auto l2 = run_cli({"sphere", "l2", "--example", "coordinates", "--n", "2",
                           "--max-degree", "4", "--format", "json"});
  CHECK(l2.code == 0);
  const VerificationReport lr = report_from_json(l2.out.substr(0, l2.out.size() - 1));
  CHECK(lr.task == "sphere l2 example=coordinates n=2 vanish<=4 ratio<=4");
  CHECK(lr.passed());

  const auto spec = run_cli({"torus", "spectrum", "--basis", "1,0;0,1", "--q", "2",
                             "--format", "json"});
  CHECK(spec.code == 0);
  const VerificationReport sr = report_from_json(spec.out.substr(0, spec.out.size() - 1));
  REQUIRE(sr.items.size() == 3);
  CHECK(sr.items[0].id == "q=0");
  CHECK(sr.items[1].id == "q=1");
  CHECK(sr.items[1].computed == "multiplicity 4");
  CHECK(sr.items[2].id == "q=2");

  const auto kernel = run_cli({"combi", "kernel", "--n", "1..6", "--format", "json"});
  CHECK(kernel.code == 0);

  const auto recur = run_cli({"combi", "recur", "--n", "1..6", "--format", "json"});
  CHECK(recur.code == 0);

  const auto polys = run_cli({"combi", "polys", "--n", "1..6", "--format", "json"});
  CHECK(polys.code == 0);

  const auto coords = run_cli({"sphere", "verify", "--example", "coordinates", "--n", "2..3",
                               "--format", "json"});
  CHECK(coords.code == 0);
}
