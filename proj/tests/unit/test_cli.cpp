#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "eqsub/cli.hpp"
#include "eqsub/error.hpp"
#include "eqsub/input.hpp"
#include "support/fixtures.hpp"

using namespace eqsub;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "eqsub");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("eqsub_test_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("presets parse") {
  CHECK(io::parse_preset("kp:2:1/2") == act::kp_action(2, exact::RatAngle(1, 2)));
  CHECK(io::parse_preset("double:sym:3").G().order() == 6);
  CHECK(io::parse_preset("trivial:product:cyclic:2,cyclic:2:cyclic:3").K().order() == 3);
  CHECK(io::parse_preset("trivial:product:cyclic:2,cyclic:2:cyclic:3").G().order() == 4);
  CHECK_FALSE(io::parse_preset("twisted-double:2:1").omega().is_trivial());
  CHECK(io::parse_preset("mu-character:4") == act::fixtures::mu_character(4));
  CHECK_THROWS_WITH_AS(io::parse_preset("kp:2"), doctest::Contains("Parse"), Error);
  CHECK_THROWS_WITH_AS(io::parse_preset("nothing"), doctest::Contains("Parse"), Error);
  CHECK_THROWS_WITH_AS(io::parse_preset("kp:2:1/3"), doctest::Contains("BadOrder"), Error);
}

TEST_CASE("input documents round-trip") {
  for (const auto& f : testfix::all()) {
    INFO(f.name);
    auto j = io::action_data_json(f.data);
    CHECK(io::action_data_from_json(j) == f.data);
    auto p = temp_file("roundtrip.json");
    write(p, j.dump());
    CHECK(io::load_input(p.string()) == f.data);
  }
}

TEST_CASE("input document forms") {
  using io::json;
  auto swap = io::action_data_from_json(json::parse(R"j({"A": "cyclic:2", "action": "swap",
      "beta": {"(1,2,1)": "1/2", "(1,2,3)": "1/2", "(1,3,1)": "1/2", "(1,3,3)": "1/2"},
      "mu": {"(1,1,3)": "1/2"}})j"));
  CHECK(swap == act::kp_action(2, exact::RatAngle(1, 2)));
  auto conj = io::action_data_from_json(json::parse(R"j({"G": "sym:3", "action": "conjugation"})j"));
  CHECK(conj == act::double_action(grp::symmetric_group(3), act::Cocycle3(grp::symmetric_group(3))));
  auto raw = io::action_data_from_json(json::parse(R"j({"G": [[0,1],[1,0]], "K": {"table": [[0,1],[1,0]]},
      "action": [[0,1],[0,1]]})j"));
  CHECK(raw == act::fixtures::triv(grp::cyclic_group(2), grp::cyclic_group(2)));
  auto over = io::action_data_from_json(json::parse(R"j({"preset": "kp:2:1/2", "mu": {"(1,1,3)": "0"}})j"));
  CHECK_FALSE(act::validate_action_data(over).valid());
  CHECK_THROWS_WITH_AS(io::action_data_from_json(json::parse(R"j({"G": "cyclic:2"})j")), doctest::Contains("Parse"), Error);
  CHECK_THROWS_WITH_AS(io::action_data_from_json(json::parse(R"j({"preset": "kp:2:0", "mu": {"(5,0,0)": "1/2"}})j")),
                       doctest::Contains("out of range"), Error);
  CHECK_THROWS_WITH_AS(io::action_data_from_json(json::parse(R"j({"preset": "kp:2:0", "beta": {"(1,0)": "1/2"}})j")),
                       doctest::Contains("bad table key"), Error);
}

TEST_CASE("validate command") {
  auto r = run({"validate", "--preset", "kp:2:1/2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("valid", 0) == 0);

  auto p = temp_file("broken.json");
  write(p, R"j({"preset": "kp:2:1/2", "mu": {"(1,1,3)": "0"}})j");
  auto bad = run({"validate", "--input", p.string()});
  CHECK(bad.code == cli::kExitInvalid);
  CHECK(bad.out.find("invalid") != std::string::npos);
  CHECK(run({"lattice", "--input", p.string()}).code == cli::kExitInvalid);
}

TEST_CASE("lattice command") {
  auto r = run({"lattice", "--preset", "trivial:cyclic:1:cyclic:1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 2);

  auto dot = temp_file("lattice.dot");
  auto js = temp_file("lattice.json");
  auto k = run({"lattice", "--preset", "kp:2:1/2", "--dot", dot.string(), "--json", js.string()});
  CHECK(k.code == 0);
  CHECK(lines(k.out) == 7);
  CHECK(slurp(dot).rfind("digraph lattice {", 0) == 0);
  auto j = io::json::parse(slurp(js));
  CHECK(j["triples"].size() == 6);
}

TEST_CASE("compare command") {
  auto r = run({"compare", "--preset", "kp:2:1/2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("as-stated") != std::string::npos);
  CHECK(r.out.find("main-theorem") != std::string::npos);
  CHECK(r.out.find("oracle") != std::string::npos);
  CHECK(r.out.find("main-theorem vs oracle: agree") != std::string::npos);
  CHECK(run({"compare", "--preset", "double:sym:3"}).code == cli::kExitOk);
}

TEST_CASE("other commands") {
  auto k = run({"kp-classify", "--n", "2", "--q", "1/2", "--mode", "as-stated"});
  CHECK(k.code == 0);
  CHECK(k.out.find("total 6") != std::string::npos);
  CHECK(run({"kp-classify", "--preset", "kp:3:1/3"}).code == 0);
  auto e = run({"enumerate", "--preset", "kp:2:1/2", "--L", "0,3", "--H", "0,1"});
  CHECK(e.code == 0);
  CHECK(e.out.find("1/4") != std::string::npos);
  CHECK(run({"enumerate", "--preset", "kp:2:1/2", "--equivariant-only"}).code == 0);
  CHECK(run({"obstruct", "--preset", "kp:2:1/2"}).code == 0);
  CHECK(run({"hopf", "--preset", "kp:3:1/3"}).code == 0);
  CHECK(run({"hopf", "--preset", "twisted-double:2:1"}).code == cli::kExitInvalid);
  CHECK(run({"oracle", "--preset", "kp:2:0", "--seed", "5"}).code == 0);
  CHECK(run({"presets"}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  auto r = run({"lattice"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("--preset") != std::string::npos);
  CHECK(run({"lattice", "--preset", "kp:2:0", "--input", "x.json"}).code == cli::kExitUsage);
  CHECK(run({"kp-classify", "--preset", "kp:2:0", "--mode", "sideways"}).code == cli::kExitUsage);
  CHECK(run({"oracle", "--preset", "kp:2:0", "--seed", "abc"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("--json - writes only the document to stdout") {
  for (const std::string cmd : {"validate", "lattice", "kp-classify", "compare"}) {
    INFO(cmd);
    auto r = run({cmd, "--preset", "kp:2:1/2", "--json", "-"});
    CHECK(r.code == 0);
    CHECK(io::json::accept(r.out));
  }
}

TEST_CASE("JSON outputs are reproducible") {
  for (const std::string cmd : {"oracle", "lattice", "hopf", "compare"}) {
    INFO(cmd);
    auto a = temp_file("a.json"), b = temp_file("b.json");
    CHECK(run({cmd, "--preset", "kp:2:1/2", "--json", a.string()}).code == 0);
    CHECK(run({cmd, "--preset", "kp:2:1/2", "--json", b.string()}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
  }
}
