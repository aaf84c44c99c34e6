#include <filesystem>
#include <fstream>

#include "cedom/benchmark.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cedom;
namespace fs = std::filesystem;

namespace {

BenchmarkOptions quick_options() {
  BenchmarkOptions options;
  options.params.samples = 20;
  options.params.elite = 4;
  options.params.stagnation = 5;
  options.seeds = {1, 2};
  return options;
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("cedom_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("suite parsing") {
  auto suite = parse_suite(
      "# name source options\n"
      "G3 grid:3,3 variants=dom,secure x=3\n"
      "\n"
      "zachary file:zachary.txt\n");
  REQUIRE(suite.size() == 2);
  CHECK(suite[0].name == "G3");
  CHECK(suite[0].source == "grid:3,3");
  CHECK(suite[0].variants == std::vector<VariantKind>{VariantKind::Domination, VariantKind::SecureDomination});
  CHECK(suite[0].x == 3.0);
  CHECK(suite[1].variants.size() == 4);
  CHECK_FALSE(suite[1].x.has_value());

  CHECK_THROWS_AS(parse_suite("G3 grid:3,3 variants=roman\n"), ParseError);
  CHECK_THROWS_AS(parse_suite("G3\n"), ParseError);
  CHECK_THROWS_AS(parse_suite("G3 grid:3,3 colour=blue\n"), ParseError);
}

TEST_CASE("optima sidecar") {
  auto table = parse_optima(R"({"_comment": "x", "G3": {"dom": 3, "secure": {"value": 4, "exact": false}}})");
  CHECK(table.size() == 1);
  CHECK(table["G3"][VariantKind::Domination] == KnownValue{3, true});
  CHECK(table["G3"][VariantKind::SecureDomination] == KnownValue{4, false});
  CHECK_THROWS(parse_optima(R"({"G3": {"roman": 3}})"));

  auto bundled = load_optima(CEDOM_DATA_DIR "/optima.json");
  CHECK(bundled.at("zachary").at(VariantKind::SecureDomination).value == 9);
  CHECK(bundled.at("G(5,5)").at(VariantKind::Domination).value == 7);
}

TEST_CASE("benchmark records, infeasible pairs and gaps") {
  auto dir = scratch_dir("bench");
  {
    std::ofstream(dir / "iso.txt") << "3\n0 1\n";
  }
  auto suite = parse_suite("G3 grid:3,3 variants=dom,total x=3\niso file:iso.txt variants=total,dom\n");
  auto optima = parse_optima(R"({"G3": {"dom": 3, "total": 3}})");
  auto records = run_benchmark(suite, dir, optima, quick_options());
  REQUIRE(records.size() == 4);
  CHECK(records[0].instance == "G3");
  CHECK(records[0].variant == VariantKind::Domination);
  CHECK(records[0].best_score == 3);
  CHECK(records[0].gap() == 0);
  CHECK(records[1].variant == VariantKind::TotalDomination);
  CHECK_FALSE(records[2].feasible);
  CHECK(records[3].feasible);
  CHECK(records[3].best_score == 2);

  auto series = series_csv(suite, records);
  CHECK(series.find("dom,3,G3,3,3,") != std::string::npos);
  CHECK(series.find("iso") == std::string::npos);

  write_outputs(dir / "out" / "run", records, suite);
  CHECK(fs::exists(dir / "out" / "run.csv"));
  CHECK(fs::exists(dir / "out" / "run.json"));
  CHECK(fs::exists(dir / "out" / "run_series.csv"));
  std::ifstream in(dir / "out" / "run.json");
  auto doc = nlohmann::json::parse(in);
  CHECK(doc.size() == 4);
  CHECK(doc[2]["best_score"].is_null());
}

TEST_CASE("a missing instance file fails before solving") {
  auto dir = scratch_dir("missing");
  auto suite = parse_suite("G3 grid:3,3\nghost file:ghost.txt\n");
  int solved = 0;
  auto options = quick_options();
  options.on_record = [&](const ResultRecord&) { ++solved; };
  CHECK_THROWS(run_benchmark(suite, dir, {}, options));
  CHECK(solved == 0);
}

TEST_CASE("bundled suites parse and reference loadable instances") {
  for (const char* name : {"grids.txt", "snarks.txt", "literature.txt", "smoke.txt"}) {
    const fs::path path = fs::path(CEDOM_DATA_DIR) / "suites" / name;
    auto suite = load_suite(path);
    CHECK(!suite.empty());
    for (const auto& entry : suite) CHECK_NOTHROW(load_suite_instance(entry, path.parent_path()));
  }
}
