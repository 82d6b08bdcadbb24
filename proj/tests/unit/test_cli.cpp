#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cesaro/errors.hpp"
#include "cesaro/operator.hpp"
#include "cli_app.hpp"
#include "function_selector.hpp"
#include "series_io.hpp"

using namespace cesaro;
using namespace cesaro::cli;
namespace fs = std::filesystem;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cesaro");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "cesaro_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("polynomial expressions") {
  const auto f = parse_polynomial("z1^2*z2 + 0.5*z1 - 2i*z2", 2);
  CHECK(f.terms().size() == 3);
  CHECK(f.coefficient({2, 1}) == Complex{1.0, 0.0});
  CHECK(f.coefficient({1, 0}) == Complex{0.5, 0.0});
  CHECK(f.coefficient({0, 1}) == Complex{0.0, -2.0});
  CHECK(f.degree_cap() == 3);

  const auto g = parse_polynomial("(1+z1)*(1-z1)", 1);
  CHECK(g.terms().size() == 2);
  CHECK(g.coefficient({2}) == Complex{-1.0, 0.0});
  CHECK(parse_polynomial("-(z1 + i)^2", 1).coefficient({0}) == Complex{1.0, 0.0});
  CHECK(parse_polynomial("1.5e-1", 3).constant_term() == Complex{0.15, 0.0});

  CHECK_THROWS_AS(parse_polynomial("z3", 2), InputError);
  CHECK_THROWS_AS(parse_polynomial("z1 +", 2), InputError);
  CHECK_THROWS_AS(parse_polynomial("2 * w", 2), InputError);
  CHECK_THROWS_AS(parse_polynomial("(z1", 2), InputError);
}

TEST_CASE("function selectors") {
  const CVector z{0.3, 0.2};
  CHECK(select_function("coordinate", 2).function.value(z) == Complex{0.3, 0.0});
  CHECK(std::abs(select_function("log-kernel", 2).function.value(z) - std::log(1.0 / 0.7)) < 1e-15);
  CHECK_FALSE(select_function("log-kernel", 2).series.has_value());
  CHECK(select_function("polynomial:z2^2", 2).series->coefficient({0, 2}) == Complex{1.0, 0.0});
  CHECK_THROWS_AS(select_function("/nonexistent/series.json", 2), InputError);
}

TEST_CASE("series files round-trip exactly") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto f = random_series(n, 8, 25, 123, n);
    const auto path = scratch("roundtrip" + std::to_string(n) + ".json");
    write_series_file(f, path.string());
    CHECK(read_series_file(path.string()) == f);
    CHECK(series_from_json(nlohmann::json::parse(series_to_json(f).dump())) == f);
  }
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"dimension": 2, "terms": []})")), InputError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(
                      R"({"dimension": 1, "degree_cap": 1, "terms": [{"alpha": [2], "re": 1, "im": 0}]})")),
                  InputError);
}

TEST_CASE("criterion report") {
  const auto r = run_cli({"criterion", "--n", "1", "--p", "1", "--q", "0", "--alpha", "1", "--g", "coordinate"});
  REQUIRE(r.code == 0);
  const auto doc = parse(r.out);
  CHECK(doc["tool"] == "cesaro");
  CHECK(doc["version"].is_string());
  CHECK(doc["config"]["params"]["alpha"] == 1.0);
  CHECK(doc["config"]["scheme"]["seed"] == 42);
  CHECK(doc["results"]["summary"]["trend"] == "bounded");
  CHECK(doc["results"]["summary"]["last"].get<double>() == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("verify suite 6 report") {
  const auto r = run_cli({"verify", "--lemma", "6", "--seed", "42"});
  REQUIRE(r.code == 0);
  const auto doc = parse(r.out);
  CHECK(doc["results"]["pass"] == true);
  CHECK(doc["results"]["max_relative_residual"].get<double>() <= 1e-12);
}

TEST_CASE("norm reports") {
  const auto r = run_cli({"norm", "--space", "besov", "--p", "2", "--q", "0", "--f", "polynomial:z1"});
  REQUIRE(r.code == 0);
  const auto doc = parse(r.out);
  CHECK(doc["results"]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(doc["results"].contains("error_estimate"));

  const auto b = run_cli({"norm", "--space", "bloch", "--alpha", "1", "--f", "log-kernel", "--refinement", "2"});
  REQUIRE(b.code == 0);
  const auto bdoc = parse(b.out);
  CHECK(bdoc["results"]["refinement_trace"].size() == 3);
  CHECK(bdoc["results"]["seminorm"].get<double>() < 2.0);
}

TEST_CASE("apply writes the image series") {
  const auto out = scratch("image.json");
  const auto report = scratch("apply-report.json");
  const auto r = run_cli({"apply", "--n", "2", "--f", "polynomial:z1 + 2", "--g", "polynomial:z1*z2 - i*z2^3",
                          "--series-out", out.string(), "-o", report.string()});
  REQUIRE(r.code == 0);
  const auto f = parse_polynomial("z1 + 2", 2);
  const auto g = parse_polynomial("z1*z2 - i*z2^3", 2);
  CHECK(read_series_file(out.string()) == apply_coefficient_route(f, g));
  CHECK(parse(slurp(report))["results"]["identity_residual"].get<double>() <= 1e-12);
}

TEST_CASE("compactness report carries scan and probe tables") {
  const auto out = scratch("compact.json");
  const auto r = run_cli({"compactness", "--n", "1", "--p", "1", "--q", "0", "--alpha", "2", "--g", "coordinate",
                          "--w-radii", "0.9,0.99", "-o", out.string()});
  REQUIRE(r.code == 0);
  const auto doc = parse(slurp(out));
  CHECK(doc["results"]["compact"] == true);
  CHECK(doc["results"]["probe"]["entries"].size() == 2);
  CHECK(fs::exists(scratch("compact-statistic.csv")));
  const auto csv = slurp(scratch("compact-probe.csv"));
  CHECK(csv.rfind("parameter,image_norm,source_norm,source_error,ratio,lower_bound\n", 0) == 0);
}

TEST_CASE("usage errors exit with 1") {
  auto r = run_cli({"norm", "--p", "-1", "--f", "coordinate"});
  CHECK(r.code == 1);
  CHECK(r.err.find("p must satisfy") != std::string::npos);
  r = run_cli({"criterion", "--q", "-1.5", "--g", "coordinate"});
  CHECK(r.code == 1);
  CHECK(r.err.find("q > -1") != std::string::npos);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"criterion"}).code == 1);
  CHECK(run_cli({"verify", "--lemma", "3"}).code == 1);
  CHECK(run_cli({"apply", "--f", "log-kernel", "--g", "coordinate"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("numerical failures exit with 2 and keep a partial report") {
  const auto r = run_cli({"norm", "--space", "besov", "--p", "4", "--f", "polynomial:1e200*z1^2"});
  CHECK(r.code == 2);
  const auto doc = parse(r.out);
  CHECK(doc["status"] == "numerical-failure");
  CHECK(doc["error"]["message"].get<std::string>().find("node") != std::string::npos);
  CHECK(doc.contains("config"));
}

TEST_CASE("identical configurations give byte-identical reports") {
  RunConfig cfg;
  cfg.command = "compactness";
  cfg.params = SpaceParams::make(1, 2.0, 0.0, 0.0);
  cfg.g_selector = "log-kernel";
  cfg.w_radii = {0.9, 0.99};
  const auto a = render(execute(cfg));
  const auto b = render(execute(cfg));
  CHECK(a == b);

  const auto p1 = scratch("det1.json");
  const auto p2 = scratch("det2.json");
  for (const auto& p : {p1, p2}) {
    REQUIRE(run_cli({"verify", "--lemma", "2", "--count", "4", "--points", "500", "-o", p.string()}).code == 0);
  }
  CHECK(slurp(p1) == slurp(p2));
  CHECK(slurp(scratch("det1-checks.csv")) == slurp(scratch("det2-checks.csv")));
}

#ifdef CESARO_CLI_PATH
TEST_CASE("the installed binary is deterministic across processes and thread counts") {
  const auto p1 = scratch("bin1.json");
  const auto p2 = scratch("bin2.json");
  const std::string base = std::string(CESARO_CLI_PATH) + " oracle --max-n 2 --max-m 2 --samples 20000 -o ";
  REQUIRE(std::system(("CESARO_THREADS=1 " + base + p1.string()).c_str()) == 0);
  REQUIRE(std::system(("CESARO_THREADS=3 " + base + p2.string()).c_str()) == 0);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(!slurp(p1).empty());
}
#endif

}  // TEST_SUITE
