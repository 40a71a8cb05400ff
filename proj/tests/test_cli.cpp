#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spiro/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = spiro::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return lines;
}

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt6 = std::sqrt(6.0);

}  // namespace

TEST_CASE("generate") {
  const auto two = run({"generate", "--n", "2"});
  REQUIRE(two.code == 0);
  const json j = two.parsed();
  CHECK(j["links"] == "");
  CHECK(j["n"] == 2);
  CHECK(j["vertices"] == 11);
  CHECK(j["edges"].size() == 12);
  CHECK(j["edge_profile"]["m22"] == 8);
  CHECK(j["rng"] == "splitmix64-v1");

  const auto ortho = run({"generate", "--n", "5", "--p-ortho", "1", "--p-meta", "0", "--p-para", "0"});
  REQUIRE(ortho.code == 0);
  CHECK(ortho.parsed()["links"] == "OOO");
  CHECK(ortho.parsed()["edge_profile"]["m44"] == 3);

  const auto a = run({"generate", "--n", "5", "--seed", "7"});
  const auto b = run({"generate", "--n", "5", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("compute") {
  const auto m1 = run({"compute", "--index", "first-zagreb", "--links", "OMP"});
  REQUIRE(m1.code == 0);
  CHECK(m1.parsed()["value"] == 152.0);
  CHECK(m1.parsed()["n"] == 5);
  CHECK(m1.parsed()["m44"] == 1);

  const auto m2 = run({"compute", "--index", "second-zagreb", "--links", ""});
  REQUIRE(m2.code == 0);
  CHECK(m2.parsed()["value"] == 64.0);

  const auto nir = run({"compute", "--index", "nirmala", "--links", "O"});
  REQUIRE(nir.code == 0);
  CHECK(nir.parsed()["value"].get<double>() ==
        doctest::Approx(22 + 6 * kSqrt6 + 2 * kSqrt2).epsilon(1e-14));

  const auto seeded = run({"compute", "--index", "randic", "--n", "30", "--seed", "5"});
  REQUIRE(seeded.code == 0);
  CHECK(seeded.parsed()["links"].get<std::string>().size() == 28);

  const auto var = run({"compute", "--index", "variable-sum-connectivity", "--a", "0.5", "--links", "O"});
  REQUIRE(var.code == 0);
  CHECK(var.parsed()["value"] == nir.parsed()["value"]);
  CHECK(var.parsed()["a"] == 0.5);
}

TEST_CASE("validation failures exit with code 2 and name the flag") {
  const auto bad_links = run({"compute", "--index", "randic", "--links", "OXP"});
  CHECK(bad_links.code == 2);
  CHECK(bad_links.err.find("--links") != std::string::npos);

  CHECK(run({"compute", "--index", "randic", "--links", "O", "--n", "3"}).code == 2);
  CHECK(run({"compute", "--index", "randic"}).code == 2);

  const auto unknown = run({"analyze", "--index", "wiener", "--n", "5"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("--index") != std::string::npos);

  const auto no_a = run({"analyze", "--index", "variable-first-zagreb", "--n", "5"});
  CHECK(no_a.code == 2);
  CHECK(no_a.err.find("--a") != std::string::npos);

  const auto sum = run({"analyze", "--index", "nirmala", "--n", "5", "--p-ortho", "0.5",
                        "--p-meta", "0.5", "--p-para", "0.5"});
  CHECK(sum.code == 2);
  CHECK(sum.err.find("--p-ortho") != std::string::npos);

  const auto partial = run({"analyze", "--index", "nirmala", "--n", "5", "--p-meta", "0.5"});
  CHECK(partial.code == 2);

  const auto small_n = run({"analyze", "--index", "nirmala", "--n", "1"});
  CHECK(small_n.code == 2);
  CHECK(small_n.err.find("--n") != std::string::npos);

  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"generate", "--n", "x"}).code == 2);
  CHECK(run({"distribution", "--index", "nirmala", "--n", "4", "--format", "xml"}).code == 2);
}

TEST_CASE("analyze") {
  const auto r = run({"analyze", "--index", "sombor", "--n", "100", "--p-ortho", "0.3"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["B"].get<double>() == doctest::Approx(6 * kSqrt2 - 4 * kSqrt5).epsilon(1e-13));
  CHECK(j["p_meta"].get<double>() == doctest::Approx(0.35));
  CHECK(j["alpha"].size() == 3);
  for (const char* key : {"index", "n", "p_ortho", "p_meta", "p_para", "ti2", "alpha", "alpha_bar",
                          "beta", "A", "B", "C", "mean", "variance", "deterministic"}) {
    CHECK(j.contains(key));
  }
  CHECK_FALSE(j.contains("a"));
  CHECK(j["deterministic"] == false);

  const auto m1 = run({"analyze", "--index", "first-zagreb", "--n", "7"});
  CHECK(m1.parsed()["mean"] == 216.0);
  CHECK(m1.parsed()["variance"] == 0.0);
  CHECK(m1.parsed()["deterministic"] == true);
}

TEST_CASE("analyze --exhaustive honours the enumeration cap") {
  const auto r = run({"analyze", "--index", "second-zagreb", "--n", "6", "--p-ortho", "0.5",
                      "--exhaustive"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["enumerated"]["sequences"] == 81);
  CHECK(j["enumerated"]["mean"].get<double>() == doctest::Approx(j["mean"].get<double>()).epsilon(1e-12));
  CHECK(j["enumerated"]["variance"].get<double>() ==
        doctest::Approx(j["variance"].get<double>()).epsilon(1e-10));

  CHECK(run({"analyze", "--index", "nirmala", "--n", "13", "--exhaustive"}).code == 2);
  ::setenv("SPIRO_MAX_ENUM_N", "5", 1);
  CHECK(run({"analyze", "--index", "nirmala", "--n", "6", "--exhaustive"}).code == 2);
  ::setenv("SPIRO_MAX_ENUM_N", "6", 1);
  CHECK(run({"analyze", "--index", "nirmala", "--n", "6", "--exhaustive"}).code == 0);
  ::unsetenv("SPIRO_MAX_ENUM_N");
}

TEST_CASE("distribution") {
  const auto r = run({"distribution", "--index", "second-zagreb", "--n", "4", "--p-ortho",
                      "0.3333333", "--p-meta", "0.3333333", "--p-para", "0.3333334"});
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "k,value,probability");
  CHECK(lines[1].rfind("0,144,", 0) == 0);
  CHECK(lines[3].rfind("2,152,", 0) == 0);

  const auto det = run({"distribution", "--index", "first-zagreb", "--n", "10"});
  REQUIRE(det.code == 0);
  const auto det_lines = lines_of(det.out);
  REQUIRE(det_lines.size() == 2);
  CHECK(det_lines[1] == ",312,1");

  const auto js = run({"distribution", "--index", "nirmala", "--n", "5", "--format", "json"});
  REQUIRE(js.code == 0);
  CHECK(js.parsed()["atoms"].size() == 4);
}

TEST_CASE("numbers are printed with 17 significant digits in CSV") {
  const auto r = run({"distribution", "--index", "randic", "--n", "3"});
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  const std::string value = lines[1].substr(2, lines[1].find(',', 2) - 2);
  const double parsed = std::stod(value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", parsed);
  CHECK(value == buf);
}

TEST_CASE("compare") {
  const auto r = run({"compare", "--n", "50", "--p-ortho", "0.5"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["expected"].size() == 5);
  CHECK(j["all_hold"] == true);
  for (const auto& o : j["orderings"]) CHECK(o["holds"] == true);
  CHECK(j["expected"]["first-zagreb"] == 32.0 * 50 - 8);
}

TEST_CASE("simulate") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "spiro_cli_test";
  fs::create_directories(dir);
  const std::string samples = (dir / "samples.csv").string();
  const std::string hist = (dir / "hist.csv").string();

  const auto r = run({"simulate", "--index", "nirmala", "--n", "2000", "--reps", "1000", "--seed",
                      "3", "--standardize", "--bins", "20", "--samples-out", samples,
                      "--histogram-out", hist});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["summary"]["count"] == 1000);
  CHECK(j["standardized"] == true);
  CHECK(j["normality"]["ks_statistic"].get<double>() < 0.1);
  CHECK(j["rng"] == "splitmix64-v1");

  std::ifstream sf(samples);
  std::size_t count = 0;
  for (std::string line; std::getline(sf, line);) ++count;
  CHECK(count == 1000);

  std::ifstream hf(hist);
  std::string header;
  std::getline(hf, header);
  CHECK(header == "bin_left,bin_right,count,density");
  std::size_t rows = 0;
  for (std::string line; std::getline(hf, line);) ++rows;
  CHECK(rows == 20);

  const auto again = run({"simulate", "--index", "nirmala", "--n", "2000", "--reps", "1000",
                          "--seed", "3", "--standardize", "--bins", "20", "--workers", "3"});
  CHECK(again.out == r.out);

  const auto csv = run({"simulate", "--index", "randic", "--n", "100", "--reps", "300", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(lines_of(csv.out).size() == 41);

  fs::remove_all(dir);
}

TEST_CASE("standardizing a deterministic index exits with code 3") {
  const auto r = run({"simulate", "--index", "first-zagreb", "--n", "100", "--reps", "50", "--standardize"});
  CHECK(r.code == 3);
  const auto plain = run({"simulate", "--index", "first-zagreb", "--n", "100", "--reps", "50"});
  REQUIRE(plain.code == 0);
  CHECK(plain.parsed()["summary"]["variance"] == 0.0);
  CHECK(plain.parsed()["summary"]["mean"] == 3192.0);
}

TEST_CASE("--out writes to a file") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "spiro_cli_out.json";
  const auto r = run({"compare", "--n", "10", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const json j = json::parse(f);
  CHECK(j["n"] == 10);
  fs::remove(path);
}
