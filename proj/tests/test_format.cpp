#include <doctest.h>

#include <sstream>

#include "sniep/classify.hpp"
#include "sniep/format.hpp"
#include "sniep/guo.hpp"
#include "sniep/pattern_a.hpp"
#include "sniep/verify.hpp"

using namespace sniep;
using nlohmann::json;

namespace {

const SortedSpectrum kExample1 = SortedSpectrum::from_descending({1000, 381, 360, -641, -750});
const SortedSpectrum kExample2 = SortedSpectrum::from_descending({1000, 370, 367, -637, -750});

}  // namespace

TEST_CASE("numbers carry 17 significant digits") {
  CHECK(format_number(350.0) == "350");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-1.0 / 3.0) == "-0.33333333333333331");
}

TEST_CASE("matrix text round-trips exactly") {
  const SymMatrix5 a = build_pattern_a(kExample1);
  const std::string text = format_matrix_text(a);
  std::istringstream lines(text);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string f;
    int cols = 0;
    while (fields >> f) ++cols;
    CHECK(cols == 5);
  }
  CHECK(rows == 5);
  CHECK(parse_matrix(text).entries() == a.entries());
}

TEST_CASE("matrix JSON round-trips exactly") {
  const SymMatrix5 a = build_pattern_a(kExample1);
  const json j = to_json(a);
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  CHECK(j[0].size() == 5);
  CHECK(parse_matrix(j.dump()).entries() == a.entries());
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS_AS(parse_matrix("1 2 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n0 0 0 0 x"),
                  std::invalid_argument);
  // Not symmetric.
  CHECK_THROWS_AS(parse_matrix("1 2 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n0 0 0 0 1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("[[1,0],[0,1]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("[[1,0,0,0,0],"), std::invalid_argument);
  CHECK_NOTHROW(parse_matrix("1,0,0,0,0, 0,1,0,0,0, 0,0,1,0,0, 0,0,0,1,0, 0,0,0,0,1"));
}

TEST_CASE("decision JSON") {
  const json a = to_json(classify(kExample1));
  CHECK(a["verdict"] == "Realizable");
  CHECK(a["certificate"] == "PatternA");
  CHECK_FALSE(a.contains("reason"));
  CHECK_FALSE(a.contains("g"));
  CHECK(a["details"]["e1"] == 350.0);
  CHECK(a["details"]["r"] == 306540.0);
  CHECK(a["details"]["u"] == 355160.0);
  CHECK(a["details"]["mn_sum"] == 719.0);

  const json b = to_json(classify(kExample2));
  CHECK(b["certificate"] == "PatternB");
  CHECK(b["g"].get<double>() == doctest::Approx(174.2391939));

  const json n = to_json(classify(SortedSpectrum::from_descending({1, 0, 0, 0, -2})));
  CHECK(n["verdict"] == "NotRealizable");
  CHECK(n["reason"] == "PFViolated");
  CHECK_FALSE(n.contains("certificate"));

  const json u = to_json(classify(SortedSpectrum::from_descending({100, 40, 30, -75, -85})));
  CHECK(u["verdict"] == "Unknown");
  CHECK_FALSE(u.contains("certificate"));
  CHECK_FALSE(u.contains("reason"));
}

TEST_CASE("verification report JSON") {
  const json r = to_json(verify_spectrum(build_pattern_a(kExample1), kExample1, 1e-9));
  CHECK(r["pass"] == true);
  CHECK(r["max_deviation"].get<double>() <= 1e-6);
  CHECK(r["eigenvalues"].size() == 5);
  CHECK(r["target"] == json::array({1000.0, 381.0, 360.0, -641.0, -750.0}));
}

TEST_CASE("perturbed decision JSON") {
  const json p = to_json(decide_perturbed(kExample1, Perturbation(2, Shift::Minus, 10)));
  CHECK(p["verdict"] == "Realizable");
  CHECK(p["rule"] == "thm10");
  CHECK(p["perturbed"] == json::array({1010.0, 371.0, 360.0, -641.0, -750.0}));
  CHECK(p["matrix"].size() == 5);

  const json q = to_json(decide_perturbed(kExample1, Perturbation(3, Shift::Minus, 1e5)));
  CHECK(q["rule"] == "thm10");
}
