#include <doctest.h>

#include <cmath>
#include <limits>

#include "polarfix/errors.hpp"
#include "polarfix/json_io.hpp"
#include "test_support.hpp"

using namespace polarfix;
using nlohmann::json;

namespace {
const double kInfD = std::numeric_limits<double>::infinity();

/* Serialize, parse back, serialize again: the two dumps must be identical and
 * the reparsed set must carry the same variant. */
void round_trip(const ConvexSet& c) {
  const std::string once = canonical_dump(set_to_json(c));
  const ConvexSet back = set_from_json(parse_json(once));
  CHECK(back.index() == c.index());
  CHECK(canonical_dump(set_to_json(back)) == once);
}
}  // namespace

TEST_CASE("every representation survives the byte round trip") {
  round_trip(Ball{1.0});
  round_trip(Ball{0.0625});
  round_trip(Ellipsoid{Matrix{{0.25, 0.0}, {0.0, 4.0}}});
  round_trip(Ellipsoid{Matrix{{2.0, -0.5}, {-0.5, 3.0}}});
  round_trip(PolytopeV{{{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}});
  round_trip(PolytopeH{HPolyData{{{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}}});
  round_trip(ConeV{{{1.0, 0.0}, {1.0, 1.0}}});
  round_trip(ConeH{HPolyData{{{-1.0, 0.0}, {0.0, -1.0}}}});
  round_trip(LorentzCone{{0.0, 0.0, 1.0}});
  round_trip(Orthant{{1, -1, 1}});
  round_trip(Interval{-0.5, 2.0});
  round_trip(Interval{-kInfD, 0.0});
  round_trip(Interval{0.0, kInfD});
  // 17 significant digits: an awkward double survives exactly
  round_trip(Ball{0.1 + 0.2});
  round_trip(Interval{-1.0 / 3.0, std::sqrt(2.0)});
}

TEST_CASE("interval infinities use endpoint strings") {
  const json j = set_to_json(Interval{-kInfD, 0.0});
  CHECK(j.at("lo") == "-inf");
  CHECK(j.at("hi") == 0.0);
  CHECK(endpoint_from_json(json("inf")) == kInfD);
  CHECK(endpoint_from_json(json(1.5)) == 1.5);
  CHECK_THROWS_AS(endpoint_from_json(json("wide")), BadParams);
}

TEST_CASE("operator forms") {
  const Operator g(Matrix{{0.0, 2.0}, {-1.0, 0.0}});
  const Operator back = operator_from_json(operator_to_json(g));
  CHECK(max_abs_entry(back.matrix() - g.matrix()) == 0.0);

  const Operator s = operator_from_json(parse_json(R"({"scalar": -1, "dim": 3})"));
  CHECK(s.dim() == 3);
  CHECK(s.matrix()(0, 0) == -1.0);
  CHECK(s.matrix()(2, 2) == -1.0);

  CHECK_THROWS_AS(operator_from_json(parse_json(R"({"scalar": -1})")), BadParams);
  CHECK_THROWS_AS(operator_from_json(parse_json(R"({"matrix": [[1, 2]]})")), BadParams);
}

TEST_CASE("strict parsing rejects malformed documents") {
  CHECK_THROWS_AS(set_from_json(parse_json(R"({"radius": 1})")), BadParams);
  CHECK_THROWS_AS(set_from_json(parse_json(R"({"type": "blob"})")), BadParams);
  CHECK_THROWS_AS(set_from_json(parse_json(R"({"type": "ball"})")), BadParams);
  CHECK_THROWS_AS(set_from_json(parse_json(R"({"type": "ball", "radius": 1, "x": 2})")),
                  BadParams);
  CHECK_THROWS_AS(
      set_from_json(parse_json(R"({"type": "interval", "lo": 2, "hi": 1})")), BadParams);
  CHECK_THROWS_AS(parse_json("{nope"), BadParams);
  CHECK_THROWS_AS(parse_json(""), BadParams);
}

TEST_CASE("canonical dump is deterministic and key sorted") {
  const json a = {{"zeta", 1.0}, {"alpha", 2.0}};
  const std::string s = canonical_dump(a);
  CHECK(s.find("alpha") < s.find("zeta"));
  CHECK(s.back() == '\n');
  CHECK(canonical_dump(a) == s);

  // negative zero is flushed so equal values print equal bytes
  const json z = {{"v", -0.0}};
  CHECK(canonical_dump(z).find("-0") == std::string::npos);

  // a raw non-finite double has no representation outside endpoint strings
  json bad;
  bad["v"] = kInfD;
  CHECK_THROWS_AS(canonical_dump(bad), Error);
}

TEST_CASE("reports serialize with their verdict") {
  ResidualReport rep;
  rep.kind = ResidualKind::support;
  rep.dirs = 512;
  rep.max_residual = 1.25e-9;
  rep.argmax = {1.0, 0.0};
  rep.pass = true;
  rep.tolerance = 1e-8;
  const json j = report_to_json(rep);
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("dirs") == 512);
  CHECK(j.at("max_residual").get<double>() == doctest::Approx(1.25e-9));
  const std::string dump = canonical_dump(j);
  CHECK(dump.find("support") != std::string::npos);
}
