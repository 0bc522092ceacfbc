#include <doctest.h>

#include "cancelkit/json_io.hpp"
#include "support.hpp"

using namespace cancelkit;
using nlohmann::json;

TEST_CASE("condition reports use the documented field names") {
  json j = to_json(check_conditions(testsupport::z2()));
  CHECK(j["c_max"] == 4);
  CHECK(j["t_max"] == 4);
  CHECK(j["p_holds"] == true);
  CHECK(j["cpp"] == 4);
  CHECK(j["classification"] == "Cpp4T4");
  CHECK(j.contains("witnesses"));
  json parsed = json::parse(j.dump());
  CHECK(parsed == j);
}

TEST_CASE("unbounded condition values are capped for display") {
  json j = to_json(check_conditions(testsupport::freetri()));
  CHECK(j["c_max"] == kUnboundedDisplayCap);
  CHECK(j["t_max"] == kUnboundedDisplayCap);
  CHECK(j["cpp"] == 3);
  CHECK(j["witnesses"].is_null());
}

TEST_CASE("certificates serialize with their schema fields") {
  GeodesicContext ctx = GeodesicContext::build(testsupport::z2());
  auto cert = find_bad_subword("abbA", ctx);
  REQUIRE(cert.has_value());
  json j = to_json(*cert);
  CHECK(j["kind"] == "square");
  CHECK(j["start"] == 0);
  CHECK(j["outer"] == "abbA");
  CHECK(j["cells"] == json::array({"abAB", "abAB"}));
  CHECK(j["junctions"] == "A");
  CHECK(j["replacement"] == "bb");
}

TEST_CASE("tau serializes as twice its value") {
  json j = to_json(HalfInteger{3});
  CHECK(j.dump() == "{\"twice\":3}");
}

TEST_CASE("root answers are a tagged union") {
  ConjContext ctx = testsupport::make_ctx(testsupport::z2());
  json yes = to_json(nth_root("aabb", 2, ctx));
  CHECK(yes["verdict"] == "yes");
  CHECK(yes["witness"].is_string());
  CHECK(yes["conjugator"].is_string());
  json no = to_json(nth_root("aab", 2, ctx));
  CHECK(no["verdict"] == "no");
  CHECK(no["reason"] == "exhausted");
  json bound = to_json(nth_root("aaa", 4, ctx));
  CHECK(bound["verdict"] == "no");
  CHECK(bound["reason"] == "length_bound");
}

TEST_CASE("growth counts serialize as decimal strings") {
  GrowthCount g = count_geodesics(build_geodesic_dfa(GeodesicContext::build(testsupport::z2())), 2);
  json j = to_json(g);
  CHECK(j == json::array({"1", "4", "12"}));
}
