#include <doctest.h>

#include "support/checks.hpp"
#include "versorlab/catalog.hpp"
#include "versorlab/json_io.hpp"

using namespace versorlab;
using vltest::error_of;
using nlohmann::json;

TEST_CASE("multivector JSON round trip") {
  const Signature sig{3, 1};
  const auto m = Multivector::scalar(sig, 0.5) + Multivector::blade(sig, 0b1001, -2.0) +
                 Multivector::blade(sig, 0b0100, 1e-12);
  const json j = to_json(m);
  CHECK(j["sig"] == json::array({3, 1}));
  CHECK(j["coeffs"].size() == 2);
  CHECK(j["coeffs"]["e14"] == -2.0);
  CHECK(approx_equal(multivector_from_json(j), m));
  CHECK(error_of([] { multivector_from_json(json{{"sig", {3}}, {"coeffs", json::object()}}); }) ==
        ErrorCode::kParseError);
  CHECK(error_of([] { multivector_from_json(json{{"sig", {2, 0}}, {"coeffs", {{"e3", 1}}}}); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("root system input") {
  const json j = json::parse(R"({"name": "mine", "sig": [2, 0], "simple_roots": [[1, 0], [-0.5, 0.8660254037844386]]})");
  const RootSystemInput in = root_system_input_from_json(j);
  CHECK(in.name == "mine");
  CHECK(in.sig == Signature(2, 0));
  CHECK(close_roots(in.simple_roots).size() == 6);
  CHECK(error_of([] {
          root_system_input_from_json(json::parse(R"({"sig": [2, 0], "simple_roots": [[1, "x"]]})"));
        }) == ErrorCode::kParseError);
  CHECK(error_of([] {
          root_system_input_from_json(json::parse(R"({"sig": [2, 0], "simple_roots": [[1, 0, 0]]})"));
        }) == ErrorCode::kParseError);
}

TEST_CASE("root system output") {
  const json j = to_json(catalog("B3"));
  CHECK(j["name"] == "B3");
  CHECK(j["roots"].size() == 18);
  CHECK(j["cartan"].size() == 3);
  CHECK(j["cartan"][1][2] == -2.0);
  CHECK(j["diagram"] == json::parse("[[1, 2, 3], [2, 3, 4]]"));
}

TEST_CASE("group tables") {
  const VersorGroup g = generate_spin(catalog("A3"));
  const json t = group_table_json(g, conjugacy_classes(g));
  CHECK(t["kind"] == "spin");
  CHECK(t["order"] == 24);
  REQUIRE(t["classes"].size() == 7);
  CHECK(t["classes"][6]["size"] == 6);
  CHECK(t["classes"][6]["order"] == 4);
  CHECK(t["classes"][6]["members"].size() == 6);
  CHECK(t["classes"][2]["inverse_class"] == 3);
  const json q = group_table_json(quotient_by_sign(g));
  CHECK(q["order"] == 12);
  CHECK(q["classes"][1]["order"] == 2);
  CHECK(q["classes"][2]["order"] == 3);
}

TEST_CASE("clean snaps noise") {
  CHECK(clean(1e-12) == 0.0);
  CHECK(clean(-1e-12) == 0.0);
  CHECK(clean(0.25) == 0.25);
}
