#include "blockscope/errors.hpp"
#include "blockscope/group_library.hpp"
#include "blockscope/io_json.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using namespace blockscope;

TEST_CASE("group file parsing") {
  const std::string text = R"({
    "name": "s3",
    "degree": 3,
    "generators": [[[0,1,2]], [[0,1]]],
    "subgroups": {"A3": [0], "flip": [[[0,1]]]},
    "p": 3
  })";
  GroupFile file = parse_group_file(text);
  CHECK(file.group.order() == 6);
  CHECK(file.subgroups.at("A3").order() == 3);
  CHECK(file.subgroups.at("flip").order() == 2);
  REQUIRE(file.p.has_value());
  CHECK(*file.p == 3);

  CHECK_THROWS_AS(parse_group_file("{"), input_error);
  CHECK_THROWS_AS(parse_group_file(R"({"degree": 3})"), input_error);
  CHECK_THROWS_AS(parse_group_file(R"({"degree": 3, "generators": [[[0,7]]]})"), input_error);
  // a subgroup that is not contained is rejected
  CHECK_THROWS_AS(parse_group_file(R"({
    "degree": 3,
    "generators": [[[0,1,2]]],
    "subgroups": {"bad": [[[0,1]]]}
  })"),
                  input_error);
}

TEST_CASE("group file round trip") {
  GroupFile file;
  file.name = "a4";
  file.group = alternating_group(4);
  file.subgroups.emplace("P", PermGroup(4, {Permutation::from_cycles(4, {{0, 1, 2}})}));
  file.p = 3;
  file.expected["order"] = "12";
  std::string text = group_file_to_json(file);
  GroupFile back = parse_group_file(text);
  CHECK(back.group.same_group_as(file.group));
  CHECK(back.subgroups.at("P").order() == 3);
  CHECK(back.expected.at("order") == "12");
  CHECK(group_file_to_json(back) == text);
}

TEST_CASE("character table export and import round trip byte-identically") {
  for (const PermGroup& g : {symmetric_group(3), alternating_group(4), cyclic_group(8),
                             dicyclic_group(3)}) {
    CharacterTable table = CharacterTable::compute(g);
    std::string exported = table_to_json(table);
    CharacterTable imported = table_from_json(exported);
    CHECK(table_to_json(imported) == exported);
  }
}

TEST_CASE("table import validates invariants") {
  CharacterTable table = CharacterTable::compute(symmetric_group(3));
  std::string exported = table_to_json(table);
  // corrupt one value: swap a degree
  std::string corrupted = exported;
  auto pos = corrupted.find("\"coeffs\": {\n          \"0\": \"2\"");
  if (pos != std::string::npos) {
    corrupted.replace(pos + 25, std::string("\"0\": \"2\"").size() - 0, "\"0\": \"3\"");
  } else {
    // fall back: change the first "2" coefficient
    pos = corrupted.find("\"2\"");
    REQUIRE(pos != std::string::npos);
    corrupted.replace(pos, 3, "\"3\"");
  }
  CHECK_THROWS(table_from_json(corrupted));
}

TEST_CASE("scene files") {
  GroupFile file;
  file.name = "f21";
  PermGroup f21 = metacyclic_group(7, 3, 2);
  file.group = f21;
  file.subgroups.emplace("G", PermGroup(10, {f21.generators()[0]}));
  file.subgroups.emplace("N", PermGroup(10));
  file.subgroups.emplace("P", PermGroup(10, {f21.generators()[1]}));
  file.p = 3;
  ActionScene scene = scene_from_group_file(file, std::nullopt);
  CHECK(scene.G.order() == 7);
  CHECK(scene.P.order() == 3);
  CHECK(scene.p == 3);
  // override the prime
  CHECK_THROWS_AS(scene_from_group_file(file, 2), domain_error); // P is not a 2-group
}

TEST_CASE("reports are deterministic given identical inputs") {
  TableCache cache;
  VerificationReport a = verify_thm_d(symmetric_group(3), 3, cache, "s3");
  VerificationReport b = verify_thm_d(symmetric_group(3), 3, cache, "s3");
  // timings differ; the comparison-relevant payload does not
  a.elapsed_ms = 0;
  b.elapsed_ms = 0;
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("table import accepts externally permuted class order") {
  CharacterTable table = CharacterTable::compute(alternating_group(4));
  std::string exported = table_to_json(table);
  // reverse the class listing (and the value rows with it), as an external
  // producer with its own class order would
  nlohmann::json j = nlohmann::json::parse(exported);
  std::reverse(j["classes"].begin(), j["classes"].end());
  for (auto& row : j["irreducibles"]) std::reverse(row.begin(), row.end());
  CharacterTable reimported = table_from_json(j.dump());
  CHECK(table_to_json(reimported) == exported);

  // swapping two value columns without the matching class metadata must fail
  nlohmann::json bad = nlohmann::json::parse(exported);
  for (auto& row : bad["irreducibles"]) std::swap(row[1], row[2]);
  CHECK_THROWS(table_from_json(bad.dump()));
}
