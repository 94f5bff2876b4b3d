#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "orbitdata/errors.hpp"
#include "orbitdata/io.hpp"

using namespace orbitdata;

TEST_CASE("group spec documents") {
  auto s3 = group_from_spec(R"({"type":"permutation","degree":3,
                                "generators":[[1,2,0],[1,0,2]]})");
  CHECK(s3.group->order() == 6);
  CHECK(s3.generator_names.count("g1"));

  auto c33 = group_from_spec(R"({"type":"cyclic_product","orders":[3,3]})");
  CHECK(c33.group->order() == 9);
  CHECK(c33.generator_names.at("x") == c33.group->factor_generators()[0]);

  auto z2 = group_from_spec(R"({"type":"table","order":2,"mul":[0,1,1,0]})");
  CHECK(z2.group->order() == 2);

  auto q8 = group_from_spec(R"({"type":"preset","name":"Q8"})");
  CHECK(q8.group->order() == 8);

  CHECK_THROWS_AS(group_from_spec("not json"), ParseError);
  CHECK_THROWS_AS(group_from_spec(R"({"type":"starfish"})"), ParseError);
  CHECK_THROWS_AS(group_from_spec(R"({"type":"permutation","degree":3})"), ParseError);
  CHECK_THROWS_AS(group_from_spec(R"({"type":"table","order":2,"mul":[1,0,0,1]})"),
                  InvalidGroupTable);
}

TEST_CASE("element words") {
  auto s3 = preset_group("S3");
  int a = s3.generator_names.at("a"), b = s3.generator_names.at("b");
  CHECK(evaluate_word(s3, "a") == a);
  CHECK(evaluate_word(s3, "a^3") == 0);
  CHECK(evaluate_word(s3, "a*b") == s3.group->mul(a, b));
  CHECK(evaluate_word(s3, "a^-1") == s3.group->inv(a));
  CHECK(evaluate_word(s3, "e") == 0);
  CHECK(evaluate_word(s3, std::to_string(b)) == b);
  CHECK(evaluate_word(s3, "#" + std::to_string(b)) == b);
  CHECK_THROWS_AS(evaluate_word(s3, "qq"), ParseError);
  CHECK_THROWS_AS(evaluate_word(s3, "#99"), ParseError);

  // words round-trip through evaluation
  for (int x = 0; x < s3.group->order(); ++x) CHECK(evaluate_word(s3, element_word(s3, x)) == x);
  auto c12 = preset_group("C4xC3");
  for (int x = 0; x < c12.group->order(); ++x)
    CHECK(evaluate_word(c12, element_word(c12, x)) == x);
}

TEST_CASE("datum parsing") {
  auto s3 = preset_group("S3");
  auto cls = conjugacy_classes(s3.group);
  auto d = parse_datum(s3, *cls, "a,a,a");
  CHECK(d.total() == 3);
  CHECK_THROWS_AS(parse_datum(s3, *cls, "e"), TrivialClassPresent);
}

TEST_CASE("hom spec file") {
  std::string path = "hom_spec_test.json";
  {
    std::ofstream out(path);
    out << R"({"source": "C3", "target": "S3", "images": ["a"]})";
  }
  auto hs = hom_from_spec_file(path);
  CHECK(hs.hom.source->order() == 3);
  CHECK(hs.hom.target->order() == 6);
  CHECK(hs.hom.image[1] == hs.target.generator_names.at("a"));
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << R"({"source": "C4", "target": "S3", "images": ["a"]})";  // order mismatch
  }
  CHECK_THROWS_AS(hom_from_spec_file(path), NotAHomomorphism);
  std::remove(path.c_str());
}

TEST_CASE("report serialization is deterministic") {
  auto r = structure_closed_form(preset_group("S3").group);
  std::string a = to_json(r);
  std::string b = to_json(r);
  CHECK(a == b);
  CHECK(a.find("\"free_rank\": 0") != std::string::npos);
  CHECK(a.find("\"two_torsion_rank\": 1") != std::string::npos);
  CHECK(a.find("\"source\": \"closed-form\"") != std::string::npos);

  auto cat = general_basis(preset_group("S3").group);
  auto s3 = preset_group("S3");
  std::string cj = catalog_to_json(cat, s3);
  CHECK(cj.find("\"tag\": \"N1\"") != std::string::npos);
  CHECK(cj.find("\"order\": \"two\"") != std::string::npos);
}
