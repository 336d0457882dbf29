#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "bsv/chartable.hpp"
#include "inline_tables.hpp"

using bsv::CharacterTable;
using bsv::Cyclotomic;
using bsv::Int;

namespace {

// Rebuilds a table with one character entry shifted by +1.
CharacterTable perturb(const CharacterTable& t, std::size_t row, std::size_t col) {
  auto irr = t.irreducibles();
  irr[row][col] += Cyclotomic(1);
  return CharacterTable(t.group_name(), t.order(), t.classes(), std::move(irr));
}

}  // namespace

TEST_SUITE("chartable") {

TEST_CASE("hand-built tables pass exact validation") {
  for (const auto& t : {testdata::a5_table(), testdata::s5_table()}) {
    auto rep = bsv::validate(t);
    for (const auto& c : rep.checks) {
      INFO(t.group_name(), " ", c.name, " ", c.detail);
      CHECK(c.passed);
    }
    CHECK(rep.all_passed());
  }
}

TEST_CASE("class lookup") {
  auto t = testdata::a5_table();
  CHECK(t.class_by_name("1a") == 0);
  CHECK(t.class_by_name("3a") == 2);
  CHECK_THROWS_AS(t.class_by_name("7a"), bsv::unknown_label_error);
  CHECK(t.class_size(1) == 15);
  CHECK(t.socle_order() == 60);
  CHECK(!t.has_outer_classes());
  CHECK(testdata::s5_table().has_outer_classes());
  CHECK(testdata::s5_table().socle_order() == 60);
}

TEST_CASE("every single-entry perturbation breaks orthogonality") {
  auto t = testdata::a5_table();
  for (std::size_t r = 0; r < t.num_classes(); ++r) {
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      auto bad = perturb(t, r, c);
      CHECK(!bsv::validate(bad, /*stop_on_first_failure=*/true).all_passed());
    }
  }
}

TEST_CASE("dimension mismatch is rejected at construction") {
  auto t = testdata::a5_table();
  auto irr = t.irreducibles();
  irr.back().pop_back();
  CHECK_THROWS_AS(CharacterTable("A5", t.order(), t.classes(), irr), bsv::parse_error);

  auto classes = t.classes();
  classes[1].name = "1a";
  CHECK_THROWS_AS(CharacterTable("A5", t.order(), classes, t.irreducibles()), bsv::parse_error);
}

TEST_CASE("a table with too few rows fails the square check") {
  auto t = testdata::a5_table();
  auto irr = t.irreducibles();
  irr.pop_back();
  CharacterTable bad("A5", t.order(), t.classes(), irr);
  auto rep = bsv::validate(bad);
  CHECK(!rep.all_passed());
  CHECK(rep.checks.front().name == "square");
  CHECK(!rep.checks.front().passed);
}

TEST_CASE("save/load round trip is the identity on canonical tables") {
  namespace fs = std::filesystem;
  auto t = testdata::a5_table();
  fs::path tmp = fs::temp_directory_path() / "bsv_a5_roundtrip.json";
  bsv::save_table(t, tmp.string());
  auto back = bsv::load_table(tmp.string());
  CHECK(back.group_name() == t.group_name());
  CHECK(back.order() == t.order());
  REQUIRE(back.num_classes() == t.num_classes());
  for (std::size_t i = 0; i < t.num_classes(); ++i) {
    CHECK(back.class_info(i).name == t.class_info(i).name);
    CHECK(back.class_info(i).element_order == t.class_info(i).element_order);
    CHECK(back.class_info(i).centralizer_order == t.class_info(i).centralizer_order);
    CHECK(back.class_info(i).in_socle == t.class_info(i).in_socle);
  }
  CHECK(back.irreducibles() == t.irreducibles());
  fs::remove(tmp);
}

TEST_CASE("element orders divide the group order") {
  auto t = testdata::s5_table();
  for (const auto& c : t.classes()) CHECK(t.order() % c.element_order == 0);
}

}  // TEST_SUITE
