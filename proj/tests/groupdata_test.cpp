#include "doctest.h"
#include "support.hpp"

#include "wfh/groupdata.hpp"

using namespace wfh;

namespace {

// A^k_{ij} by counting products landing on a fixed element of class k.
std::int64_t a_coeff_by_count(const GroupData& g, int i, int j, int k) {
  int target = g.representative(k);
  std::int64_t count = 0;
  for (int a : g.class_elements(i))
    for (int b : g.class_elements(j))
      if (g.mul(a, b) == target) ++count;
  return count;
}

}  // namespace

TEST_SUITE("groupdata") {
  TEST_CASE("built-in groups") {
    for (const auto& name : builtin_group_names()) {
      GroupData g = builtin_group(name);
      int total = 0;
      for (int c = 0; c < g.class_count(); ++c) total += g.class_size(c);
      CHECK(total == g.order());
      CHECK(g.class_elements(0) == std::vector<int>{0});
      for (int i = 0; i < g.class_count(); ++i)
        for (int j = 0; j < g.class_count(); ++j)
          for (int k = 0; k < g.class_count(); ++k) CHECK(g.a_coeff(i, j, k) == a_coeff_by_count(g, i, j, k));
    }
    CHECK(builtin_group("S4").order() == 24);
    CHECK(builtin_group("S4").class_count() == 5);
    CHECK(builtin_group("klein").order() == 4);
    CHECK_THROWS_AS(builtin_group("nope"), Error);
  }

  TEST_CASE("irrational or missing tables are unsupported") {
    GroupData c3 = builtin_group("C3");
    CHECK_FALSE(c3.has_char_table());
    try {
      c3.irreps();
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedCharacterField);
    }
    nlohmann::json doc = group_to_json(builtin_group("C2"));
    doc["char_table"]["irreps"][1]["values"][1] = 0.5;
    try {
      load_group(doc);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedCharacterField);
    }
  }

  TEST_CASE("central characters") {
    GroupData s3 = builtin_group("S3");
    // std irrep on the transposition class: 3 * 0 / 2.
    CHECK(central_character(s3, 2, 1) == 0);
    CHECK(central_character(s3, 1, 1) == -3);
    CHECK(central_character_int(s3, 2, 2) == -1);
  }

  TEST_CASE("group documents round trip") {
    for (const auto& name : builtin_group_names()) {
      GroupData g = builtin_group(name);
      GroupData h = load_group(group_to_json(g));
      CHECK(h.order() == g.order());
      CHECK(h.mult_rows() == g.mult_rows());
      CHECK(h.irrep_count() == g.irrep_count());
    }
  }

  TEST_CASE("invalid group documents are rejected") {
    auto code_of = [](const nlohmann::json& doc) {
      try {
        load_group(doc);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InvalidParameter;
    };
    CHECK(code_of({{"mult", {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}}}) == ErrorCode::Validation);
    CHECK(code_of({{"mult", {{0, 1}, {1, 1}}}}) == ErrorCode::Validation);
    CHECK(code_of({{"mult", {{0, 1}}}}) == ErrorCode::Validation);
    CHECK(code_of({{"order", 3}, {"mult", {{0, 1}, {1, 0}}}}) == ErrorCode::Validation);
    CHECK(code_of({{"name", "x"}}) == ErrorCode::Validation);
  }

  TEST_CASE("p-blocks of Γ") {
    CHECK(p_blocks(builtin_group("C2"), 2) == std::vector<std::vector<int>>{{0, 1}});
    CHECK(p_blocks(builtin_group("C2"), 3).size() == 2);
    CHECK(p_blocks(builtin_group("S3"), 3) == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(p_blocks(builtin_group("S3"), 2) == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK_THROWS_AS(p_blocks(builtin_group("S3"), 4), Error);
  }
}
