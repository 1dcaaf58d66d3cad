#include <cstring>
#include <string>

#include "catpair/catpair.h"
#include "doctest.h"

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  catpair_string_free(s);
  return out;
}

const char* example_pair =
    "n 3\n"
    "S 2 1\n"
    "R 1 3\n"
    "R 2 3\n";

}  // namespace

TEST_CASE("families") {
  CHECK(catpair_family_count() == 14);
  catpair_family f{};
  REQUIRE(catpair_family_at(4, &f) == CATPAIR_OK);
  CHECK(std::string(catpair_family_name(f)) == "perm-321");
  CHECK(catpair_family_at(14, &f) == CATPAIR_ERR_INPUT);
  CHECK(catpair_family_name(static_cast<catpair_family>(99)) == nullptr);
  REQUIRE(catpair_family_parse("grammar-tree", &f) == CATPAIR_OK);
  CHECK(f == CATPAIR_BINARY_TREE);
  CHECK(catpair_family_parse("nonsense", &f) == CATPAIR_ERR_INPUT);
  CHECK(std::strstr(catpair_last_error(), "nonsense"));
  CHECK(std::string(catpair_status_name(CATPAIR_ERR_AXIOM)) == "axiom failure");
}

TEST_CASE("values") {
  catpair_value* v = nullptr;
  REQUIRE(catpair_value_parse(CATPAIR_DYCK, "UUDDUDUUUDDUDD", &v) == CATPAIR_OK);
  CHECK(catpair_value_family(v) == CATPAIR_DYCK);
  CHECK(catpair_value_size(v) == 7);

  char* text = nullptr;
  REQUIRE(catpair_value_serialize(v, &text) == CATPAIR_OK);
  CHECK(take(text) == "UUDDUDUUUDDUDD");

  catpair_value* tree = nullptr;
  REQUIRE(catpair_value_convert(v, CATPAIR_PLANE_TREE, &tree) == CATPAIR_OK);
  REQUIRE(catpair_value_serialize(tree, &text) == CATPAIR_OK);
  CHECK(take(text) == "(())()((())())");

  catpair_pair* p = nullptr;
  REQUIRE(catpair_value_encode(v, &p) == CATPAIR_OK);
  CHECK(catpair_pair_size(p) == 7);
  REQUIRE(catpair_pair_decompose(p, &text) == CATPAIR_OK);
  CHECK(take(text) == "((e,e),(e,(((e,e),(e,e)),e)))");

  catpair_value* back = nullptr;
  REQUIRE(catpair_pair_decode(p, CATPAIR_MATCHING, &back) == CATPAIR_OK);
  REQUIRE(catpair_value_serialize(back, &text) == CATPAIR_OK);
  CHECK(take(text) == "1-4 2-3 5-6 7-14 8-11 9-10 12-13");

  catpair_value_free(back);
  catpair_pair_free(p);
  catpair_value_free(tree);
  catpair_value_free(v);
}

TEST_CASE("value errors") {
  catpair_value* v = nullptr;
  CHECK(catpair_value_parse(CATPAIR_DYCK, "UDX", &v) == CATPAIR_ERR_SYNTAX);
  CHECK(v == nullptr);
  CHECK(catpair_value_parse(CATPAIR_DYCK, "DU", &v) == CATPAIR_ERR_VALIDATION);
  CHECK(catpair_value_parse(CATPAIR_PERM_312, "3 1 2", &v) == CATPAIR_ERR_VALIDATION);
  CHECK(std::strlen(catpair_last_error()) > 0);
  CHECK(catpair_value_parse(CATPAIR_DYCK, nullptr, &v) == CATPAIR_ERR_INPUT);
  CHECK(catpair_value_parse(static_cast<catpair_family>(42), "UD", &v) == CATPAIR_ERR_INPUT);
  CHECK(catpair_value_serialize(nullptr, nullptr) == CATPAIR_ERR_INPUT);
  catpair_value_free(nullptr);
  catpair_pair_free(nullptr);
  catpair_string_free(nullptr);
}

TEST_CASE("pairs") {
  catpair_pair* p = nullptr;
  REQUIRE(catpair_pair_parse(example_pair, &p) == CATPAIR_OK);
  CHECK(catpair_pair_size(p) == 3);

  char* text = nullptr;
  REQUIRE(catpair_pair_serialize(p, &text) == CATPAIR_OK);
  CHECK(take(text) == example_pair);

  char* report = nullptr;
  CHECK(catpair_pair_verify(p, &report) == CATPAIR_OK);
  CHECK(take(report) == "axiom i: PASS\naxiom ii: PASS\naxiom iii: PASS\naxiom iv: PASS\nvalid\n");

  catpair_pair* canon = nullptr;
  REQUIRE(catpair_pair_canonicalize(p, &canon) == CATPAIR_OK);
  int same = 0;
  REQUIRE(catpair_pair_is_isomorphic(p, canon, &same) == CATPAIR_OK);
  CHECK(same == 1);

  catpair_pair* bad = nullptr;
  REQUIRE(catpair_pair_parse("n 3\nS 1 2\nR 2 3\n", &bad) == CATPAIR_OK);
  CHECK(catpair_pair_verify(bad, &report) == CATPAIR_ERR_AXIOM);
  CHECK(take(report).find("invalid") != std::string::npos);
  CHECK(catpair_pair_is_isomorphic(p, bad, &same) == CATPAIR_ERR_AXIOM);
  catpair_value* v = nullptr;
  CHECK(catpair_pair_decode(bad, CATPAIR_DYCK, &v) == CATPAIR_ERR_AXIOM);
  CHECK(v == nullptr);

  catpair_pair* broken = nullptr;
  CHECK(catpair_pair_parse("n 3\nQ 1 2\n", &broken) == CATPAIR_ERR_SYNTAX);
  CHECK(catpair_pair_parse("", &broken) == CATPAIR_ERR_SYNTAX);
  CHECK(broken == nullptr);

  catpair_pair_free(bad);
  catpair_pair_free(canon);
  catpair_pair_free(p);
}

TEST_CASE("enumeration and counting") {
  char* text = nullptr;
  REQUIRE(catpair_enumerate(CATPAIR_SEQ1, 3, &text) == CATPAIR_OK);
  CHECK(take(text) == "1 2 3\n1 3 3\n2 2 3\n3 2 3\n3 3 3\n");
  REQUIRE(catpair_enumerate(CATPAIR_DYCK, 0, &text) == CATPAIR_OK);
  CHECK(take(text) == "\n");

  const uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (size_t i = 0; i < catpair_family_count(); ++i) {
    catpair_family f{};
    REQUIRE(catpair_family_at(i, &f) == CATPAIR_OK);
    for (size_t n = 0; n <= 6; ++n) {
      uint64_t count = 0;
      REQUIRE(catpair_count(f, n, &count) == CATPAIR_OK);
      CHECK(count == expected[n]);
    }
  }

  REQUIRE(catpair_catalan(30, &text) == CATPAIR_OK);
  CHECK(take(text) == "3814986502092304");
  REQUIRE(catpair_catalan(100, &text) == CATPAIR_OK);
  CHECK(take(text) == "896519947090131496687170070074100632420837521538745909320");
  CHECK(catpair_catalan(5, nullptr) == CATPAIR_ERR_INPUT);
}
