#include <set>
#include <thread>

#include "catpair/bijection.hpp"
#include "catpair/encoders.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace catpair;
namespace fx = catpair::fixtures;

namespace {

StructureValue value(Family f, std::string_view text) { return parse_value(f, text); }

std::string text_of(Family from, std::string_view text, Family to) {
  return serialize_value(convert(value(from, text), from, to));
}

}  // namespace

TEST_CASE("family names") {
  CHECK(all_families().size() == 14);
  for (auto f : all_families()) CHECK(family_from_name(family_name(f)) == f);
  CHECK(family_from_name("grammar-tree") == Family::binary_tree);
  CHECK(family_from_name("perm-321") == Family::perm_321);
  CHECK_FALSE(family_from_name("perm-4321"));
  CHECK(family_pattern(Family::perm_213) == Pattern::p213);
  CHECK_FALSE(family_pattern(Family::dyck));
}

TEST_CASE("parse_value validates per family") {
  CHECK(serialize_value(value(Family::perm_312, "2 1 3 5 6 4")) == "2 1 3 5 6 4");
  CHECK(value_size(value(Family::polyomino, "NNEE;ENEN")) == 3);
  CHECK(value_size(value(Family::binary_tree, "(e,(e,e))")) == 2);
  try {
    parse_value(Family::perm_312, "3 1 2");
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
  }
  CHECK_THROWS_AS(parse_value(Family::perm_321, "3 2 1"), Error);
  CHECK(validate_value(Family::dyck, StructureValue{Seq1{}}));
  CHECK(validate_value(Family::binary_tree, StructureValue{StaircaseTiling{}}));
  CHECK_FALSE(validate_value(Family::staircase, StructureValue{StaircaseTiling{}}));
}

TEST_CASE("decomposition tree of the seven-arch example") {
  const auto t = pair_to_tree(fx::example1());
  CHECK(to_string(t) == "((e,e),(e,(((e,e),(e,e)),e)))");
  CHECK(t.left().size() == 1);
  CHECK(t.right().size() == 5);
  CHECK(to_string(assemble_plane_tree(t)) == "(())()((())())");
  CHECK(is_isomorphic(tree_to_pair(t), fx::example1()));
  CHECK(to_string(pair_to_tree(CatalanPair{})) == "e");
  CHECK(to_string(pair_to_tree(compose_pair({}, {}))) == "(e,e)");
}

TEST_CASE("pair_to_tree and tree_to_pair are inverse up to size 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto trees = enumerate_binary_trees<DecompTag>(n);
    for (const auto& t : trees) REQUIRE(pair_to_tree(tree_to_pair(t)) == t);
    for (const auto& c : enumerate_pairs(n)) REQUIRE(canonicalize(tree_to_pair(pair_to_tree(c.pair()))) == c);
  }
}

TEST_CASE("analytic round trips up to size 8") {
  for (auto f : all_families()) {
    if (!has_analytic_assembly(f)) continue;
    CAPTURE(family_name(f));
    for (std::size_t n = 0; n <= 8; ++n)
      for (const auto& v : enumerate_family(f, n)) REQUIRE(decode(encode(f, v), f) == v);
  }
  CHECK(to_string(assemble_seq1(pair_to_tree(encode_seq1(parse_seq1("5 2 4 4 5 6")))) ) == "5 2 4 4 5 6");
}

TEST_CASE("312 assembly keeps position labels") {
  // tree_to_pair lays labels out as [A | x | B], the same order as positions.
  for (std::size_t n = 0; n <= 7; ++n)
    for (const auto& t : enumerate_binary_trees<DecompTag>(n))
      REQUIRE(encode_perm_312(assemble_perm_312(t)) == tree_to_pair(t).relations());
}

TEST_CASE("reference decoding") {
  CHECK(serialize_value(reference_decode(CatalanPair(fx::perm321_S(), fx::perm321_R()), Family::perm_321)) ==
        "2 3 1 4 5");
  CHECK(serialize_value(reference_decode(CatalanPair(fx::seq2_S(), fx::seq2_R()), Family::seq2)) ==
        "2 4 4 5 5 5 6 6");

  const auto as_312 = reference_decode(fx::example1(), Family::perm_312);
  CHECK(is_isomorphic(encode(Family::perm_312, as_312), fx::example1()));
  CHECK(decode(fx::example1(), Family::perm_312) == as_312);

  for (auto f : {Family::perm_321, Family::perm_123, Family::seq2})
    for (std::size_t n = 0; n <= 8; ++n)
      for (const auto& v : enumerate_family(f, n)) REQUIRE(decode(encode(f, v), f) == v);

  SUBCASE("agrees with the analytic decoders") {
    for (auto f : all_families()) {
      if (!has_analytic_assembly(f)) continue;
      for (std::size_t n = 0; n <= 7; ++n)
        for (const auto& c : enumerate_pairs(n)) REQUIRE(reference_decode(c.pair(), f) == decode(c.pair(), f));
    }
  }
}

TEST_CASE("reference decoder limits") {
  const ReferenceDecoder small(3);
  CHECK(small.max_size() == 3);
  CHECK_NOTHROW(small.decode(compose_pair({}, {}), Family::seq2));
  const auto four = enumerate_pairs(4).front().pair();
  try {
    small.decode(four, Family::seq2);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::capacity);
  }
}

TEST_CASE("reference tables are safe to share between threads") {
  const ReferenceDecoder decoder;
  const auto& pairs = enumerate_pairs(7);
  std::vector<std::vector<std::string>> results(4);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < results.size(); ++w)
    workers.emplace_back([&, w] {
      for (const auto& c : pairs) results[w].push_back(serialize_value(decoder.decode(c.pair(), Family::perm_321)));
    });
  for (auto& t : workers) t.join();
  for (std::size_t w = 1; w < results.size(); ++w) CHECK(results[w] == results[0]);
  CHECK(std::set<std::string>(results[0].begin(), results[0].end()).size() == 429);
}

TEST_CASE("convert examples") {
  CHECK(text_of(Family::matching, "1-4 2-3 5-6 7-14 8-11 9-10 12-13", Family::plane_tree) == "(())()((())())");
  CHECK(text_of(Family::plane_tree, "(())()((())())", Family::dyck) == "UUDDUDUUUDDUDD");
  CHECK(text_of(Family::dyck, "UUDUDD", Family::matching) == to_string(arch_translation(parse_dyck("UUDUDD"))));
  CHECK(text_of(Family::perm_321, "2 3 1 4 5", Family::perm_321) == "2 3 1 4 5");
  CHECK(text_of(Family::seq2, "2 4 4 5 5 5 6 6", Family::seq2) == "2 4 4 5 5 5 6 6");
  CHECK(text_of(Family::polyomino, "NE;EN", Family::binary_tree) == "(e,e)");
  CHECK_THROWS_AS(convert(StructureValue{Permutation{{3, 1, 2}}}, Family::perm_312, Family::dyck), Error);
}

TEST_CASE("convert is a bijection between every pair of families up to size 5") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (auto f : all_families()) {
      const auto from = enumerate_family(f, n);
      for (auto g : all_families()) {
        std::set<std::string> images;
        for (const auto& v : from) {
          const auto w = convert(v, f, g);
          REQUIRE_FALSE(validate_value(g, w));
          REQUIRE(convert(w, g, f) == v);
          images.insert(serialize_value(w));
        }
        REQUIRE(images.size() == from.size());
      }
    }
}

TEST_CASE("all families encode the same set of pairs") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::string> reference;
    for (const auto& c : enumerate_pairs(n)) reference.insert(c.key());
    for (auto f : all_families()) {
      std::set<std::string> keys;
      for (const auto& v : enumerate_family(f, n)) keys.insert(canonicalize(encode(f, v)).key());
      REQUIRE(keys == reference);
    }
  }
}
