#include <set>

#include "catpair/grammar.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catpair;

TEST_CASE("grammar operations on small trees") {
  CHECK(grammar_pair(GrammarTree{}).size() == 0);

  const auto cell = grammar_pair(make_cell());
  CHECK(cell.size() == 1);
  CHECK(cell.S().count() == 0);
  CHECK(cell.R().count() == 0);

  const auto op1 = grammar_pair(make_op1(make_cell()));
  CHECK(op1.S() == Relation(2));
  CHECK(op1.R() == Relation(2, {{0, 1}}));

  const auto op2 = grammar_pair(make_op2(make_cell()));
  CHECK(op2.S() == Relation(2, {{0, 1}}));
  CHECK(op2.R() == Relation(2));

  const auto op3 = grammar_pair(make_op3(make_cell(), make_cell()));
  CHECK(op3.S() == Relation(3, {{0, 1}}));
  CHECK(op3.R() == Relation(3, {{0, 2}, {1, 2}}));

  CHECK_THROWS_AS(make_op1(GrammarTree{}), Error);
  CHECK_THROWS_AS(make_op3(make_cell(), GrammarTree{}), Error);
}

TEST_CASE("last_operation") {
  CHECK(last_operation(make_cell()) == GrammarOp::cell);
  CHECK(last_operation(make_op1(make_cell())) == GrammarOp::op1);
  CHECK(last_operation(make_op2(make_cell())) == GrammarOp::op2);
  CHECK(last_operation(make_op3(make_cell(), make_cell())) == GrammarOp::op3);
  CHECK(last_operation(parse_grammar_tree("(e,(e,e))")) == GrammarOp::op1);
  CHECK_THROWS_AS(last_operation(GrammarTree{}), Error);
}

TEST_CASE("grammar_decompose") {
  CHECK(grammar_decompose(grammar_pair(make_cell())) == make_cell());
  const CatalanPair s_pair(Relation(2, {{0, 1}}), Relation(2));
  CHECK(grammar_decompose(s_pair) == make_op2(make_cell()));
  const CatalanPair r_pair(Relation(2), Relation(2, {{0, 1}}));
  CHECK(grammar_decompose(r_pair) == make_op1(make_cell()));
}

TEST_CASE("grammar pairs coincide with compose_pair up to size 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto trees = enumerate_grammar_trees(n);
    REQUIRE(trees.size() == enumerate_pairs(n).size());
    std::set<std::string> keys;
    for (const auto& t : trees) {
      const auto p = grammar_pair(t);
      REQUIRE(check_axioms(p.relations()).valid());
      keys.insert(canonicalize(p).key());
      REQUIRE(grammar_decompose(p) == t);
      if (t.empty()) continue;
      const auto l = grammar_pair(t.left()), r = grammar_pair(t.right());
      switch (last_operation(t)) {
        case GrammarOp::cell: REQUIRE(p == compose_pair({}, {})); break;
        case GrammarOp::op1: REQUIRE(p == compose_pair({}, r)); break;
        case GrammarOp::op2: REQUIRE(p == compose_pair(l, {})); break;
        case GrammarOp::op3: REQUIRE(p == compose_pair(l, r)); break;
      }
    }
    REQUIRE(keys.size() == trees.size());
  }
}

TEST_CASE("polyomino text form and validation") {
  const auto cell = parse_polyomino("NE;EN");
  CHECK(cell.size() == 1);
  CHECK(to_string(cell) == "NE;EN");
  CHECK(parse_polyomino(";").size() == 0);
  CHECK(polyomino_to_tree(cell) == make_cell());
  CHECK(tree_to_polyomino(make_cell()) == cell);

  CHECK(validate(ParallelogramPolyomino{"NE", "NE"}));      // same path
  CHECK(validate(ParallelogramPolyomino{"EN", "NE"}));      // upper below lower
  CHECK(validate(ParallelogramPolyomino{"NNE", "EEN"}));    // different end points
  CHECK_FALSE(validate(ParallelogramPolyomino{"NNE", "ENN"}));
  CHECK(validate(ParallelogramPolyomino{"NEEN", "ENNE"}));  // touch in the middle
  CHECK(validate(ParallelogramPolyomino{"NE", "EEN"}));
  CHECK_FALSE(validate(ParallelogramPolyomino{"NNEE", "ENEN"}));

  CHECK_THROWS_AS(parse_polyomino("NE"), Error);
  CHECK_THROWS_AS(parse_polyomino("NX;EN"), Error);
  try {
    parse_polyomino("NE;NE");
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
  }
}

TEST_CASE("polyominoes by brute force") {
  const std::size_t expected[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    const auto brute = oracle::polyominoes_by_filter(n);
    CHECK(brute.size() == expected[n - 1]);
    std::vector<std::string> brute_text;
    for (const auto& [u, l] : brute) brute_text.push_back(u + ";" + l);
    std::sort(brute_text.begin(), brute_text.end());
    std::vector<std::string> ours;
    for (const auto& p : enumerate_polyominoes(n)) ours.push_back(to_string(p));
    CHECK(ours == brute_text);
  }
}

TEST_CASE("polyomino codec round trips") {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto all = enumerate_polyominoes(n);
    std::set<std::string> trees;
    for (const auto& p : all) {
      REQUIRE_FALSE(validate(p));
      const auto t = polyomino_to_tree(p);
      REQUIRE(t.size() == n);
      REQUIRE(tree_to_polyomino(t) == p);
      trees.insert(to_string(t));
    }
    REQUIRE(trees.size() == all.size());
  }
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& [u, l] : oracle::polyominoes_by_filter(static_cast<int>(n))) {
      const ParallelogramPolyomino p{u, l};
      REQUIRE(tree_to_polyomino(polyomino_to_tree(p)) == p);
    }
}
