#include <random>

#include "catpair/pair_file.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace catpair;

namespace {

ErrorKind kind_of(std::string_view text) {
  try {
    parse_pair_file(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::input;
}

}  // namespace

TEST_CASE("parse a small file") {
  const auto p = parse_pair_file("n 3\nS 1 2\n\nR 2 3\nR 1 3\n");
  CHECK(p.size() == 3);
  CHECK(p.S == Relation(3, {{0, 1}}));
  CHECK(p.R == Relation(3, {{1, 2}, {0, 2}}));
}

TEST_CASE("parse tolerates CRLF, tabs and a missing final newline") {
  const auto p = parse_pair_file("n 2\r\nR\t1  2");
  CHECK(p.R == Relation(2, {{0, 1}}));
  CHECK(parse_pair_file("n 0\n").size() == 0);
}

TEST_CASE("writer output is sorted and round-trips") {
  const auto ex = fixtures::example1();
  const std::string text = to_pair_file(ex);
  CHECK(text.rfind("n 7\nS 2 1\nS 5 4\nS 6 4\nS 6 5\nS 7 4\nR 1 3\n", 0) == 0);
  CHECK(parse_pair_file(text) == ex.relations());

  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = trial % 9;
    const RelationPair p{oracle::random_relation(n, 0.4, rng), oracle::random_relation(n, 0.4, rng)};
    REQUIRE(parse_pair_file(to_pair_file(p)) == p);
  }
}

TEST_CASE("malformed files") {
  CHECK(kind_of("") == ErrorKind::syntax);
  CHECK(kind_of("\n\n") == ErrorKind::syntax);
  CHECK(kind_of("m 3\n") == ErrorKind::syntax);
  CHECK(kind_of("n -1\n") == ErrorKind::syntax);
  CHECK(kind_of("n 3x\n") == ErrorKind::syntax);
  CHECK(kind_of("n 3\nT 1 2\n") == ErrorKind::syntax);
  CHECK(kind_of("n 3\nS 1\n") == ErrorKind::syntax);
  CHECK(kind_of("n 3\nS 1 2 3\n") == ErrorKind::syntax);
  CHECK(kind_of("n 3\nS 0 2\n") == ErrorKind::syntax);
  CHECK(kind_of("n 3\nS 1 4\n") == ErrorKind::syntax);
  CHECK(kind_of("n 3\nS 1 2\nS 1 2\n") == ErrorKind::syntax);
  CHECK(kind_of("n 100000\n") == ErrorKind::capacity);
  // Same pair in both relations is a semantic matter, left to the axioms.
  CHECK_NOTHROW(parse_pair_file("n 2\nS 1 2\nR 1 2\n"));
}

TEST_CASE("syntax errors carry the line number") {
  try {
    parse_pair_file("n 3\nS 1 2\n\nR 9 1\n");
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("axiom report format") {
  CHECK(format_axiom_report(check_axioms(fixtures::example1().relations())) ==
        "axiom i: PASS\naxiom ii: PASS\naxiom iii: PASS\naxiom iv: PASS\nvalid\n");

  const auto bad = parse_pair_file("n 3\nS 1 2\nR 2 3\n");
  CHECK(format_axiom_report(check_axioms(bad)) ==
        "axiom i: PASS\naxiom ii: FAIL 1 3\naxiom iii: PASS\naxiom iv: FAIL 1 2 3\ninvalid\n");

  const auto reflexive = parse_pair_file("n 2\nS 1 1\nR 1 2\n");
  const auto text = format_axiom_report(check_axioms(reflexive));
  CHECK(text.rfind("axiom i: FAIL S 1 1\n", 0) == 0);
  CHECK(text.find("invalid\n") != std::string::npos);
}
