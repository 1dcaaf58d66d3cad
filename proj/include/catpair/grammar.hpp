#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catpair/relation.hpp"

namespace catpair {

// Three-operation grammar for binary trees and parallelogram polyominoes.
// A node is the unit element x; op1 has only a right child (A), op2 only a
// left child (B), op3 both (C left, D right). A childless node is the single
// cell.
struct GrammarTag {};
using GrammarTree = BinaryTree<GrammarTag>;

enum class GrammarOp { cell, op1, op2, op3 };

// Precondition: !t.empty().
GrammarOp last_operation(const GrammarTree& t);

GrammarTree make_cell();
GrammarTree make_op1(GrammarTree a);
GrammarTree make_op2(GrammarTree b);
GrammarTree make_op3(GrammarTree c, GrammarTree d);

// op1: S = S_A,               R = R_A + {(x,a)}                labels [x | A]
// op2: S = S_B + {(b,x)},     R = R_B                          labels [B | x]
// op3: S = S_C + S_D + {(c,x)}, R = R_C + R_D + C x D + {(x,d)}   labels [C | x | D]
CatalanPair grammar_pair(const GrammarTree& t);

// Inverse of grammar_pair up to isomorphism.
GrammarTree grammar_decompose(const CatalanPair& pair);

GrammarTree parse_grammar_tree(std::string_view text);
std::vector<GrammarTree> enumerate_grammar_trees(std::size_t n);

// Region between an upper and a lower lattice path over {E, N} of equal
// length n+1 that share only their endpoints. Size n = semi-perimeter - 1.
// The empty value (both words empty) is the size-0 object.
struct ParallelogramPolyomino {
  std::string upper;
  std::string lower;

  std::size_t size() const noexcept { return upper.empty() ? 0 : upper.size() - 1; }
  friend bool operator==(const ParallelogramPolyomino&, const ParallelogramPolyomino&) = default;
};

std::optional<std::string> validate(const ParallelogramPolyomino& p);
// "upper;lower", e.g. "NE;EN" for the single cell.
ParallelogramPolyomino parse_polyomino(std::string_view text);
std::string to_string(const ParallelogramPolyomino& p);

// Codec between polyominoes of semi-perimeter n+1 and grammar trees of size n.
// The gap between the paths along each anti-diagonal is a bicoloured Motzkin
// path, which is spelled as a Dyck path and split by first return.
GrammarTree polyomino_to_tree(const ParallelogramPolyomino& p);
ParallelogramPolyomino tree_to_polyomino(const GrammarTree& t);

// Sorted by serialization.
std::vector<ParallelogramPolyomino> enumerate_polyominoes(std::size_t n);

}  // namespace catpair
