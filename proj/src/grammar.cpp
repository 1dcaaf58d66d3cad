#include "catpair/grammar.hpp"

#include <algorithm>

#include "catpair/error.hpp"

namespace catpair {

GrammarOp last_operation(const GrammarTree& t) {
  if (t.empty()) throw Error(ErrorKind::input, "the empty grammar tree has no operation");
  const bool has_left = !t.left().empty(), has_right = !t.right().empty();
  if (has_left && has_right) return GrammarOp::op3;
  if (has_left) return GrammarOp::op2;
  if (has_right) return GrammarOp::op1;
  return GrammarOp::cell;
}

GrammarTree make_cell() { return GrammarTree::node({}, {}); }

GrammarTree make_op1(GrammarTree a) {
  if (a.empty()) throw Error(ErrorKind::input, "operation 1 needs a nonempty operand");
  return GrammarTree::node({}, std::move(a));
}

GrammarTree make_op2(GrammarTree b) {
  if (b.empty()) throw Error(ErrorKind::input, "operation 2 needs a nonempty operand");
  return GrammarTree::node(std::move(b), {});
}

GrammarTree make_op3(GrammarTree c, GrammarTree d) {
  if (c.empty() || d.empty()) throw Error(ErrorKind::input, "operation 3 needs two nonempty operands");
  return GrammarTree::node(std::move(c), std::move(d));
}

namespace {

void copy_shifted(const CatalanPair& from, Label offset, Relation& S, Relation& R) {
  for (const auto& [i, j] : from.S().pairs()) S.insert(offset + i, offset + j);
  for (const auto& [i, j] : from.R().pairs()) R.insert(offset + i, offset + j);
}

}  // namespace

CatalanPair grammar_pair(const GrammarTree& t) {
  if (t.empty()) return {};
  const std::size_t n = t.size();
  Relation S(n), R(n);
  switch (last_operation(t)) {
    case GrammarOp::cell:
      break;
    case GrammarOp::op1: {
      const auto a = grammar_pair(t.right());
      const Label x = 0;
      copy_shifted(a, 1, S, R);
      for (Label l = 1; l < n; ++l) R.insert(x, l);
      break;
    }
    case GrammarOp::op2: {
      const auto b = grammar_pair(t.left());
      const Label x = n - 1;
      copy_shifted(b, 0, S, R);
      for (Label l = 0; l < x; ++l) S.insert(l, x);
      break;
    }
    case GrammarOp::op3: {
      const auto c = grammar_pair(t.left());
      const auto d = grammar_pair(t.right());
      const Label x = c.size();
      copy_shifted(c, 0, S, R);
      copy_shifted(d, x + 1, S, R);
      for (Label l = 0; l < x; ++l) {
        S.insert(l, x);
        for (Label m = x + 1; m < n; ++m) R.insert(l, m);
      }
      for (Label m = x + 1; m < n; ++m) R.insert(x, m);
      break;
    }
  }
  return CatalanPair(std::move(S), std::move(R));
}

GrammarTree grammar_decompose(const CatalanPair& pair) {
  if (pair.size() == 0) return {};
  const auto d = decompose_pair(pair);
  return GrammarTree::node(grammar_decompose(d.a_block), grammar_decompose(d.b_block));
}

GrammarTree parse_grammar_tree(std::string_view text) { return parse_binary_tree<GrammarTag>(text); }

std::vector<GrammarTree> enumerate_grammar_trees(std::size_t n) { return enumerate_binary_trees<GrammarTag>(n); }

// ---- polyominoes -----------------------------------------------------------

std::optional<std::string> validate(const ParallelogramPolyomino& p) {
  if (p.upper.empty() && p.lower.empty()) return std::nullopt;
  if (p.upper.size() != p.lower.size()) return "upper and lower paths have different lengths";
  if (p.upper.size() < 2) return "paths must have length at least 2";
  int gap = 0;
  const std::size_t len = p.upper.size();
  for (std::size_t k = 0; k < len; ++k) {
    for (char c : {p.upper[k], p.lower[k]})
      if (c != 'E' && c != 'N') return "step '" + std::string(1, c) + "' is not E or N at index " + std::to_string(k);
    gap += (p.upper[k] == 'N') - (p.lower[k] == 'N');
    if (k + 1 < len && gap < 1) return "paths touch or cross after step " + std::to_string(k + 1);
  }
  if (gap != 0) return "paths do not share their end point";
  return std::nullopt;
}

ParallelogramPolyomino parse_polyomino(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw syntax_error(text.size(), "expected ';' between upper and lower path");
  ParallelogramPolyomino p{std::string(text.substr(0, semi)), std::string(text.substr(semi + 1))};
  for (std::size_t i = 0; i < text.size(); ++i)
    if (i != semi && text[i] != 'E' && text[i] != 'N') throw syntax_error(i, "expected E or N");
  if (auto problem = validate(p)) throw Error(ErrorKind::validation, *problem);
  return p;
}

std::string to_string(const ParallelogramPolyomino& p) { return p.upper + ";" + p.lower; }

namespace {

void tree_to_dyck(const GrammarTree& t, std::string& out) {
  if (t.empty()) return;
  out.push_back('U');
  tree_to_dyck(t.left(), out);
  out.push_back('D');
  tree_to_dyck(t.right(), out);
}

// Reads U A D B starting at pos.
GrammarTree dyck_to_tree(std::string_view word, std::size_t& pos) {
  if (pos >= word.size() || word[pos] != 'U') return {};
  ++pos;
  auto a = dyck_to_tree(word, pos);
  if (pos >= word.size() || word[pos] != 'D') throw Error(ErrorKind::invariant, "unbalanced Dyck word in polyomino codec");
  ++pos;
  auto b = dyck_to_tree(word, pos);
  return GrammarTree::node(std::move(a), std::move(b));
}

}  // namespace

GrammarTree polyomino_to_tree(const ParallelogramPolyomino& p) {
  if (auto problem = validate(p)) throw Error(ErrorKind::input, *problem);
  if (p.size() == 0) return {};
  // First step opens the gap (upper N, lower E), last closes it; the middle
  // steps form the bicoloured Motzkin path.
  std::string word = "U";
  for (std::size_t k = 1; k + 1 < p.upper.size(); ++k) {
    const char u = p.upper[k], l = p.lower[k];
    if (u == 'N' && l == 'E') word += "UU";
    else if (u == 'E' && l == 'N') word += "DD";
    else if (u == 'N') word += "UD";
    else word += "DU";
  }
  word += "D";
  std::size_t pos = 0;
  auto t = dyck_to_tree(word, pos);
  if (pos != word.size()) throw Error(ErrorKind::invariant, "polyomino codec produced a non-primitive word");
  return t;
}

ParallelogramPolyomino tree_to_polyomino(const GrammarTree& t) {
  if (t.empty()) return {};
  std::string word;
  tree_to_dyck(t, word);
  ParallelogramPolyomino p{"N", "E"};
  for (std::size_t k = 1; k + 1 < word.size(); k += 2) {
    const char first = word[k], second = word[k + 1];
    if (first == 'U' && second == 'U') p.upper += 'N', p.lower += 'E';
    else if (first == 'D' && second == 'D') p.upper += 'E', p.lower += 'N';
    else if (first == 'U') p.upper += 'N', p.lower += 'N';
    else p.upper += 'E', p.lower += 'E';
  }
  p.upper += 'E';
  p.lower += 'N';
  return p;
}

std::vector<ParallelogramPolyomino> enumerate_polyominoes(std::size_t n) {
  std::vector<std::pair<std::string, ParallelogramPolyomino>> keyed;
  for (const auto& t : enumerate_grammar_trees(n)) {
    auto p = tree_to_polyomino(t);
    keyed.emplace_back(to_string(p), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ParallelogramPolyomino> out;
  out.reserve(keyed.size());
  for (auto& [key, p] : keyed) out.push_back(std::move(p));
  return out;
}

}  // namespace catpair
