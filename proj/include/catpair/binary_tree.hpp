#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "catpair/error.hpp"

namespace catpair {

// Immutable binary tree shape with structural sharing. The Tag parameter
// keeps the decomposition tree, staircase tilings and grammar trees apart as
// distinct types even though they share one shape.
//
// Text form: "e" for the empty tree, "(" left "," right ")" for a node.
template <class Tag>
class BinaryTree {
 public:
  BinaryTree() = default;

  static BinaryTree node(BinaryTree left, BinaryTree right);

  bool empty() const noexcept { return node_ == nullptr; }
  std::size_t size() const noexcept;

  // Precondition: !empty().
  const BinaryTree& left() const;
  const BinaryTree& right() const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.empty() || b.empty()) return false;
    return a.size() == b.size() && a.left() == b.left() && a.right() == b.right();
  }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

template <class Tag>
struct BinaryTree<Tag>::Node {
  BinaryTree left;
  BinaryTree right;
  std::size_t size;
};

template <class Tag>
BinaryTree<Tag> BinaryTree<Tag>::node(BinaryTree left, BinaryTree right) {
  BinaryTree t;
  const std::size_t size = 1 + left.size() + right.size();
  t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), size});
  return t;
}

template <class Tag>
std::size_t BinaryTree<Tag>::size() const noexcept {
  return node_ ? node_->size : 0;
}

template <class Tag>
const BinaryTree<Tag>& BinaryTree<Tag>::left() const {
  if (!node_) throw Error(ErrorKind::input, "left() of an empty tree");
  return node_->left;
}

template <class Tag>
const BinaryTree<Tag>& BinaryTree<Tag>::right() const {
  if (!node_) throw Error(ErrorKind::input, "right() of an empty tree");
  return node_->right;
}

// Rebuilds a shape under another tag.
template <class ToTag, class FromTag>
BinaryTree<ToTag> retag(const BinaryTree<FromTag>& t) {
  if (t.empty()) return {};
  return BinaryTree<ToTag>::node(retag<ToTag>(t.left()), retag<ToTag>(t.right()));
}

namespace detail {

template <class Tag>
void write_tree(const BinaryTree<Tag>& t, std::string& out) {
  if (t.empty()) {
    out.push_back('e');
    return;
  }
  out.push_back('(');
  write_tree(t.left(), out);
  out.push_back(',');
  write_tree(t.right(), out);
  out.push_back(')');
}

template <class Tag>
BinaryTree<Tag> read_tree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw syntax_error(pos, "unexpected end of tree text");
  if (text[pos] == 'e') {
    ++pos;
    return {};
  }
  if (text[pos] != '(') throw syntax_error(pos, "expected 'e' or '('");
  ++pos;
  auto left = read_tree<Tag>(text, pos);
  if (pos >= text.size() || text[pos] != ',') throw syntax_error(pos, "expected ','");
  ++pos;
  auto right = read_tree<Tag>(text, pos);
  if (pos >= text.size() || text[pos] != ')') throw syntax_error(pos, "expected ')'");
  ++pos;
  return BinaryTree<Tag>::node(std::move(left), std::move(right));
}

}  // namespace detail

template <class Tag>
std::string to_string(const BinaryTree<Tag>& t) {
  std::string out;
  out.reserve(4 * t.size() + 1);
  detail::write_tree(t, out);
  return out;
}

template <class Tag>
BinaryTree<Tag> parse_binary_tree(std::string_view text) {
  std::size_t pos = 0;
  auto t = detail::read_tree<Tag>(text, pos);
  if (pos != text.size()) throw syntax_error(pos, "trailing characters after tree");
  return t;
}

// All shapes with n nodes, sorted by their text form.
template <class Tag>
std::vector<BinaryTree<Tag>> enumerate_binary_trees(std::size_t n) {
  std::vector<std::vector<BinaryTree<Tag>>> by_size(n + 1);
  by_size[0].push_back({});
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 0; k < m; ++k) {
      for (const auto& l : by_size[k]) {
        for (const auto& r : by_size[m - 1 - k]) by_size[m].push_back(BinaryTree<Tag>::node(l, r));
      }
    }
  }
  auto result = std::move(by_size[n]);
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(result.size());
  for (std::size_t i = 0; i < result.size(); ++i) keys.emplace_back(to_string(result[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<BinaryTree<Tag>> sorted;
  sorted.reserve(result.size());
  for (const auto& [key, i] : keys) sorted.push_back(result[i]);
  return sorted;
}

}  // namespace catpair
