#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catpair/binary_tree.hpp"

namespace catpair {

// Word over {U, D}; size is the semilength.
struct DyckPath {
  std::string word;

  std::size_t size() const noexcept { return word.size() / 2; }
  friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

struct Arch {
  int left;
  int right;
  friend bool operator==(const Arch&, const Arch&) = default;
};

// Perfect noncrossing matching on {1..2n}, arches sorted by left endpoint.
struct NoncrossingMatching {
  std::vector<Arch> arches;

  std::size_t size() const noexcept { return arches.size(); }
  friend bool operator==(const NoncrossingMatching&, const NoncrossingMatching&) = default;
};

// Rooted ordered tree; size is the number of edges.
struct PlaneTree {
  std::vector<PlaneTree> children;

  std::size_t size() const noexcept;
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

// One-line notation, values 1..n.
struct Permutation {
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

// i <= a_i <= n, and i <= j <= a_i implies a_j <= a_i.
struct Seq1 {
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const Seq1&, const Seq1&) = default;
};

// 1 <= a_1 <= ... <= a_n <= n with exactly one fixed point (1-based index,
// 0 for the empty sequence).
struct Seq2 {
  std::vector<int> values;
  int fixed_point = 0;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const Seq2&, const Seq2&) = default;
};

// A staircase tiling recorded by its unique junction-rectangle
// decomposition: left subtree L (right of the junction rectangle), right
// subtree U (below it).
struct StaircaseTag {};
using StaircaseTiling = BinaryTree<StaircaseTag>;

enum class Pattern { p123, p132, p213, p231, p312, p321 };

Permutation pattern_permutation(Pattern p);
std::string_view pattern_name(Pattern p);  // "123", "132", ...

// Validation: nullopt when valid, otherwise a description of the first
// violated invariant.
std::optional<std::string> validate(const DyckPath& d);
std::optional<std::string> validate(const NoncrossingMatching& m);
std::optional<std::string> validate(const PlaneTree& t);
std::optional<std::string> validate(const Permutation& p);
std::optional<std::string> validate(const Seq1& s);
std::optional<std::string> validate(const Seq2& s);
std::optional<std::string> validate(const StaircaseTiling& t);

// Parsers throw ErrorKind::syntax (with position) on grammar errors and
// ErrorKind::validation when the value breaks an invariant.
DyckPath parse_dyck(std::string_view text);
NoncrossingMatching parse_matching(std::string_view text);
PlaneTree parse_plane_tree(std::string_view text);
Permutation parse_permutation(std::string_view text);
Seq1 parse_seq1(std::string_view text);
Seq2 parse_seq2(std::string_view text);
StaircaseTiling parse_staircase(std::string_view text);

std::string to_string(const DyckPath& d);
std::string to_string(const NoncrossingMatching& m);
std::string to_string(const PlaneTree& t);
std::string to_string(const Permutation& p);
std::string to_string(const Seq1& s);
std::string to_string(const Seq2& s);
// StaircaseTiling uses the generic BinaryTree to_string.

// Enumerators return every value of size n sorted by serialization.
std::vector<DyckPath> enumerate_dyck(std::size_t n);
std::vector<NoncrossingMatching> enumerate_matchings(std::size_t n);
std::vector<PlaneTree> enumerate_plane_trees(std::size_t n);
std::vector<Permutation> enumerate_permutations(std::size_t n, Pattern avoiding);
std::vector<Seq1> enumerate_seq1(std::size_t n);
std::vector<Seq2> enumerate_seq2(std::size_t n);
std::vector<StaircaseTiling> enumerate_staircases(std::size_t n);

// True iff no index triple of perm is order-isomorphic to the size-3 pattern.
bool avoids(const Permutation& perm, const Permutation& pattern);
bool avoids(const Permutation& perm, Pattern pattern);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

// a'_y = a_y - y for y <= f, a'_z = z - a_z for z > f.
std::vector<int> seq2_prime(const Seq2& s);

// Reads the left end of each arch as U and the right end as D.
DyckPath to_dyck(const NoncrossingMatching& m);
// Matches each U with its D; the inverse of to_dyck.
NoncrossingMatching arch_translation(const DyckPath& d);

}  // namespace catpair
