#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "catpair/binary_tree.hpp"

namespace catpair {

using Label = std::size_t;
using LabelPair = std::pair<Label, Label>;

// Finite binary relation over labels 0..n-1, stored as a dense n x n
// incidence matrix. Diagonal entries are representable so that axiom checks
// can report them; a CatalanPair never contains one.
class Relation {
 public:
  explicit Relation(std::size_t n = 0) : n_(n), bits_(n * n, 0) {}
  Relation(std::size_t n, std::initializer_list<LabelPair> pairs);
  Relation(std::size_t n, std::span<const LabelPair> pairs);

  std::size_t size() const noexcept { return n_; }

  bool contains(Label i, Label j) const { return bits_[i * n_ + j] != 0; }
  void insert(Label i, Label j);

  // Number of related pairs.
  std::size_t count() const;
  // Related pairs in lexicographic order.
  std::vector<LabelPair> pairs() const;

  Relation inverse() const;
  // theta united with its inverse.
  Relation symmetrization() const;
  // Maps label i to new_label[i].
  Relation relabel(std::span<const Label> new_label) const;
  // Induced sub-relation on `labels`, renumbered 0..k-1 in the given order.
  Relation restrict(std::span<const Label> labels) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  void check_label(Label i) const;

  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

bool is_strict_order(const Relation& rel);

// Two relations on a shared ground set with no validity promise.
struct RelationPair {
  Relation S;
  Relation R;

  std::size_t size() const noexcept { return S.size(); }
  friend bool operator==(const RelationPair&, const RelationPair&) = default;
};

enum class Axiom {
  strict_orders = 1,  // (i)
  totality = 2,       // (ii)  every distinct pair is related
  exclusivity = 3,    // (iii) no distinct pair is related twice
  composition = 4,    // (iv)  S o R is contained in R
};

struct AxiomViolation {
  Axiom axiom;
  // 'S' or 'R' for axiom (i); 0 otherwise.
  char relation = 0;
  // (i) reflexive pair {x,x} or transitivity triple (x,y,z); (ii)/(iii) a pair
  // {x,y} with x<y; (iv) triple (x,y,z) with xSy, yRz, not xRz.
  std::vector<Label> witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

// Every violated axiom with its lexicographically first witness.
AxiomReport check_axioms(const Relation& S, const Relation& R);
inline AxiomReport check_axioms(const RelationPair& p) { return check_axioms(p.S, p.R); }

// A pair (S,R) satisfying the four Catalan-pair axioms. Construction from
// arbitrary relations validates and throws ErrorKind::input on failure.
class CatalanPair {
 public:
  struct trusted_t {};
  static constexpr trusted_t trusted{};

  CatalanPair() = default;
  CatalanPair(Relation S, Relation R);
  explicit CatalanPair(RelationPair p) : CatalanPair(std::move(p.S), std::move(p.R)) {}
  // Caller guarantees the axioms; used by constructions that preserve them.
  CatalanPair(Relation S, Relation R, trusted_t);

  std::size_t size() const noexcept { return S_.size(); }
  const Relation& S() const noexcept { return S_; }
  const Relation& R() const noexcept { return R_; }
  RelationPair relations() const { return {S_, R_}; }

  CatalanPair relabel(std::span<const Label> new_label) const;
  CatalanPair restrict(std::span<const Label> labels) const;

  friend bool operator==(const CatalanPair&, const CatalanPair&) = default;

 private:
  Relation S_;
  Relation R_;
};

// Generic decomposition tree: a node is the unit element x, its left subtree
// the A-part and its right subtree the B-part.
struct DecompTag {};
using DecompTree = BinaryTree<DecompTag>;

// Labels are laid out [A-block | x | B-block]:
//   S = S_A + S_B + {(a,x)},  R = R_A + R_B + A x B + {(x,b)}.
CatalanPair compose_pair(const CatalanPair& a_block, const CatalanPair& b_block);

struct Decomposition {
  Label x;
  CatalanPair a_block;
  CatalanPair b_block;
  // Original labels of each block, increasing; block label k is a_labels[k].
  std::vector<Label> a_labels;
  std::vector<Label> b_labels;
};

// Inverse of compose_pair. x is the unique label with no S-successor and no
// R-predecessor; A = {a : aSx}, B = {b : xRb}.
Decomposition decompose_pair(const CatalanPair& pair);

// Labels sorted by L, where i L j iff iRj or jSi. Throws ErrorKind::invariant
// if L is not a strict total order.
std::vector<Label> total_order(const CatalanPair& pair);

// Isomorphism class representative: labels renumbered along total_order, so
// that L is the natural order 0 < 1 < ... < n-1.
class CanonicalPair {
 public:
  CanonicalPair() = default;

  const CatalanPair& pair() const noexcept { return pair_; }
  std::size_t size() const noexcept { return pair_.size(); }

  // Compact byte key, equal iff the pairs are equal.
  std::string key() const;

  friend bool operator==(const CanonicalPair&, const CanonicalPair&) = default;

 private:
  explicit CanonicalPair(CatalanPair p) : pair_(std::move(p)) {}
  friend CanonicalPair canonicalize(const CatalanPair& pair);

  CatalanPair pair_;
};

CanonicalPair canonicalize(const CatalanPair& pair);
bool is_isomorphic(const CatalanPair& p, const CatalanPair& q);

// All canonical pairs of size n, sorted by their pair-file text. Memoized.
const std::vector<CanonicalPair>& enumerate_pairs(std::size_t n);

using BigInt = boost::multiprecision::cpp_int;

// C_0 = 1, C_{n+1} = sum_{i=0..n} C_i C_{n-i}.
BigInt catalan(std::size_t n);

}  // namespace catpair
