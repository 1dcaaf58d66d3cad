#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catpair/grammar.hpp"
#include "catpair/relation.hpp"
#include "catpair/structures.hpp"

namespace catpair {

enum class Family {
  dyck,
  matching,
  plane_tree,
  perm_312,
  perm_321,
  perm_231,
  perm_213,
  perm_132,
  perm_123,
  seq1,
  seq2,
  staircase,
  binary_tree,
  polyomino,
};

std::span<const Family> all_families();
// "dyck", "matching", "plane-tree", "perm-312", ..., "binary-tree", "polyomino".
std::string_view family_name(Family f);
// Also accepts "grammar-tree" for binary-tree.
std::optional<Family> family_from_name(std::string_view name);
// Pattern of a perm-* family.
std::optional<Pattern> family_pattern(Family f);

using StructureValue = std::variant<DyckPath, NoncrossingMatching, PlaneTree, Permutation, Seq1, Seq2,
                                    StaircaseTiling, GrammarTree, ParallelogramPolyomino>;

std::size_t value_size(const StructureValue& v);

// Checks that v holds the family's alternative and satisfies its invariants
// (including pattern avoidance for perm-* families).
std::optional<std::string> validate_value(Family f, const StructureValue& v);
StructureValue parse_value(Family f, std::string_view text);
std::string serialize_value(const StructureValue& v);
std::vector<StructureValue> enumerate_family(Family f, std::size_t n);

CatalanPair encode(Family f, const StructureValue& v);

// Recursive decompose_pair; tree_to_pair(pair_to_tree(p)) is isomorphic to p.
DecompTree pair_to_tree(const CatalanPair& pair);
// Fold of compose_pair.
CatalanPair tree_to_pair(const DecompTree& t);

// Analytic decoders: encode(assemble(t)) is isomorphic to tree_to_pair(t).
DyckPath assemble_dyck(const DecompTree& t);
NoncrossingMatching assemble_matching(const DecompTree& t);
PlaneTree assemble_plane_tree(const DecompTree& t);
Permutation assemble_perm_312(const DecompTree& t);
Seq1 assemble_seq1(const DecompTree& t);
StaircaseTiling assemble_staircase(const DecompTree& t);
GrammarTree assemble_grammar_tree(const DecompTree& t);
ParallelogramPolyomino assemble_polyomino(const DecompTree& t);

// Families decoded through assemble_* (directly or via a permutation
// symmetry). perm-321, perm-123 and seq2 go through the reference tables.
bool has_analytic_assembly(Family f);

// Table-based inverse: the unique family value whose encoding is isomorphic
// to the pair. Tables are built once per (family, size) and shared.
class ReferenceDecoder {
 public:
  static constexpr std::size_t default_max_size = 12;

  explicit ReferenceDecoder(std::size_t max_size = default_max_size);
  ~ReferenceDecoder();
  ReferenceDecoder(const ReferenceDecoder&) = delete;
  ReferenceDecoder& operator=(const ReferenceDecoder&) = delete;

  std::size_t max_size() const noexcept { return max_size_; }

  // Throws ErrorKind::capacity above max_size and ErrorKind::invariant when
  // no value matches.
  StructureValue decode(const CatalanPair& pair, Family f) const;

 private:
  struct Tables;
  std::size_t max_size_;
  std::unique_ptr<Tables> tables_;
};

// Process-wide decoder with the default cap.
const ReferenceDecoder& default_reference_decoder();
StructureValue reference_decode(const CatalanPair& pair, Family f);

// Analytic assembly when available, otherwise the reference tables.
StructureValue decode(const CatalanPair& pair, Family f);

// decode(canonicalize(encode(v, from)), to).
StructureValue convert(const StructureValue& v, Family from, Family to);

}  // namespace catpair
