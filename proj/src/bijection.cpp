#include "catpair/bijection.hpp"

#include <array>
#include <map>
#include <mutex>
#include <unordered_map>

#include "catpair/encoders.hpp"
#include "catpair/error.hpp"

namespace catpair {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyInfo, 14> family_table{{
    {Family::dyck, "dyck"},
    {Family::matching, "matching"},
    {Family::plane_tree, "plane-tree"},
    {Family::perm_312, "perm-312"},
    {Family::perm_321, "perm-321"},
    {Family::perm_231, "perm-231"},
    {Family::perm_213, "perm-213"},
    {Family::perm_132, "perm-132"},
    {Family::perm_123, "perm-123"},
    {Family::seq1, "seq1"},
    {Family::seq2, "seq2"},
    {Family::staircase, "staircase"},
    {Family::binary_tree, "binary-tree"},
    {Family::polyomino, "polyomino"},
}};

constexpr std::array<Family, 14> family_list = [] {
  std::array<Family, 14> out{};
  for (std::size_t i = 0; i < family_table.size(); ++i) out[i] = family_table[i].family;
  return out;
}();

template <class T>
const T& expect(const StructureValue& v, Family f) {
  if (const auto* p = std::get_if<T>(&v)) return *p;
  throw Error(ErrorKind::input, "value does not belong to family " + std::string(family_name(f)));
}

template <class T>
std::vector<StructureValue> widen(std::vector<T> values) {
  std::vector<StructureValue> out;
  out.reserve(values.size());
  for (auto& v : values) out.emplace_back(std::move(v));
  return out;
}

}  // namespace

std::span<const Family> all_families() { return family_list; }

std::string_view family_name(Family f) {
  for (const auto& info : family_table)
    if (info.family == f) return info.name;
  throw Error(ErrorKind::input, "unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "grammar-tree") return Family::binary_tree;
  for (const auto& info : family_table)
    if (info.name == name) return info.family;
  return std::nullopt;
}

std::optional<Pattern> family_pattern(Family f) {
  switch (f) {
    case Family::perm_312: return Pattern::p312;
    case Family::perm_321: return Pattern::p321;
    case Family::perm_231: return Pattern::p231;
    case Family::perm_213: return Pattern::p213;
    case Family::perm_132: return Pattern::p132;
    case Family::perm_123: return Pattern::p123;
    default: return std::nullopt;
  }
}

std::size_t value_size(const StructureValue& v) {
  return std::visit([](const auto& x) { return x.size(); }, v);
}

std::optional<std::string> validate_value(Family f, const StructureValue& v) {
  auto check = [&]<class T>(std::type_identity<T>) -> std::optional<std::string> {
    const auto* p = std::get_if<T>(&v);
    if (!p) return "value does not belong to family " + std::string(family_name(f));
    return validate(*p);
  };
  switch (f) {
    case Family::dyck: return check(std::type_identity<DyckPath>{});
    case Family::matching: return check(std::type_identity<NoncrossingMatching>{});
    case Family::plane_tree: return check(std::type_identity<PlaneTree>{});
    case Family::seq1: return check(std::type_identity<Seq1>{});
    case Family::seq2: return check(std::type_identity<Seq2>{});
    case Family::staircase: return check(std::type_identity<StaircaseTiling>{});
    case Family::binary_tree: return std::holds_alternative<GrammarTree>(v)
                                  ? std::nullopt
                                  : std::optional<std::string>("value does not belong to family binary-tree");
    case Family::polyomino: return check(std::type_identity<ParallelogramPolyomino>{});
    default: break;
  }
  if (auto problem = check(std::type_identity<Permutation>{})) return problem;
  const auto pattern = *family_pattern(f);
  if (!avoids(std::get<Permutation>(v), pattern)) return "permutation contains " + std::string(pattern_name(pattern));
  return std::nullopt;
}

StructureValue parse_value(Family f, std::string_view text) {
  StructureValue v;
  switch (f) {
    case Family::dyck: v = parse_dyck(text); break;
    case Family::matching: v = parse_matching(text); break;
    case Family::plane_tree: v = parse_plane_tree(text); break;
    case Family::seq1: v = parse_seq1(text); break;
    case Family::seq2: v = parse_seq2(text); break;
    case Family::staircase: v = parse_staircase(text); break;
    case Family::binary_tree: v = parse_grammar_tree(text); break;
    case Family::polyomino: v = parse_polyomino(text); break;
    default: v = parse_permutation(text); break;
  }
  if (auto problem = validate_value(f, v)) throw Error(ErrorKind::validation, *problem);
  return v;
}

std::string serialize_value(const StructureValue& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

std::vector<StructureValue> enumerate_family(Family f, std::size_t n) {
  switch (f) {
    case Family::dyck: return widen(enumerate_dyck(n));
    case Family::matching: return widen(enumerate_matchings(n));
    case Family::plane_tree: return widen(enumerate_plane_trees(n));
    case Family::seq1: return widen(enumerate_seq1(n));
    case Family::seq2: return widen(enumerate_seq2(n));
    case Family::staircase: return widen(enumerate_staircases(n));
    case Family::binary_tree: return widen(enumerate_grammar_trees(n));
    case Family::polyomino: return widen(enumerate_polyominoes(n));
    default: return widen(enumerate_permutations(n, *family_pattern(f)));
  }
}

CatalanPair encode(Family f, const StructureValue& v) {
  switch (f) {
    case Family::dyck: return encode_dyck(expect<DyckPath>(v, f));
    case Family::matching: return encode_matching(expect<NoncrossingMatching>(v, f));
    case Family::plane_tree: return encode_plane_tree(expect<PlaneTree>(v, f));
    case Family::seq1: return encode_seq1(expect<Seq1>(v, f));
    case Family::seq2: return encode_seq2(expect<Seq2>(v, f));
    case Family::staircase: return encode_staircase(expect<StaircaseTiling>(v, f));
    case Family::binary_tree: return grammar_pair(expect<GrammarTree>(v, f));
    case Family::polyomino: return grammar_pair(polyomino_to_tree(expect<ParallelogramPolyomino>(v, f)));
    default: return pair_for_avoidance_class(expect<Permutation>(v, f), *family_pattern(f));
  }
}

// ---- decomposition tree ----------------------------------------------------

DecompTree pair_to_tree(const CatalanPair& pair) {
  if (pair.size() == 0) return {};
  const auto d = decompose_pair(pair);
  return DecompTree::node(pair_to_tree(d.a_block), pair_to_tree(d.b_block));
}

CatalanPair tree_to_pair(const DecompTree& t) {
  if (t.empty()) return {};
  return compose_pair(tree_to_pair(t.left()), tree_to_pair(t.right()));
}

// ---- analytic assemblies ---------------------------------------------------

DyckPath assemble_dyck(const DecompTree& t) {
  if (t.empty()) return {};
  return DyckPath{"U" + assemble_dyck(t.left()).word + "D" + assemble_dyck(t.right()).word};
}

NoncrossingMatching assemble_matching(const DecompTree& t) {
  if (t.empty()) return {};
  const auto a = assemble_matching(t.left());
  const auto b = assemble_matching(t.right());
  const int close = static_cast<int>(2 * a.size() + 2);
  NoncrossingMatching m;
  m.arches.push_back({1, close});
  for (const auto& arch : a.arches) m.arches.push_back({arch.left + 1, arch.right + 1});
  for (const auto& arch : b.arches) m.arches.push_back({arch.left + close, arch.right + close});
  return m;
}

PlaneTree assemble_plane_tree(const DecompTree& t) {
  if (t.empty()) return {};
  PlaneTree root;
  root.children.push_back(assemble_plane_tree(t.left()));
  auto rest = assemble_plane_tree(t.right());
  for (auto& c : rest.children) root.children.push_back(std::move(c));
  return root;
}

namespace {

// Positions [A, x, B]; x takes the smallest value, then A's values, then B's.
void assemble_312(const DecompTree& t, int base, std::vector<int>& out) {
  if (t.empty()) return;
  const int a_size = static_cast<int>(t.left().size());
  assemble_312(t.left(), base + 1, out);
  out.push_back(base + 1);
  assemble_312(t.right(), base + 1 + a_size, out);
}

}  // namespace

Permutation assemble_perm_312(const DecompTree& t) {
  Permutation p;
  p.values.reserve(t.size());
  assemble_312(t, 0, p.values);
  return p;
}

Seq1 assemble_seq1(const DecompTree& t) {
  if (t.empty()) return {};
  const auto a = assemble_seq1(t.left());
  const auto b = assemble_seq1(t.right());
  const int k = static_cast<int>(a.size());
  Seq1 s;
  s.values.reserve(t.size());
  s.values.push_back(k + 1);
  for (int v : a.values) s.values.push_back(v + 1);
  for (int v : b.values) s.values.push_back(v + k + 1);
  return s;
}

StaircaseTiling assemble_staircase(const DecompTree& t) {
  if (t.empty()) return {};
  return StaircaseTiling::node(assemble_staircase(t.right()), assemble_staircase(t.left()));
}

GrammarTree assemble_grammar_tree(const DecompTree& t) { return retag<GrammarTag>(t); }

ParallelogramPolyomino assemble_polyomino(const DecompTree& t) { return tree_to_polyomino(assemble_grammar_tree(t)); }

bool has_analytic_assembly(Family f) {
  switch (f) {
    case Family::perm_321:
    case Family::perm_123:
    case Family::seq2: return false;
    default: return true;
  }
}

// ---- reference decoding ----------------------------------------------------

struct ReferenceDecoder::Tables {
  std::mutex mutex;
  std::map<std::pair<Family, std::size_t>, std::unordered_map<std::string, StructureValue>> by_family;
};

ReferenceDecoder::ReferenceDecoder(std::size_t max_size) : max_size_(max_size), tables_(std::make_unique<Tables>()) {}

ReferenceDecoder::~ReferenceDecoder() = default;

StructureValue ReferenceDecoder::decode(const CatalanPair& pair, Family f) const {
  const std::size_t n = pair.size();
  if (n > max_size_) {
    throw Error(ErrorKind::capacity, "reference decoding of " + std::string(family_name(f)) + " is limited to size " +
                                         std::to_string(max_size_) + ", got " + std::to_string(n));
  }
  const auto key = canonicalize(pair).key();

  std::lock_guard lock(tables_->mutex);
  auto [it, inserted] = tables_->by_family.try_emplace({f, n});
  auto& table = it->second;
  if (inserted) {
    for (auto& v : enumerate_family(f, n)) {
      auto k = canonicalize(encode(f, v)).key();
      if (!table.emplace(std::move(k), std::move(v)).second) {
        tables_->by_family.erase(it);
        throw Error(ErrorKind::invariant, "encoder for " + std::string(family_name(f)) + " is not injective at size " +
                                              std::to_string(n));
      }
    }
  }
  const auto found = table.find(key);
  if (found == table.end()) {
    throw Error(ErrorKind::invariant, "no " + std::string(family_name(f)) + " value encodes to the given pair");
  }
  return found->second;
}

const ReferenceDecoder& default_reference_decoder() {
  static const ReferenceDecoder decoder;
  return decoder;
}

StructureValue reference_decode(const CatalanPair& pair, Family f) { return default_reference_decoder().decode(pair, f); }

StructureValue decode(const CatalanPair& pair, Family f) {
  if (!has_analytic_assembly(f)) {
    if (f == Family::perm_123) return reverse(std::get<Permutation>(reference_decode(pair, Family::perm_321)));
    return reference_decode(pair, f);
  }
  const auto tree = pair_to_tree(pair);
  switch (f) {
    case Family::dyck: return assemble_dyck(tree);
    case Family::matching: return assemble_matching(tree);
    case Family::plane_tree: return assemble_plane_tree(tree);
    case Family::seq1: return assemble_seq1(tree);
    case Family::staircase: return assemble_staircase(tree);
    case Family::binary_tree: return assemble_grammar_tree(tree);
    case Family::polyomino: return assemble_polyomino(tree);
    default: return from_base_class(assemble_perm_312(tree), *family_pattern(f));
  }
}

StructureValue convert(const StructureValue& v, Family from, Family to) {
  if (auto problem = validate_value(from, v)) throw Error(ErrorKind::validation, *problem);
  return decode(canonicalize(encode(from, v)).pair(), to);
}

}  // namespace catpair
