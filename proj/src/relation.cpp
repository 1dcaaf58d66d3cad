#include "catpair/relation.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

#include "catpair/pair_file.hpp"

namespace catpair {

Relation::Relation(std::size_t n, std::initializer_list<LabelPair> pairs)
    : Relation(n, std::span<const LabelPair>(pairs.begin(), pairs.size())) {}

Relation::Relation(std::size_t n, std::span<const LabelPair> pairs) : Relation(n) {
  for (const auto& [i, j] : pairs) insert(i, j);
}

void Relation::check_label(Label i) const {
  if (i >= n_) {
    throw Error(ErrorKind::input,
                "label " + std::to_string(i) + " outside ground set of size " + std::to_string(n_));
  }
}

void Relation::insert(Label i, Label j) {
  check_label(i);
  check_label(j);
  bits_[i * n_ + j] = 1;
}

std::size_t Relation::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<LabelPair> Relation::pairs() const {
  std::vector<LabelPair> out;
  for (Label i = 0; i < n_; ++i)
    for (Label j = 0; j < n_; ++j)
      if (contains(i, j)) out.emplace_back(i, j);
  return out;
}

Relation Relation::inverse() const {
  Relation out(n_);
  for (Label i = 0; i < n_; ++i)
    for (Label j = 0; j < n_; ++j)
      if (contains(i, j)) out.bits_[j * n_ + i] = 1;
  return out;
}

Relation Relation::symmetrization() const {
  Relation out = inverse();
  for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] |= bits_[k];
  return out;
}

Relation Relation::relabel(std::span<const Label> new_label) const {
  if (new_label.size() != n_) throw Error(ErrorKind::input, "relabeling has wrong length");
  std::vector<bool> seen(n_, false);
  for (Label l : new_label) {
    check_label(l);
    if (seen[l]) throw Error(ErrorKind::input, "relabeling is not a bijection");
    seen[l] = true;
  }
  Relation out(n_);
  for (Label i = 0; i < n_; ++i)
    for (Label j = 0; j < n_; ++j)
      if (contains(i, j)) out.bits_[new_label[i] * n_ + new_label[j]] = 1;
  return out;
}

Relation Relation::restrict(std::span<const Label> labels) const {
  for (Label l : labels) check_label(l);
  const std::size_t k = labels.size();
  Relation out(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (contains(labels[a], labels[b])) out.bits_[a * k + b] = 1;
  return out;
}

namespace {

// First (x,y,z) with xRy, yRz and not xRz.
bool first_intransitive(const Relation& rel, std::vector<Label>& witness) {
  const std::size_t n = rel.size();
  for (Label x = 0; x < n; ++x)
    for (Label y = 0; y < n; ++y) {
      if (!rel.contains(x, y)) continue;
      for (Label z = 0; z < n; ++z) {
        if (rel.contains(y, z) && !rel.contains(x, z)) {
          witness = {x, y, z};
          return true;
        }
      }
    }
  return false;
}

bool first_reflexive(const Relation& rel, std::vector<Label>& witness) {
  for (Label x = 0; x < rel.size(); ++x) {
    if (rel.contains(x, x)) {
      witness = {x, x};
      return true;
    }
  }
  return false;
}

void check_strict_order(const Relation& rel, char name, AxiomReport& report) {
  std::vector<Label> witness;
  if (first_reflexive(rel, witness) || first_intransitive(rel, witness))
    report.violations.push_back({Axiom::strict_orders, name, std::move(witness)});
}

}  // namespace

bool is_strict_order(const Relation& rel) {
  std::vector<Label> witness;
  return !first_reflexive(rel, witness) && !first_intransitive(rel, witness);
}

AxiomReport check_axioms(const Relation& S, const Relation& R) {
  if (S.size() != R.size()) {
    throw Error(ErrorKind::input, "S and R have different ground-set sizes (" +
                                      std::to_string(S.size()) + " vs " + std::to_string(R.size()) + ")");
  }
  const std::size_t n = S.size();
  AxiomReport report;
  check_strict_order(S, 'S', report);
  check_strict_order(R, 'R', report);

  auto s_bar = [&](Label x, Label y) { return S.contains(x, y) || S.contains(y, x); };
  auto r_bar = [&](Label x, Label y) { return R.contains(x, y) || R.contains(y, x); };

  bool have_total = false, have_excl = false;
  for (Label x = 0; x < n && !(have_total && have_excl); ++x) {
    for (Label y = x + 1; y < n; ++y) {
      const bool s = s_bar(x, y), r = r_bar(x, y);
      if (!have_total && !s && !r) {
        report.violations.push_back({Axiom::totality, 0, {x, y}});
        have_total = true;
      }
      if (!have_excl && s && r) {
        report.violations.push_back({Axiom::exclusivity, 0, {x, y}});
        have_excl = true;
      }
    }
  }
  // (ii) must precede (iii) in the report regardless of discovery order.
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const AxiomViolation& a, const AxiomViolation& b) { return a.axiom < b.axiom; });

  for (Label x = 0; x < n; ++x)
    for (Label y = 0; y < n; ++y) {
      if (!S.contains(x, y)) continue;
      for (Label z = 0; z < n; ++z) {
        if (R.contains(y, z) && !R.contains(x, z)) {
          report.violations.push_back({Axiom::composition, 0, {x, y, z}});
          return report;
        }
      }
    }
  return report;
}

CatalanPair::CatalanPair(Relation S, Relation R) : S_(std::move(S)), R_(std::move(R)) {
  const auto report = check_axioms(S_, R_);
  if (!report.valid()) {
    std::string what = "relations do not form a Catalan pair:";
    for (const auto& v : report.violations) what += " (" + std::to_string(static_cast<int>(v.axiom)) + ")";
    throw Error(ErrorKind::input, what);
  }
}

CatalanPair::CatalanPair(Relation S, Relation R, trusted_t) : S_(std::move(S)), R_(std::move(R)) {}

CatalanPair CatalanPair::relabel(std::span<const Label> new_label) const {
  return CatalanPair(S_.relabel(new_label), R_.relabel(new_label), trusted);
}

CatalanPair CatalanPair::restrict(std::span<const Label> labels) const {
  return CatalanPair(S_.restrict(labels), R_.restrict(labels), trusted);
}

CatalanPair compose_pair(const CatalanPair& a_block, const CatalanPair& b_block) {
  const std::size_t na = a_block.size(), nb = b_block.size();
  const std::size_t n = na + nb + 1;
  const Label x = na;
  const Label b0 = na + 1;
  Relation S(n), R(n);
  for (const auto& [i, j] : a_block.S().pairs()) S.insert(i, j);
  for (const auto& [i, j] : a_block.R().pairs()) R.insert(i, j);
  for (const auto& [i, j] : b_block.S().pairs()) S.insert(b0 + i, b0 + j);
  for (const auto& [i, j] : b_block.R().pairs()) R.insert(b0 + i, b0 + j);
  for (Label a = 0; a < na; ++a) {
    S.insert(a, x);
    for (Label b = b0; b < n; ++b) R.insert(a, b);
  }
  for (Label b = b0; b < n; ++b) R.insert(x, b);
  return CatalanPair(std::move(S), std::move(R), CatalanPair::trusted);
}

Decomposition decompose_pair(const CatalanPair& pair) {
  const std::size_t n = pair.size();
  if (n == 0) throw Error(ErrorKind::empty_input, "cannot decompose the empty pair");
  const auto& S = pair.S();
  const auto& R = pair.R();

  std::vector<Label> candidates;
  for (Label c = 0; c < n; ++c) {
    bool ok = true;
    for (Label o = 0; o < n && ok; ++o) ok = !S.contains(c, o) && !R.contains(o, c);
    if (ok) candidates.push_back(c);
  }
  if (candidates.size() != 1) {
    throw Error(ErrorKind::invariant, "expected exactly one S-maximal, R-minimal element, found " +
                                          std::to_string(candidates.size()));
  }
  Decomposition d;
  d.x = candidates.front();
  for (Label o = 0; o < n; ++o) {
    if (o == d.x) continue;
    const bool in_a = S.contains(o, d.x);
    const bool in_b = R.contains(d.x, o);
    if (in_a == in_b) {
      throw Error(ErrorKind::invariant,
                  "label " + std::to_string(o) + " is not in exactly one decomposition block");
    }
    (in_a ? d.a_labels : d.b_labels).push_back(o);
  }
  d.a_block = pair.restrict(d.a_labels);
  d.b_block = pair.restrict(d.b_labels);
  return d;
}

std::vector<Label> total_order(const CatalanPair& pair) {
  const std::size_t n = pair.size();
  const auto& S = pair.S();
  const auto& R = pair.R();
  auto L = [&](Label i, Label j) { return R.contains(i, j) || S.contains(j, i); };

  std::vector<Label> rank(n, 0);
  for (Label i = 0; i < n; ++i) {
    for (Label j = 0; j < n; ++j) {
      if (i == j) continue;
      if (L(i, j) == L(j, i)) {
        throw Error(ErrorKind::invariant, "derived order is not total and antisymmetric on {" +
                                              std::to_string(i) + "," + std::to_string(j) + "}");
      }
      if (L(j, i)) ++rank[i];
    }
  }
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j) {
      if (!L(i, j)) continue;
      for (Label k = 0; k < n; ++k)
        if (L(j, k) && !L(i, k)) throw Error(ErrorKind::invariant, "derived order is not transitive");
    }

  std::vector<Label> order(n);
  for (Label i = 0; i < n; ++i) order[rank[i]] = i;
  return order;
}

std::string CanonicalPair::key() const {
  const std::size_t n = pair_.size();
  std::string k;
  k.reserve(n * n + 1);
  k.push_back(static_cast<char>(n));
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j)
      k.push_back(static_cast<char>((pair_.S().contains(i, j) ? 1 : 0) | (pair_.R().contains(i, j) ? 2 : 0)));
  return k;
}

CanonicalPair canonicalize(const CatalanPair& pair) {
  const auto order = total_order(pair);
  std::vector<Label> new_label(order.size());
  for (Label pos = 0; pos < order.size(); ++pos) new_label[order[pos]] = pos;
  return CanonicalPair(pair.relabel(new_label));
}

bool is_isomorphic(const CatalanPair& p, const CatalanPair& q) {
  return p.size() == q.size() && canonicalize(p) == canonicalize(q);
}

const std::vector<CanonicalPair>& enumerate_pairs(std::size_t n) {
  static std::mutex mutex;
  static std::deque<std::vector<CanonicalPair>> memo;

  std::lock_guard lock(mutex);
  while (memo.size() <= n) {
    const std::size_t m = memo.size();
    std::vector<std::pair<std::string, CanonicalPair>> keyed;
    if (m == 0) {
      keyed.emplace_back(to_pair_file(CatalanPair{}), canonicalize(CatalanPair{}));
    } else {
      for (std::size_t k = 0; k < m; ++k)
        for (const auto& a : memo[k])
          for (const auto& b : memo[m - 1 - k]) {
            auto c = canonicalize(compose_pair(a.pair(), b.pair()));
            keyed.emplace_back(to_pair_file(c.pair()), std::move(c));
          }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<CanonicalPair> level;
    level.reserve(keyed.size());
    for (auto& [text, c] : keyed) level.push_back(std::move(c));
    memo.push_back(std::move(level));
  }
  return memo[n];
}

BigInt catalan(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  c[0] = 1;
  for (std::size_t m = 0; m < n; ++m) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= m; ++i) sum += c[i] * c[m - i];
    c[m + 1] = sum;
  }
  return c[n];
}

}  // namespace catpair
