#include "catpair/encoders.hpp"

#include "catpair/error.hpp"

namespace catpair {

namespace {

template <class T>
void require_valid(const T& value) {
  if (auto problem = validate(value)) throw Error(ErrorKind::input, *problem);
}

// A tunnel joins an up step to the down step that first returns to its
// starting height. xSy: tunnel x lies above y. xRy: x lies completely left of
// y. Tunnels are labelled in order of their up steps, or of their down steps
// when by_down is set.
RelationPair tunnel_relations(const DyckPath& d, bool by_down) {
  struct Tunnel {
    std::size_t up, down;
  };
  std::vector<Tunnel> tunnels;
  std::vector<std::size_t> open;
  std::vector<Label> closing;
  for (std::size_t i = 0; i < d.word.size(); ++i) {
    if (d.word[i] == 'U') {
      open.push_back(tunnels.size());
      tunnels.push_back({i, 0});
    } else {
      tunnels[open.back()].down = i;
      closing.push_back(open.back());
      open.pop_back();
    }
  }
  const std::size_t n = tunnels.size();
  std::vector<Label> label(n);
  for (Label k = 0; k < n; ++k) label[by_down ? closing[k] : k] = k;
  RelationPair out{Relation(n), Relation(n)};
  for (Label x = 0; x < n; ++x)
    for (Label y = 0; y < n; ++y) {
      const auto& tx = tunnels[x];
      const auto& ty = tunnels[y];
      if (ty.up < tx.up && tx.down < ty.down) out.S.insert(label[x], label[y]);
      if (tx.down < ty.up) out.R.insert(label[x], label[y]);
    }
  return out;
}

}  // namespace

CatalanPair encode_matching(const NoncrossingMatching& m) {
  require_valid(m);
  const std::size_t n = m.size();
  Relation S(n), R(n);
  for (Label x = 0; x < n; ++x)
    for (Label y = 0; y < n; ++y) {
      const auto& a = m.arches[x];
      const auto& b = m.arches[y];
      if (b.left < a.left && a.right < b.right) S.insert(x, y);
      if (a.right < b.left) R.insert(x, y);
    }
  return CatalanPair(std::move(S), std::move(R));
}

CatalanPair encode_dyck(const DyckPath& d) {
  require_valid(d);
  return CatalanPair(tunnel_relations(d, false));
}

CatalanPair encode_plane_tree(const PlaneTree& t) {
  // Preorder index and subtree extent of each non-root node.
  struct Span {
    std::size_t first, last;  // preorder range of the subtree, inclusive
  };
  std::vector<Span> spans;
  auto walk = [&spans](auto&& self, const PlaneTree& node) -> void {
    for (const auto& child : node.children) {
      const std::size_t index = spans.size();
      spans.push_back({index, index});
      self(self, child);
      spans[index].last = spans.size() - 1;
    }
  };
  walk(walk, t);

  const std::size_t n = spans.size();
  Relation S(n), R(n);
  for (Label x = 0; x < n; ++x)
    for (Label y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool x_below_y = spans[y].first < x && x <= spans[y].last;
      const bool y_below_x = spans[x].first < y && y <= spans[x].last;
      if (x_below_y) S.insert(x, y);
      if (!x_below_y && !y_below_x && x < y) R.insert(x, y);
    }
  return CatalanPair(std::move(S), std::move(R));
}

RelationPair encode_perm_312(const Permutation& p) {
  require_valid(p);
  const std::size_t n = p.size();
  RelationPair out{Relation(n), Relation(n)};
  for (Label i = 0; i < n; ++i)
    for (Label j = i + 1; j < n; ++j) (p.values[i] > p.values[j] ? out.S : out.R).insert(i, j);
  return out;
}

PointSet321::PointSet321(const Permutation& p) {
  require_valid(p);
  points.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) points.push_back({static_cast<int>(i + 1), p.values[i]});
}

bool cover_exists(const PointSet321& pts, const Point& x, const Point& y) {
  for (const auto& c : pts.points) {
    if (x.value < c.value && y.value < c.value && c.position < x.position && c.position < y.position) return true;
  }
  return false;
}

RelationPair cover_relations_321(const Permutation& p) {
  const PointSet321 pts(p);
  const std::size_t n = pts.points.size();
  RelationPair out{Relation(n), Relation(n)};
  for (Label x = 0; x < n; ++x)
    for (Label y = x + 1; y < n; ++y) {
      const auto& a = pts.points[x];
      const auto& b = pts.points[y];
      if (a.value < b.value && !cover_exists(pts, a, b)) out.R.insert(x, y);
    }
  for (Label x = 0; x < n; ++x)
    for (Label y = x + 1; y < n; ++y)
      if (!out.R.contains(x, y) && !out.R.contains(y, x)) out.S.insert(x, y);
  return out;
}

DyckPath perm_321_path(const Permutation& p) {
  require_valid(p);
  std::string word;
  word.reserve(2 * p.size());
  int max = 0;
  for (int v : p.values) {
    if (v > max) {
      word.append(v - max, 'U');
      max = v;
    }
    word.push_back('D');
  }
  return DyckPath{std::move(word)};
}

CatalanPair encode_perm_321(const Permutation& p) {
  require_valid(p);
  if (!avoids(p, Pattern::p321)) throw Error(ErrorKind::domain, "permutation " + to_string(p) + " contains 321");
  return CatalanPair(tunnel_relations(perm_321_path(p), true));
}

CatalanPair encode_seq1(const Seq1& s) {
  require_valid(s);
  const std::size_t n = s.size();
  Relation S(n), R(n);
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j) {
      if (i < j && s.values[i] < s.values[j]) R.insert(i, j);
      if (j < i && s.values[i] <= s.values[j]) S.insert(i, j);
    }
  return CatalanPair(std::move(S), std::move(R));
}

CatalanPair encode_seq2(const Seq2& s) {
  const auto a = seq2_prime(s);  // validates
  const std::size_t n = s.size();
  const std::size_t f = static_cast<std::size_t>(s.fixed_point);  // 1-based
  Relation S(n), R(n);
  // Does some w strictly between i and j carry a'_w == value?
  auto between = [&](std::size_t i, std::size_t j, int value) {
    for (std::size_t w = i + 1; w < j; ++w)
      if (a[w] == value) return true;
    return false;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool i_left = i + 1 <= f, j_left = j + 1 <= f;
      if (i_left && j_left) {
        if (a[i] > a[j]) {
          // S when a'_j is the first occurrence of its value after i.
          if (between(i, j, a[j]))
            R.insert(i, j);
          else
            S.insert(i, j);
        } else {
          R.insert(i, j);
        }
      } else if (i_left) {
        R.insert(i, j);
      } else {
        if (a[i] < a[j]) {
          // jSi when a'_i is the last occurrence of its value before j.
          if (between(i, j, a[i]))
            R.insert(i, j);
          else
            S.insert(j, i);
        } else {
          R.insert(i, j);
        }
      }
    }
  return CatalanPair(std::move(S), std::move(R));
}

CatalanPair encode_staircase(const StaircaseTiling& t) {
  if (t.empty()) return {};
  return compose_pair(encode_staircase(t.right()), encode_staircase(t.left()));
}

Pattern base_pattern(Pattern pattern) {
  switch (pattern) {
    case Pattern::p321:
    case Pattern::p123: return Pattern::p321;
    default: return Pattern::p312;
  }
}

Permutation to_base_class(const Permutation& p, Pattern pattern) {
  switch (pattern) {
    case Pattern::p312:
    case Pattern::p321: return p;
    case Pattern::p231: return inverse(p);
    case Pattern::p213:
    case Pattern::p123: return reverse(p);
    case Pattern::p132: return inverse(reverse(p));
  }
  throw Error(ErrorKind::input, "unknown pattern");
}

Permutation from_base_class(const Permutation& base, Pattern pattern) {
  switch (pattern) {
    case Pattern::p312:
    case Pattern::p321: return base;
    case Pattern::p231: return inverse(base);
    case Pattern::p213:
    case Pattern::p123: return reverse(base);
    case Pattern::p132: return reverse(inverse(base));
  }
  throw Error(ErrorKind::input, "unknown pattern");
}

CatalanPair pair_for_avoidance_class(const Permutation& p, Pattern pattern) {
  require_valid(p);
  if (!avoids(p, pattern)) {
    throw Error(ErrorKind::domain, "permutation " + to_string(p) + " contains " + std::string(pattern_name(pattern)));
  }
  const Permutation base = to_base_class(p, pattern);
  if (base_pattern(pattern) == Pattern::p321) return encode_perm_321(base);
  return CatalanPair(encode_perm_312(base));
}

}  // namespace catpair
