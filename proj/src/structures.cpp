#include "catpair/structures.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "catpair/error.hpp"

namespace catpair {

namespace {

template <class T>
void sort_by_text(std::vector<T>& values) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) keys.emplace_back(to_string(values[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<T> sorted;
  sorted.reserve(values.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(values[i]));
  values = std::move(sorted);
}

template <class T>
T checked(T value) {
  if (auto problem = validate(value)) throw Error(ErrorKind::validation, *problem);
  return value;
}

// Space-separated integers. The empty string is the empty sequence.
std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) throw syntax_error(i, "expected an integer");
    const std::size_t next = static_cast<std::size_t>(ptr - text.data());
    if (next < text.size() && text[next] != ' ') throw syntax_error(next, "expected a space");
    out.push_back(value);
    i = next;
  }
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(values[i]);
  }
  return out;
}

std::string at(std::size_t index) { return " at index " + std::to_string(index); }

void write_plane_tree(const PlaneTree& t, std::string& out) {
  for (const auto& child : t.children) {
    out.push_back('(');
    write_plane_tree(child, out);
    out.push_back(')');
  }
}

}  // namespace

std::size_t PlaneTree::size() const noexcept {
  std::size_t edges = children.size();
  for (const auto& c : children) edges += c.size();
  return edges;
}

Permutation pattern_permutation(Pattern p) {
  switch (p) {
    case Pattern::p123: return {{1, 2, 3}};
    case Pattern::p132: return {{1, 3, 2}};
    case Pattern::p213: return {{2, 1, 3}};
    case Pattern::p231: return {{2, 3, 1}};
    case Pattern::p312: return {{3, 1, 2}};
    case Pattern::p321: return {{3, 2, 1}};
  }
  throw Error(ErrorKind::input, "unknown pattern");
}

std::string_view pattern_name(Pattern p) {
  static constexpr std::array<std::string_view, 6> names{"123", "132", "213", "231", "312", "321"};
  return names[static_cast<std::size_t>(p)];
}

// ---- validation ------------------------------------------------------------

std::optional<std::string> validate(const DyckPath& d) {
  int height = 0;
  for (std::size_t i = 0; i < d.word.size(); ++i) {
    const char c = d.word[i];
    if (c != 'U' && c != 'D') return "step '" + std::string(1, c) + "' is not U or D" + at(i);
    height += c == 'U' ? 1 : -1;
    if (height < 0) return "prefix goes below the axis" + at(i);
  }
  if (height != 0) return "path ends at height " + std::to_string(height);
  return std::nullopt;
}

std::optional<std::string> validate(const NoncrossingMatching& m) {
  const int points = static_cast<int>(2 * m.arches.size());
  std::vector<int> owner(points + 1, -1);
  for (std::size_t k = 0; k < m.arches.size(); ++k) {
    const auto [l, r] = m.arches[k];
    if (l < 1 || r > points || l >= r) return "arch " + std::to_string(l) + "-" + std::to_string(r) + " is malformed";
    if (owner[l] >= 0 || owner[r] >= 0) return "endpoint used twice by arch " + std::to_string(l) + "-" + std::to_string(r);
    owner[l] = owner[r] = static_cast<int>(k);
    if (k > 0 && m.arches[k - 1].left >= l) return "arches not sorted by left endpoint";
  }
  for (const auto& a : m.arches)
    for (const auto& b : m.arches)
      if (a.left < b.left && b.left < a.right && a.right < b.right)
        return "arches " + std::to_string(a.left) + "-" + std::to_string(a.right) + " and " +
               std::to_string(b.left) + "-" + std::to_string(b.right) + " cross";
  return std::nullopt;
}

std::optional<std::string> validate(const PlaneTree&) { return std::nullopt; }

std::optional<std::string> validate(const Permutation& p) {
  const int n = static_cast<int>(p.values.size());
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    const int v = p.values[i];
    if (v < 1 || v > n) return "value " + std::to_string(v) + " outside 1.." + std::to_string(n) + at(i);
    if (seen[v]) return "value " + std::to_string(v) + " repeated";
    seen[v] = true;
  }
  return std::nullopt;
}

std::optional<std::string> validate(const Seq1& s) {
  const int n = static_cast<int>(s.values.size());
  for (int i = 1; i <= n; ++i) {
    const int ai = s.values[i - 1];
    if (ai < i || ai > n) return "a_" + std::to_string(i) + " = " + std::to_string(ai) + " outside " + std::to_string(i) + ".." + std::to_string(n);
  }
  for (int i = 1; i <= n; ++i) {
    const int ai = s.values[i - 1];
    for (int j = i; j <= ai; ++j)
      if (s.values[j - 1] > ai) return "a_" + std::to_string(j) + " exceeds a_" + std::to_string(i);
  }
  return std::nullopt;
}

std::optional<std::string> validate(const Seq2& s) {
  const int n = static_cast<int>(s.values.size());
  int fixed = 0, count = 0;
  for (int i = 1; i <= n; ++i) {
    const int ai = s.values[i - 1];
    if (ai < 1 || ai > n) return "a_" + std::to_string(i) + " outside 1.." + std::to_string(n);
    if (i > 1 && ai < s.values[i - 2]) return "sequence decreases at index " + std::to_string(i);
    if (ai == i) {
      fixed = i;
      ++count;
    }
  }
  if (n > 0 && count != 1) return "sequence has " + std::to_string(count) + " fixed points, expected 1";
  if (s.fixed_point != fixed) return "stored fixed point " + std::to_string(s.fixed_point) + " differs from " + std::to_string(fixed);
  return std::nullopt;
}

std::optional<std::string> validate(const StaircaseTiling&) { return std::nullopt; }

// ---- parse / serialize -----------------------------------------------------

DyckPath parse_dyck(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] != 'U' && text[i] != 'D') throw syntax_error(i, "expected U or D");
  return checked(DyckPath{std::string(text)});
}

NoncrossingMatching parse_matching(std::string_view text) {
  NoncrossingMatching m;
  std::size_t i = 0;
  auto read_int = [&](int& value) {
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) throw syntax_error(i, "expected an integer");
    i = static_cast<std::size_t>(ptr - text.data());
  };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    Arch a{};
    read_int(a.left);
    if (i >= text.size() || text[i] != '-') throw syntax_error(i, "expected '-'");
    ++i;
    read_int(a.right);
    if (i < text.size() && text[i] != ' ') throw syntax_error(i, "expected a space");
    m.arches.push_back(a);
  }
  std::sort(m.arches.begin(), m.arches.end(), [](const Arch& a, const Arch& b) { return a.left < b.left; });
  return checked(std::move(m));
}

PlaneTree parse_plane_tree(std::string_view text) {
  std::vector<PlaneTree> stack(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      stack.emplace_back();
    } else if (text[i] == ')') {
      if (stack.size() < 2) throw syntax_error(i, "unbalanced ')'");
      auto done = std::move(stack.back());
      stack.pop_back();
      stack.back().children.push_back(std::move(done));
    } else {
      throw syntax_error(i, "expected '(' or ')'");
    }
  }
  if (stack.size() != 1) throw syntax_error(text.size(), "unclosed '('");
  return std::move(stack.front());
}

Permutation parse_permutation(std::string_view text) { return checked(Permutation{parse_ints(text)}); }

Seq1 parse_seq1(std::string_view text) { return checked(Seq1{parse_ints(text)}); }

Seq2 parse_seq2(std::string_view text) {
  Seq2 s{parse_ints(text), 0};
  for (std::size_t i = 0; i < s.values.size(); ++i)
    if (s.values[i] == static_cast<int>(i + 1)) {
      s.fixed_point = static_cast<int>(i + 1);
      break;
    }
  return checked(std::move(s));
}

StaircaseTiling parse_staircase(std::string_view text) { return parse_binary_tree<StaircaseTag>(text); }

std::string to_string(const DyckPath& d) { return d.word; }

std::string to_string(const NoncrossingMatching& m) {
  std::string out;
  for (std::size_t k = 0; k < m.arches.size(); ++k) {
    if (k) out.push_back(' ');
    out += std::to_string(m.arches[k].left) + "-" + std::to_string(m.arches[k].right);
  }
  return out;
}

std::string to_string(const PlaneTree& t) {
  std::string out;
  write_plane_tree(t, out);
  return out;
}

std::string to_string(const Permutation& p) { return join_ints(p.values); }
std::string to_string(const Seq1& s) { return join_ints(s.values); }
std::string to_string(const Seq2& s) { return join_ints(s.values); }

// ---- permutations ----------------------------------------------------------

namespace {

// Does some triple ending at the last position of prefix realize pattern?
bool last_completes_pattern(const std::vector<int>& prefix, const Permutation& pattern) {
  const std::size_t k = prefix.size();
  if (k < 3) return false;
  const int c = prefix[k - 1];
  const auto& q = pattern.values;
  auto same_order = [](int x, int y, int px, int py) { return (x < y) == (px < py); };
  for (std::size_t i = 0; i + 2 < k; ++i)
    for (std::size_t j = i + 1; j + 1 < k; ++j) {
      const int a = prefix[i], b = prefix[j];
      if (same_order(a, b, q[0], q[1]) && same_order(a, c, q[0], q[2]) && same_order(b, c, q[1], q[2])) return true;
    }
  return false;
}

}  // namespace

bool avoids(const Permutation& perm, const Permutation& pattern) {
  if (pattern.size() != 3 || validate(pattern)) throw Error(ErrorKind::input, "pattern must be a permutation of size 3");
  std::vector<int> prefix;
  prefix.reserve(perm.size());
  for (int v : perm.values) {
    prefix.push_back(v);
    if (last_completes_pattern(prefix, pattern)) return false;
  }
  return true;
}

bool avoids(const Permutation& perm, Pattern pattern) { return avoids(perm, pattern_permutation(pattern)); }

Permutation inverse(const Permutation& p) {
  Permutation out{std::vector<int>(p.size())};
  for (std::size_t i = 0; i < p.size(); ++i) out.values[p.values[i] - 1] = static_cast<int>(i + 1);
  return out;
}

Permutation reverse(const Permutation& p) { return {std::vector<int>(p.values.rbegin(), p.values.rend())}; }

Permutation complement(const Permutation& p) {
  Permutation out = p;
  const int n = static_cast<int>(p.size());
  for (int& v : out.values) v = n + 1 - v;
  return out;
}

// ---- sequences -------------------------------------------------------------

std::vector<int> seq2_prime(const Seq2& s) {
  if (auto problem = validate(s)) throw Error(ErrorKind::input, *problem);
  const int n = static_cast<int>(s.size());
  std::vector<int> out(n);
  for (int y = 1; y <= n; ++y) out[y - 1] = y <= s.fixed_point ? s.values[y - 1] - y : y - s.values[y - 1];
  return out;
}

// ---- matching <-> Dyck -----------------------------------------------------

DyckPath to_dyck(const NoncrossingMatching& m) {
  std::string word(2 * m.size(), 'D');
  for (const auto& a : m.arches) word[a.left - 1] = 'U';
  return DyckPath{std::move(word)};
}

NoncrossingMatching arch_translation(const DyckPath& d) {
  if (auto problem = validate(d)) throw Error(ErrorKind::input, *problem);
  NoncrossingMatching m;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < d.word.size(); ++i) {
    if (d.word[i] == 'U') {
      open.push_back(m.arches.size());
      m.arches.push_back({static_cast<int>(i + 1), 0});
    } else {
      m.arches[open.back()].right = static_cast<int>(i + 1);
      open.pop_back();
    }
  }
  return m;
}

// ---- enumeration -----------------------------------------------------------

std::vector<DyckPath> enumerate_dyck(std::size_t n) {
  std::vector<std::vector<std::string>> by_size(n + 1);
  by_size[0].push_back("");
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 0; k < m; ++k)
      for (const auto& a : by_size[k])
        for (const auto& b : by_size[m - 1 - k]) by_size[m].push_back("U" + a + "D" + b);
  std::vector<DyckPath> out;
  out.reserve(by_size[n].size());
  for (auto& w : by_size[n]) out.push_back(DyckPath{std::move(w)});
  sort_by_text(out);
  return out;
}

std::vector<NoncrossingMatching> enumerate_matchings(std::size_t n) {
  // First arch encloses A (shifted by 1); B follows it.
  std::vector<std::vector<NoncrossingMatching>> by_size(n + 1);
  by_size[0].push_back({});
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 0; k < m; ++k)
      for (const auto& a : by_size[k])
        for (const auto& b : by_size[m - 1 - k]) {
          const int close = static_cast<int>(2 * k + 2);
          NoncrossingMatching c;
          c.arches.push_back({1, close});
          for (const auto& arch : a.arches) c.arches.push_back({arch.left + 1, arch.right + 1});
          for (const auto& arch : b.arches) c.arches.push_back({arch.left + close, arch.right + close});
          by_size[m].push_back(std::move(c));
        }
  auto out = std::move(by_size[n]);
  sort_by_text(out);
  return out;
}

std::vector<PlaneTree> enumerate_plane_trees(std::size_t n) {
  // First child of the root carries A; B's root children follow.
  std::vector<std::vector<PlaneTree>> by_size(n + 1);
  by_size[0].push_back({});
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 0; k < m; ++k)
      for (const auto& a : by_size[k])
        for (const auto& b : by_size[m - 1 - k]) {
          PlaneTree t;
          t.children.push_back(a);
          t.children.insert(t.children.end(), b.children.begin(), b.children.end());
          by_size[m].push_back(std::move(t));
        }
  auto out = std::move(by_size[n]);
  sort_by_text(out);
  return out;
}

std::vector<Permutation> enumerate_permutations(std::size_t n, Pattern avoiding) {
  const Permutation pattern = pattern_permutation(avoiding);
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<bool> used(n + 1, false);
  std::function<void()> extend = [&] {
    if (prefix.size() == n) {
      out.push_back(Permutation{prefix});
      return;
    }
    for (int v = 1; v <= static_cast<int>(n); ++v) {
      if (used[v]) continue;
      prefix.push_back(v);
      if (!last_completes_pattern(prefix, pattern)) {
        used[v] = true;
        extend();
        used[v] = false;
      }
      prefix.pop_back();
    }
  };
  extend();
  sort_by_text(out);
  return out;
}

std::vector<Seq1> enumerate_seq1(std::size_t n) {
  // a_1 = |A| + 1, then A shifted by 1, then B shifted by |A| + 1.
  std::vector<std::vector<std::vector<int>>> by_size(n + 1);
  by_size[0].push_back({});
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 0; k < m; ++k)
      for (const auto& a : by_size[k])
        for (const auto& b : by_size[m - 1 - k]) {
          std::vector<int> s;
          s.reserve(m);
          s.push_back(static_cast<int>(k + 1));
          for (int v : a) s.push_back(v + 1);
          for (int v : b) s.push_back(v + static_cast<int>(k + 1));
          by_size[m].push_back(std::move(s));
        }
  std::vector<Seq1> out;
  out.reserve(by_size[n].size());
  for (auto& s : by_size[n]) out.push_back(Seq1{std::move(s)});
  sort_by_text(out);
  return out;
}

std::vector<Seq2> enumerate_seq2(std::size_t n) {
  std::vector<Seq2> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> seq;
  seq.reserve(n);
  const int size = static_cast<int>(n);
  std::function<void(int)> extend = [&](int fixed) {
    const int i = static_cast<int>(seq.size()) + 1;
    if (i > size) {
      if (fixed) out.push_back(Seq2{seq, fixed});
      return;
    }
    for (int v = seq.empty() ? 1 : seq.back(); v <= size; ++v) {
      if (v == i && fixed) continue;
      seq.push_back(v);
      extend(v == i ? i : fixed);
      seq.pop_back();
    }
  };
  extend(0);
  sort_by_text(out);
  return out;
}

std::vector<StaircaseTiling> enumerate_staircases(std::size_t n) { return enumerate_binary_trees<StaircaseTag>(n); }

}  // namespace catpair
