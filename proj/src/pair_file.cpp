#include "catpair/pair_file.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace catpair {

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool next(std::string_view& line) {
    while (pos < text.size()) {
      const auto end = text.find('\n', pos);
      const auto stop = end == std::string_view::npos ? text.size() : end;
      line = text.substr(pos, stop - pos);
      pos = stop == text.size() ? stop : stop + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
    }
    return false;
  }
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::syntax,
                "line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" + std::string(field) + "'",
                line_no);
  }
  return value;
}

}  // namespace

RelationPair parse_pair_file(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw Error(ErrorKind::syntax, "missing header line 'n <int>'", 0);
  auto header = split_fields(line);
  if (header.size() != 2 || header[0] != "n") {
    throw Error(ErrorKind::syntax, "line " + std::to_string(reader.line_no) + ": expected header 'n <int>'",
                reader.line_no);
  }
  const std::size_t n = parse_count(header[1], reader.line_no);
  constexpr std::size_t max_size = 4096;
  if (n > max_size) throw Error(ErrorKind::capacity, "pair size " + std::to_string(n) + " exceeds " + std::to_string(max_size));

  RelationPair pair{Relation(n), Relation(n)};
  std::set<std::tuple<char, std::size_t, std::size_t>> seen;
  while (reader.next(line)) {
    const auto fields = split_fields(line);
    const auto where = "line " + std::to_string(reader.line_no) + ": ";
    if (fields.size() != 3 || (fields[0] != "S" && fields[0] != "R")) {
      throw Error(ErrorKind::syntax, where + "expected 'S <i> <j>' or 'R <i> <j>'", reader.line_no);
    }
    const std::size_t i = parse_count(fields[1], reader.line_no);
    const std::size_t j = parse_count(fields[2], reader.line_no);
    if (i < 1 || i > n || j < 1 || j > n) {
      throw Error(ErrorKind::syntax, where + "label outside 1.." + std::to_string(n), reader.line_no);
    }
    const char rel = fields[0][0];
    if (!seen.emplace(rel, i, j).second) throw Error(ErrorKind::syntax, where + "duplicate line", reader.line_no);
    (rel == 'S' ? pair.S : pair.R).insert(i - 1, j - 1);
  }
  return pair;
}

std::string to_pair_file(const RelationPair& pair) {
  std::string out = "n " + std::to_string(pair.size()) + "\n";
  for (const auto& [i, j] : pair.S.pairs()) out += "S " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  for (const auto& [i, j] : pair.R.pairs()) out += "R " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  return out;
}

std::string to_pair_file(const CatalanPair& pair) { return to_pair_file(pair.relations()); }

std::string format_axiom_report(const AxiomReport& report) {
  static constexpr const char* names[] = {"", "i", "ii", "iii", "iv"};
  std::ostringstream out;
  for (int a = 1; a <= 4; ++a) {
    std::vector<const AxiomViolation*> hits;
    for (const auto& v : report.violations)
      if (static_cast<int>(v.axiom) == a) hits.push_back(&v);
    out << "axiom " << names[a] << ": ";
    if (hits.empty()) {
      out << "PASS\n";
      continue;
    }
    out << "FAIL";
    for (std::size_t h = 0; h < hits.size(); ++h) {
      out << (h == 0 ? " " : "; ");
      if (hits[h]->relation != 0) out << hits[h]->relation << ' ';
      for (std::size_t k = 0; k < hits[h]->witness.size(); ++k) out << (k ? " " : "") << hits[h]->witness[k] + 1;
    }
    out << '\n';
  }
  out << (report.valid() ? "valid" : "invalid") << '\n';
  return out.str();
}

}  // namespace catpair
