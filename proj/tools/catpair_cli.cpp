// Command-line front end over the catpair C API.
//
// Exit codes: 0 success, 1 input or parse error, 2 semantic failure (axioms
// do not hold, or a value breaks its family's invariants).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catpair/catpair.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_semantic = 2;

struct StringDeleter {
  void operator()(char* s) const { catpair_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct ValueDeleter {
  void operator()(catpair_value* v) const { catpair_value_free(v); }
};
using Value = std::unique_ptr<catpair_value, ValueDeleter>;

struct PairDeleter {
  void operator()(catpair_pair* p) const { catpair_pair_free(p); }
};
using Pair = std::unique_ptr<catpair_pair, PairDeleter>;

int exit_code_for(catpair_status status) {
  switch (status) {
    case CATPAIR_OK: return exit_ok;
    case CATPAIR_ERR_VALIDATION:
    case CATPAIR_ERR_AXIOM:
    case CATPAIR_ERR_DOMAIN:
    case CATPAIR_ERR_INVARIANT: return exit_semantic;
    default: return exit_input;
  }
}

int report(catpair_status status) {
  std::cerr << "catpair: " << catpair_status_name(status) << ": " << catpair_last_error() << '\n';
  return exit_code_for(status);
}

bool read_all(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

std::string strip_line_end(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

int load_pair(const std::string& path, Pair& out) {
  std::string text;
  if (!read_all(path, text)) {
    std::cerr << "catpair: cannot read '" << path << "'\n";
    return exit_input;
  }
  catpair_pair* raw = nullptr;
  if (auto s = catpair_pair_parse(text.c_str(), &raw)) return report(s);
  out.reset(raw);
  return exit_ok;
}

int load_family(const std::string& name, catpair_family& out) {
  if (auto s = catpair_family_parse(name.c_str(), &out)) return report(s);
  return exit_ok;
}

struct ValueInput {
  std::string text;
  bool from_stdin = false;
  bool given = false;

  std::string resolve() const {
    if (!from_stdin) return text;
    std::string all(std::istreambuf_iterator<char>(std::cin), {});
    return strip_line_end(std::move(all));
  }
};

int load_value(catpair_family family, const ValueInput& input, Value& out) {
  if (input.from_stdin == input.given) {
    std::cerr << "catpair: give exactly one of a value argument or --stdin\n";
    return exit_input;
  }
  catpair_value* raw = nullptr;
  if (auto s = catpair_value_parse(family, input.resolve().c_str(), &raw)) return report(s);
  out.reset(raw);
  return exit_ok;
}

int cmd_verify(const std::string& path) {
  Pair pair;
  if (int rc = load_pair(path, pair)) return rc;
  char* raw = nullptr;
  const auto status = catpair_pair_verify(pair.get(), &raw);
  if (status != CATPAIR_OK && status != CATPAIR_ERR_AXIOM) return report(status);
  CString text(raw);
  std::cout << text.get();
  return status == CATPAIR_OK ? exit_ok : exit_semantic;
}

int cmd_encode(const std::string& family_name, const ValueInput& input) {
  catpair_family family{};
  if (int rc = load_family(family_name, family)) return rc;
  Value value;
  if (int rc = load_value(family, input, value)) return rc;
  catpair_pair* raw = nullptr;
  if (auto s = catpair_value_encode(value.get(), &raw)) return report(s);
  Pair pair(raw);
  char* text = nullptr;
  if (auto s = catpair_pair_serialize(pair.get(), &text)) return report(s);
  std::cout << CString(text).get();
  return exit_ok;
}

int cmd_convert(const std::string& from_name, const std::string& to_name, const ValueInput& input) {
  catpair_family from{}, to{};
  if (int rc = load_family(from_name, from)) return rc;
  if (int rc = load_family(to_name, to)) return rc;
  Value value;
  if (int rc = load_value(from, input, value)) return rc;
  catpair_value* raw = nullptr;
  if (auto s = catpair_value_convert(value.get(), to, &raw)) return report(s);
  Value converted(raw);
  char* text = nullptr;
  if (auto s = catpair_value_serialize(converted.get(), &text)) return report(s);
  std::cout << CString(text).get() << '\n';
  return exit_ok;
}

int cmd_enumerate(const std::string& family_name, std::size_t n) {
  catpair_family family{};
  if (int rc = load_family(family_name, family)) return rc;
  char* raw = nullptr;
  if (auto s = catpair_enumerate(family, n, &raw)) return report(s);
  std::cout << CString(raw).get();
  return exit_ok;
}

// Rows are sizes 0..n; columns the Catalan reference, then one count per
// family, then PASS when every count matches the reference.
int cmd_count(const std::string& family_name, std::size_t n) {
  std::vector<catpair_family> families;
  if (family_name == "all") {
    for (std::size_t i = 0; i < catpair_family_count(); ++i) {
      catpair_family f{};
      catpair_family_at(i, &f);
      families.push_back(f);
    }
  } else {
    catpair_family f{};
    if (int rc = load_family(family_name, f)) return rc;
    families.push_back(f);
  }

  std::ostringstream out;
  out << "n\tcatalan";
  for (auto f : families) out << '\t' << catpair_family_name(f);
  out << "\tstatus\n";
  bool all_pass = true;
  for (std::size_t size = 0; size <= n; ++size) {
    char* raw = nullptr;
    if (auto s = catpair_catalan(size, &raw)) return report(s);
    const std::string reference = CString(raw).get();
    out << size << '\t' << reference;
    bool pass = true;
    for (auto f : families) {
      std::uint64_t count = 0;
      if (auto s = catpair_count(f, size, &count)) return report(s);
      out << '\t' << count;
      pass = pass && std::to_string(count) == reference;
    }
    out << '\t' << (pass ? "PASS" : "FAIL") << '\n';
    all_pass = all_pass && pass;
  }
  std::cout << out.str();
  return all_pass ? exit_ok : exit_semantic;
}

int cmd_decompose(const std::string& path) {
  Pair pair;
  if (int rc = load_pair(path, pair)) return rc;
  char* raw = nullptr;
  if (auto s = catpair_pair_decompose(pair.get(), &raw)) return report(s);
  std::cout << CString(raw).get() << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalan pairs: encode, convert and verify Catalan structures"};
  app.require_subcommand(1);

  std::string path, family, from, to;
  std::size_t n = 0;
  ValueInput input;
  int rc = exit_ok;

  auto* verify = app.add_subcommand("verify", "check the four axioms on a pair file ('-' for stdin)");
  verify->add_option("file", path, "pair file")->required();
  verify->callback([&] { rc = cmd_verify(path); });

  auto add_value = [&](CLI::App* cmd) {
    cmd->add_option("value", input.text, "structure in its text form");
    cmd->add_flag("--stdin", input.from_stdin, "read the structure from standard input");
  };

  auto* encode = app.add_subcommand("encode", "print the Catalan pair of a structure as a pair file");
  encode->add_option("--family", family, "family tag")->required();
  add_value(encode);
  encode->callback([&] {
    input.given = encode->count("value") > 0;
    rc = cmd_encode(family, input);
  });

  auto* convert = app.add_subcommand("convert", "convert a structure between families");
  convert->add_option("--from", from, "source family")->required();
  convert->add_option("--to", to, "target family")->required();
  add_value(convert);
  convert->callback([&] {
    input.given = convert->count("value") > 0;
    rc = cmd_convert(from, to, input);
  });

  auto* enumerate = app.add_subcommand("enumerate", "list every structure of a given size");
  enumerate->add_option("--family", family, "family tag")->required();
  enumerate->add_option("-n", n, "size")->required();
  enumerate->callback([&] { rc = cmd_enumerate(family, n); });

  auto* count = app.add_subcommand("count", "tabulate enumeration counts against the Catalan numbers");
  count->add_option("--family", family, "family tag or 'all'")->required();
  count->add_option("-n", n, "largest size")->required();
  count->callback([&] { rc = cmd_count(family, n); });

  auto* decompose = app.add_subcommand("decompose", "print the decomposition tree of a pair file ('-' for stdin)");
  decompose->add_option("file", path, "pair file")->required();
  decompose->callback([&] { rc = cmd_decompose(path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }
  return rc;
}
