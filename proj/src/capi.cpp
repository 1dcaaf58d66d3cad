#include "catpair/catpair.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "catpair/bijection.hpp"
#include "catpair/pair_file.hpp"

struct catpair_value {
  catpair::Family family;
  catpair::StructureValue value;
};

struct catpair_pair {
  catpair::RelationPair relations;
};

namespace {

thread_local std::string last_error;

catpair_status fail(catpair_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

catpair_status status_of(catpair::ErrorKind kind) {
  using catpair::ErrorKind;
  switch (kind) {
    case ErrorKind::input: return CATPAIR_ERR_INPUT;
    case ErrorKind::syntax: return CATPAIR_ERR_SYNTAX;
    case ErrorKind::validation: return CATPAIR_ERR_VALIDATION;
    case ErrorKind::empty_input: return CATPAIR_ERR_EMPTY;
    case ErrorKind::invariant: return CATPAIR_ERR_INVARIANT;
    case ErrorKind::domain: return CATPAIR_ERR_DOMAIN;
    case ErrorKind::capacity: return CATPAIR_ERR_CAPACITY;
  }
  return CATPAIR_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class Body>
catpair_status guarded(Body&& body) noexcept {
  try {
    return body();
  } catch (const catpair::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CATPAIR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CATPAIR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CATPAIR_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid_family(catpair_family f) {
  return static_cast<int>(f) >= 0 && static_cast<std::size_t>(f) < catpair::all_families().size();
}

catpair::Family to_family(catpair_family f) { return catpair::all_families()[static_cast<std::size_t>(f)]; }

catpair_family from_family(catpair::Family f) {
  const auto families = catpair::all_families();
  for (std::size_t i = 0; i < families.size(); ++i)
    if (families[i] == f) return static_cast<catpair_family>(i);
  return CATPAIR_DYCK;
}

catpair_status require(bool ok, const char* what) {
  return ok ? CATPAIR_OK : fail(CATPAIR_ERR_INPUT, what);
}

// Validates relations as a Catalan pair, reporting CATPAIR_ERR_AXIOM.
catpair_status as_catalan(const catpair_pair* pair, catpair::CatalanPair& out) {
  const auto report = catpair::check_axioms(pair->relations);
  if (!report.valid()) return fail(CATPAIR_ERR_AXIOM, "relations do not form a Catalan pair");
  out = catpair::CatalanPair(pair->relations.S, pair->relations.R, catpair::CatalanPair::trusted);
  return CATPAIR_OK;
}

}  // namespace

extern "C" {

const char* catpair_last_error(void) { return last_error.c_str(); }

const char* catpair_status_name(catpair_status status) {
  switch (status) {
    case CATPAIR_OK: return "ok";
    case CATPAIR_ERR_INPUT: return "input error";
    case CATPAIR_ERR_SYNTAX: return "syntax error";
    case CATPAIR_ERR_VALIDATION: return "validation error";
    case CATPAIR_ERR_AXIOM: return "axiom failure";
    case CATPAIR_ERR_EMPTY: return "empty input";
    case CATPAIR_ERR_INVARIANT: return "invariant violation";
    case CATPAIR_ERR_DOMAIN: return "domain error";
    case CATPAIR_ERR_CAPACITY: return "capacity exceeded";
    case CATPAIR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void catpair_string_free(char* s) { std::free(s); }

size_t catpair_family_count(void) { return catpair::all_families().size(); }

catpair_status catpair_family_at(size_t index, catpair_family* out) {
  if (!out || index >= catpair::all_families().size()) return fail(CATPAIR_ERR_INPUT, "family index out of range");
  *out = static_cast<catpair_family>(index);
  return CATPAIR_OK;
}

const char* catpair_family_name(catpair_family family) {
  if (!valid_family(family)) return nullptr;
  return catpair::family_name(to_family(family)).data();
}

catpair_status catpair_family_parse(const char* name, catpair_family* out) {
  if (!name || !out) return fail(CATPAIR_ERR_INPUT, "null argument");
  const auto f = catpair::family_from_name(name);
  if (!f) return fail(CATPAIR_ERR_INPUT, std::string("unknown family '") + name + "'");
  *out = from_family(*f);
  return CATPAIR_OK;
}

catpair_status catpair_value_parse(catpair_family family, const char* text, catpair_value** out) {
  if (auto s = require(text && out && valid_family(family), "invalid argument")) return s;
  return guarded([&] {
    auto value = catpair::parse_value(to_family(family), text);
    *out = new catpair_value{to_family(family), std::move(value)};
    return CATPAIR_OK;
  });
}

void catpair_value_free(catpair_value* value) { delete value; }

catpair_family catpair_value_family(const catpair_value* value) { return value ? from_family(value->family) : CATPAIR_DYCK; }

size_t catpair_value_size(const catpair_value* value) { return value ? catpair::value_size(value->value) : 0; }

catpair_status catpair_value_serialize(const catpair_value* value, char** out) {
  if (auto s = require(value && out, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(catpair::serialize_value(value->value));
    return CATPAIR_OK;
  });
}

catpair_status catpair_value_encode(const catpair_value* value, catpair_pair** out) {
  if (auto s = require(value && out, "null argument")) return s;
  return guarded([&] {
    auto pair = catpair::encode(value->family, value->value);
    *out = new catpair_pair{pair.relations()};
    return CATPAIR_OK;
  });
}

catpair_status catpair_value_convert(const catpair_value* value, catpair_family to, catpair_value** out) {
  if (auto s = require(value && out && valid_family(to), "invalid argument")) return s;
  return guarded([&] {
    auto converted = catpair::convert(value->value, value->family, to_family(to));
    *out = new catpair_value{to_family(to), std::move(converted)};
    return CATPAIR_OK;
  });
}

catpair_status catpair_pair_parse(const char* text, catpair_pair** out) {
  if (auto s = require(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new catpair_pair{catpair::parse_pair_file(text)};
    return CATPAIR_OK;
  });
}

void catpair_pair_free(catpair_pair* pair) { delete pair; }

size_t catpair_pair_size(const catpair_pair* pair) { return pair ? pair->relations.size() : 0; }

catpair_status catpair_pair_serialize(const catpair_pair* pair, char** out) {
  if (auto s = require(pair && out, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(catpair::to_pair_file(pair->relations));
    return CATPAIR_OK;
  });
}

catpair_status catpair_pair_verify(const catpair_pair* pair, char** report) {
  if (auto s = require(pair && report, "null argument")) return s;
  return guarded([&] {
    const auto result = catpair::check_axioms(pair->relations);
    *report = dup_string(catpair::format_axiom_report(result));
    return result.valid() ? CATPAIR_OK : fail(CATPAIR_ERR_AXIOM, "relations do not form a Catalan pair");
  });
}

catpair_status catpair_pair_canonicalize(const catpair_pair* pair, catpair_pair** out) {
  if (auto s = require(pair && out, "null argument")) return s;
  return guarded([&] {
    catpair::CatalanPair p;
    if (auto s = as_catalan(pair, p)) return s;
    *out = new catpair_pair{catpair::canonicalize(p).pair().relations()};
    return CATPAIR_OK;
  });
}

catpair_status catpair_pair_is_isomorphic(const catpair_pair* p, const catpair_pair* q, int* out) {
  if (auto s = require(p && q && out, "null argument")) return s;
  return guarded([&] {
    catpair::CatalanPair a, b;
    if (auto s = as_catalan(p, a)) return s;
    if (auto s = as_catalan(q, b)) return s;
    *out = catpair::is_isomorphic(a, b) ? 1 : 0;
    return CATPAIR_OK;
  });
}

catpair_status catpair_pair_decompose(const catpair_pair* pair, char** out) {
  if (auto s = require(pair && out, "null argument")) return s;
  return guarded([&] {
    catpair::CatalanPair p;
    if (auto s = as_catalan(pair, p)) return s;
    *out = dup_string(catpair::to_string(catpair::pair_to_tree(p)));
    return CATPAIR_OK;
  });
}

catpair_status catpair_pair_decode(const catpair_pair* pair, catpair_family family, catpair_value** out) {
  if (auto s = require(pair && out && valid_family(family), "invalid argument")) return s;
  return guarded([&] {
    catpair::CatalanPair p;
    if (auto s = as_catalan(pair, p)) return s;
    auto value = catpair::decode(p, to_family(family));
    *out = new catpair_value{to_family(family), std::move(value)};
    return CATPAIR_OK;
  });
}

catpair_status catpair_enumerate(catpair_family family, size_t n, char** out) {
  if (auto s = require(out && valid_family(family), "invalid argument")) return s;
  return guarded([&] {
    std::string text;
    for (const auto& v : catpair::enumerate_family(to_family(family), n)) {
      text += catpair::serialize_value(v);
      text.push_back('\n');
    }
    *out = dup_string(text);
    return CATPAIR_OK;
  });
}

catpair_status catpair_count(catpair_family family, size_t n, uint64_t* out) {
  if (auto s = require(out && valid_family(family), "invalid argument")) return s;
  return guarded([&] {
    *out = catpair::enumerate_family(to_family(family), n).size();
    return CATPAIR_OK;
  });
}

catpair_status catpair_catalan(size_t n, char** out) {
  if (auto s = require(out != nullptr, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(catpair::catalan(n).str());
    return CATPAIR_OK;
  });
}

}  // extern "C"
