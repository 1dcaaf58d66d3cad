/*
 * catpair C API.
 *
 * Opaque handles own their data and are released with the matching *_free
 * call. Strings returned through char** out-parameters are heap-allocated,
 * NUL-terminated, and must be released with catpair_string_free.
 *
 * Every function that can fail returns a catpair_status; on failure the
 * out-parameters are left untouched and catpair_last_error() describes the
 * problem (per thread, valid until the next failing call on that thread).
 */
#ifndef CATPAIR_H
#define CATPAIR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CATPAIR_BUILDING_LIBRARY)
#define CATPAIR_API __declspec(dllexport)
#else
#define CATPAIR_API __declspec(dllimport)
#endif
#else
#define CATPAIR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum catpair_status {
  CATPAIR_OK = 0,
  CATPAIR_ERR_INPUT = 1,      /* bad argument */
  CATPAIR_ERR_SYNTAX = 2,     /* text does not follow the grammar */
  CATPAIR_ERR_VALIDATION = 3, /* value breaks a family invariant */
  CATPAIR_ERR_AXIOM = 4,      /* relations are not a Catalan pair */
  CATPAIR_ERR_EMPTY = 5,
  CATPAIR_ERR_INVARIANT = 6,
  CATPAIR_ERR_DOMAIN = 7,
  CATPAIR_ERR_CAPACITY = 8,
  CATPAIR_ERR_INTERNAL = 9
} catpair_status;

typedef enum catpair_family {
  CATPAIR_DYCK = 0,
  CATPAIR_MATCHING,
  CATPAIR_PLANE_TREE,
  CATPAIR_PERM_312,
  CATPAIR_PERM_321,
  CATPAIR_PERM_231,
  CATPAIR_PERM_213,
  CATPAIR_PERM_132,
  CATPAIR_PERM_123,
  CATPAIR_SEQ1,
  CATPAIR_SEQ2,
  CATPAIR_STAIRCASE,
  CATPAIR_BINARY_TREE,
  CATPAIR_POLYOMINO
} catpair_family;

typedef struct catpair_value catpair_value; /* one structure of a family */
typedef struct catpair_pair catpair_pair;   /* relations S and R, possibly invalid */

CATPAIR_API const char* catpair_last_error(void);
CATPAIR_API const char* catpair_status_name(catpair_status status);
CATPAIR_API void catpair_string_free(char* s);

/* Families, in declaration order. */
CATPAIR_API size_t catpair_family_count(void);
CATPAIR_API catpair_status catpair_family_at(size_t index, catpair_family* out);
/* "dyck", "plane-tree", "perm-312", ...; NULL for an unknown value. */
CATPAIR_API const char* catpair_family_name(catpair_family family);
/* Accepts the names above and "grammar-tree" as an alias of binary-tree. */
CATPAIR_API catpair_status catpair_family_parse(const char* name, catpair_family* out);

CATPAIR_API catpair_status catpair_value_parse(catpair_family family, const char* text, catpair_value** out);
CATPAIR_API void catpair_value_free(catpair_value* value);
CATPAIR_API catpair_family catpair_value_family(const catpair_value* value);
CATPAIR_API size_t catpair_value_size(const catpair_value* value);
CATPAIR_API catpair_status catpair_value_serialize(const catpair_value* value, char** out);
/* The family encoder's pair, labels in the encoder's order. */
CATPAIR_API catpair_status catpair_value_encode(const catpair_value* value, catpair_pair** out);
CATPAIR_API catpair_status catpair_value_convert(const catpair_value* value, catpair_family to, catpair_value** out);

/* Pair files: "n <int>" then "S i j" / "R i j" lines, 1-based labels. */
CATPAIR_API catpair_status catpair_pair_parse(const char* text, catpair_pair** out);
CATPAIR_API void catpair_pair_free(catpair_pair* pair);
CATPAIR_API size_t catpair_pair_size(const catpair_pair* pair);
CATPAIR_API catpair_status catpair_pair_serialize(const catpair_pair* pair, char** out);
/* Writes the per-axiom report to *report in both cases; returns CATPAIR_OK
 * for a Catalan pair and CATPAIR_ERR_AXIOM otherwise. */
CATPAIR_API catpair_status catpair_pair_verify(const catpair_pair* pair, char** report);
CATPAIR_API catpair_status catpair_pair_canonicalize(const catpair_pair* pair, catpair_pair** out);
CATPAIR_API catpair_status catpair_pair_is_isomorphic(const catpair_pair* p, const catpair_pair* q, int* out);
/* Decomposition tree in the "e" / "(left,right)" grammar. */
CATPAIR_API catpair_status catpair_pair_decompose(const catpair_pair* pair, char** out);
CATPAIR_API catpair_status catpair_pair_decode(const catpair_pair* pair, catpair_family family, catpair_value** out);

/* One serialization per line, each terminated by '\n', sorted. */
CATPAIR_API catpair_status catpair_enumerate(catpair_family family, size_t n, char** out);
CATPAIR_API catpair_status catpair_count(catpair_family family, size_t n, uint64_t* out);
/* Decimal digits of the n-th Catalan number. */
CATPAIR_API catpair_status catpair_catalan(size_t n, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CATPAIR_H */
