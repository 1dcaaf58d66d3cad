#pragma once

#include <string>
#include <string_view>

#include "catpair/relation.hpp"

namespace catpair {

// Pair file format, labels 1-based:
//
//   n <int>
//   S <i> <j>
//   R <i> <j>
//
// The writer emits the header, then S lines, then R lines, each block sorted
// by (i, j). The reader accepts relation lines in any order, ignores blank
// lines, and rejects duplicates and out-of-range labels.
RelationPair parse_pair_file(std::string_view text);
std::string to_pair_file(const RelationPair& pair);
std::string to_pair_file(const CatalanPair& pair);

// Human-readable verification report, one line per axiom plus a verdict line,
// with 1-based witnesses.
std::string format_axiom_report(const AxiomReport& report);

}  // namespace catpair
