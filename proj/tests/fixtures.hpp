#pragma once

// Worked examples, transcribed with labels a, b, c, ... (or positions 1, 2,
// ...) mapped to 0, 1, 2, ...

#include <string>

#include "catpair/relation.hpp"

namespace catpair::fixtures {

enum : Label { a, b, c, d, e, f, g };

// Seven-arch matching / Dyck path / plane tree example.
inline Relation example1_S() { return Relation(7, {{b, a}, {f, e}, {f, d}, {e, d}, {g, d}}); }
inline Relation example1_R() {
  return Relation(7, {{a, c}, {a, d}, {a, e}, {a, f}, {a, g}, {b, c}, {b, d}, {b, e}, {b, f}, {b, g},
                      {c, d}, {c, e}, {c, f}, {c, g}, {e, g}, {f, g}});
}
inline CatalanPair example1() { return CatalanPair(example1_S(), example1_R()); }

// 312-avoider 2 1 3 5 6 4, labels are positions.
inline Relation perm312_S() { return Relation(6, {{0, 1}, {3, 5}, {4, 5}}); }
inline Relation perm312_R() {
  return Relation(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}});
}

// 321-avoider 2 3 1 4 5 on {a..e}.
inline Relation perm321_S() { return Relation(5, {{a, c}, {b, c}}); }
inline Relation perm321_R() {
  return Relation(5, {{a, b}, {a, d}, {a, e}, {b, d}, {b, e}, {c, d}, {c, e}, {d, e}});
}

// Seq1 5 2 4 4 5 6, labels a_1..a_6.
inline Relation seq1_S() { return Relation(6, {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {3, 2}}); }
inline Relation seq1_R() {
  return Relation(6, {{0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

// Seq2 2 4 4 5 5 5 6 6, labels a_1..a_8.
inline Relation seq2_S() { return Relation(8, {{0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}, {7, 6}}); }
inline Relation seq2_R() {
  return Relation(8, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {0, 6}, {0, 7}, {1, 3}, {1, 5}, {1, 6}, {1, 7}, {2, 3},
                      {2, 5}, {2, 6}, {2, 7}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}});
}

// Size-7 staircase tiling on {a..g}.
inline Relation staircase_S() { return Relation(7, {{c, d}, {c, g}, {d, g}, {e, g}, {f, g}}); }
inline Relation staircase_R() {
  return Relation(7, {{a, b}, {a, c}, {a, d}, {a, e}, {a, f}, {a, g}, {b, c}, {b, d}, {b, g}, {b, e}, {b, f},
                      {c, e}, {c, f}, {d, e}, {d, f}, {e, f}});
}

}  // namespace catpair::fixtures
