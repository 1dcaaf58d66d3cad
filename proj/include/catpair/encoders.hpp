#pragma once

#include <vector>

#include "catpair/relation.hpp"
#include "catpair/structures.hpp"

namespace catpair {

// Label k is the arch with the k-th smallest left endpoint.
// xSy: x nested strictly inside y.  xRy: x ends before y starts.
CatalanPair encode_matching(const NoncrossingMatching& m);

// Label k is the tunnel opened by the k-th up step.
// xSy: tunnel x lies above y.  xRy: x lies completely left of y.
CatalanPair encode_dyck(const DyckPath& d);

// Labels are the non-root nodes in preorder.
// xSy: x a proper descendant of y.  xRy: x left of y below a common ancestor
// distinct from both.
CatalanPair encode_plane_tree(const PlaneTree& t);

// Defined for every permutation; labels are positions.
// iSj: i<j and an inversion.  iRj: i<j and a noninversion.
// The result is a Catalan pair exactly when the permutation avoids 312.
RelationPair encode_perm_312(const Permutation& p);

struct Point {
  int position;
  int value;
  friend bool operator==(const Point&, const Point&) = default;
};

// The points (i, p(i)) of a permutation in position order.
struct PointSet321 {
  std::vector<Point> points;
  explicit PointSet321(const Permutation& p);
};

// Some point c lies left of both x and y and above both.
bool cover_exists(const PointSet321& pts, const Point& x, const Point& y);

// The cover rule, labels are positions. xRy: x left of and below y with no
// cover of {x,y}. xSy: x left of y and neither xRy nor yRx.
// For 321-avoiders this is a Catalan pair only on part of the class; 2 4 1 3
// is the smallest failure.
RelationPair cover_relations_321(const Permutation& p);

// Scan left to right; a left-to-right maximum m adds (m - previous maximum)
// up steps, and every position adds one down step.
DyckPath perm_321_path(const Permutation& p);

// Tunnels of perm_321_path(p), each labelled by the position of its down
// step. Equal to cover_relations_321(p) whenever that is a Catalan pair.
// Throws ErrorKind::domain when p contains 321.
CatalanPair encode_perm_321(const Permutation& p);

// Labels are positions.
// a_i R a_j: i<j and a_i < a_j.  a_i S a_j: j<i and a_i <= a_j.
CatalanPair encode_seq1(const Seq1& s);

// Labels are positions; relations are read off the a' sequence on each side
// of the fixed point.
CatalanPair encode_seq2(const Seq2& s);

// pair(Node(L, U)) = compose_pair(pair(U), pair(L)): the U part sits below the
// junction rectangle (uS phi), the L part to its right (phi R l).
CatalanPair encode_staircase(const StaircaseTiling& t);

// Encoding of S_n(pattern) through the 312 and 321 constructions:
//   312, 321 direct;  231 via inverse to 312;  213 via reverse to 312;
//   123 via reverse to 321;  132 via reverse to 231.
// Throws ErrorKind::domain when p contains the pattern.
CatalanPair pair_for_avoidance_class(const Permutation& p, Pattern pattern);

// The permutation handed to the 312 or 321 encoder for a class member, and
// its inverse map. base_pattern() names the target class.
Pattern base_pattern(Pattern pattern);
Permutation to_base_class(const Permutation& p, Pattern pattern);
Permutation from_base_class(const Permutation& base, Pattern pattern);

}  // namespace catpair
