#pragma once

/**
 * The Farey graph on extended rationals: vertices are reduced slopes
 * (including inf = 1/0), with an edge between a/b and c/d exactly when
 * |ad - bc| = 1.
 *
 * The circular (counterclockwise) order is increasing real value
 * wrapping through infinity, so the arc traversed counterclockwise
 * from a to b is the real interval (a, b) when a < b and otherwise
 * wraps through inf.
 */

#include <vector>

#include "lensbound/rational.hpp"

namespace lensbound {

// A path in the Farey graph: consecutive vertices adjacent, strictly
// increasing in the counterclockwise order from first to last.
struct FareyPath {
    std::vector<Slope> vertices;

    std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }

    friend bool operator==(const FareyPath&, const FareyPath&) = default;
};

// |ad - bc| = 1 for s = a/b, t = c/d.  Throws for s = t.
bool is_farey_edge(const Slope& s, const Slope& t);

// True iff x lies strictly inside the arc traversed counterclockwise
// from a to b.  Requires a != b.
bool ccw_in_open_arc(const Slope& x, const Slope& a, const Slope& b);

// True iff x lies in the closed counterclockwise arc [a, b].
bool ccw_in_closed_arc(const Slope& x, const Slope& a, const Slope& b);

// The Farey neighbor of c inside the half-open arc (c, 0] with the
// smallest denominator: the counterclockwise parent of c in the
// Stern-Brocot fan structure.  Requires a finite c < 0.
Slope ccw_successor_toward_zero(const Slope& c);

// Minimal counterclockwise path from -p/q to 0, built greedily by
// repeated ccw_successor_toward_zero.  Adjacency and monotonicity are
// asserted on every step; minimality is certified against
// bfs_minimal_path by the test suites.  Requires p >= 2.
FareyPath minimal_path(const LensSpace& lens);

// Independent oracle for minimal_path: breadth-first shortest path from
// -p/q to 0 in the finite graph whose vertices are all reduced slopes
// in [-p/q, 0] with denominator <= q, with edges between Farey-adjacent
// vertices and steps restricted to monotonically counterclockwise moves.
FareyPath bfs_minimal_path(const LensSpace& lens);

// All Farey neighbors of r strictly inside the counterclockwise arc
// (a, b), sorted counterclockwise from a.  Enumerated by walking the two
// Stern-Brocot parent fans of r until they leave the arc.  Throws if r
// lies in the closed arc [a, b] (the neighbor set would be infinite).
std::vector<Slope> neighbors_in_arc(const Slope& r, const Slope& a, const Slope& b);

}  // namespace lensbound
