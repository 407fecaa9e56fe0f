#pragma once

/**
 * Tight contact structures on L(p, q), encoded combinatorially: the
 * minimal counterclockwise Farey path from -p/q to 0 with a sign on
 * every interior edge (all edges except the first and last).
 *
 * Interior edges fall into consecutive blocks of size |a_i| - 2, one
 * block per coefficient of the negative continued fraction of -p/q.
 * Two assignments give the same structure when they differ by a
 * permutation of signs within a block; the canonical representative
 * sorts every block as plus-run then minus-run, so a structure is
 * determined by its per-block plus counts.
 */

#include <string>
#include <vector>

#include "lensbound/farey.hpp"
#include "lensbound/rational.hpp"

namespace lensbound {

struct TightStructure {
    LensSpace lens;
    FareyPath path;
    std::vector<long long> blocks;  // block sizes |a_i| - 2, in CF order
    std::string signs;              // one '+'/'-' per interior edge, canonical

    std::size_t interior_edges() const { return signs.size(); }

    friend bool operator==(const TightStructure&, const TightStructure&) = default;
};

// An interior vertex whose two incident signed edges carry opposite
// signs; position indexes the vertex within the path.  prev/torus/next
// are consecutive path vertices in counterclockwise order.
struct MixedVertex {
    std::size_t position = 0;
    Slope prev;
    Slope torus;
    Slope next;

    friend bool operator==(const MixedVertex&, const MixedVertex&) = default;
};

struct NoSphereWitness {
    LensSpace lens;
    std::string signs;
    Slope torus;
    Slope candidate;
};

// Result of the meridional-slope sweep over one lens space: ok means no
// candidate ever equals 0 or -p/q.  The counters summarize how much was
// checked.
struct NoSphereReport {
    bool ok = true;
    std::vector<NoSphereWitness> violations;
    long long structures = 0;
    long long mixed_vertices = 0;
    long long candidates = 0;
    long long empty_candidate_lists = 0;
};

// All tight contact structures on L(p, q), one per choice of per-block
// plus counts, in lexicographic order of those counts.  List length is
// the product of (block size + 1).  Requires p >= 2.
std::vector<TightStructure> enumerate_tight(const LensSpace& lens);

// The classification count: product of |a_i + 1| over the negative
// continued fraction of -p/q.  Requires p >= 2; throws std::overflow_error
// if the count exceeds 64 bits.
unsigned long long count_tight_formula(const LensSpace& lens);

// True iff every interior sign is equal (vacuously for none).
bool is_universally_tight(const TightStructure& t);

// Number of universally tight structures on L(p, q): two oriented ones
// (all-plus and all-minus) once any interior edge exists, otherwise one.
// They carry the same unoriented plane field, so the unoriented count is
// always one.
std::size_t universally_tight_count(const LensSpace& lens, bool oriented = true);

// Every interior vertex where the sign changes, in path order.
std::vector<MixedVertex> mixed_vertices(const TightStructure& t);

// Interior vertices where SOME reordering of the per-block sign
// multisets produces a sign change, in path order.  A superset of
// mixed_vertices(t).
std::vector<MixedVertex> mixed_vertices_any_ordering(const TightStructure& t);

// Possible meridional slopes at the mixed vertex v: the Farey neighbors
// of the torus slope strictly inside the counterclockwise arc from
// v.next to v.prev (the side of the path not containing the torus
// slope).  Requires v in mixed_vertices(t).
std::vector<Slope> menke_candidates(const TightStructure& t, const MixedVertex& v);

// As menke_candidates but for a vertex from mixed_vertices_any_ordering.
std::vector<Slope> menke_candidates_at(const TightStructure& t, const MixedVertex& v);

// Checks, over every virtually overtwisted structure on L(p, q) and
// every mixed vertex, that no meridional candidate equals 0 or -p/q.
NoSphereReport verify_no_sphere_factor(const LensSpace& lens);

// Rebuilds a structure from a user-supplied interior sign string,
// canonicalizing within blocks.  Throws if the length does not match.
TightStructure tight_structure_from_signs(const LensSpace& lens, const std::string& signs);

}  // namespace lensbound
