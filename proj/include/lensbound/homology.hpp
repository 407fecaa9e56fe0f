#pragma once

/**
 * Exact integer linear algebra: Smith normal form over arbitrary-
 * precision integers, first homology of surgery diagrams from their
 * linking matrices, and the linear/star plumbing matrices presenting
 * lens spaces and Seifert-fibered spaces.
 */

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lensbound/rational.hpp"

namespace lensbound {

using Int = boost::multiprecision::cpp_int;

// Square integer matrix, row major.
struct IntMatrix {
    std::size_t n = 0;
    std::vector<Int> entries;

    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim) : n(dim), entries(dim * dim, 0) {}

    Int& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }

    static IntMatrix identity(std::size_t dim);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... with
// every diagonal entry non-negative.
struct SnfResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    std::vector<Int> diagonal() const;
};

// Finitely generated abelian group: free rank plus invariant factors
// d1 | d2 | ..., every factor >= 2.  The trivial group is rank 0 with
// no factors.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string str() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Smith normal form.  Pivot choice is the smallest non-zero absolute
// value with row-major tie-break, so output is deterministic; the
// reconstruction U*M*V = D is re-verified on every call.
SnfResult smith_normal_form(const IntMatrix& m);

// Exact determinant (Bareiss; O(n) recurrence for tridiagonal input).
Int determinant(const IntMatrix& m);

bool is_symmetric(const IntMatrix& m);

// Cokernel of a symmetric linking matrix: H1 of the surgered manifold.
AbelianGroup h1_of_surgery(const IntMatrix& m);

// True iff |det M| = 1, i.e. the surgery presents an integral homology
// sphere.  Requires a symmetric matrix.
bool is_homology_sphere(const IntMatrix& m);

// Tridiagonal matrix with the continued-fraction coefficients on the
// diagonal and 1 off it: the linear plumbing presenting L(p, q), with
// |det| = p.
IntMatrix chain_linking_matrix(const NegCF& cf);

// Star-shaped plumbing: central vertex with framing e0, one edge to the
// first vertex of each leg's chain.  Requires at least one leg.
IntMatrix star_linking_matrix(long long e0, const std::vector<NegCF>& legs);

// If the invariant factors pair up as d1 = d2, d3 = d4, ..., returns the
// half group G with factors (d1, d3, ...); otherwise nullopt.  Requires
// free rank 0 (apply to the torsion part).
std::optional<AbelianGroup> hantzsche_double_test(const AbelianGroup& g);

// Invariant-factor form of the direct sum of Z/p_i over the summands.
AbelianGroup h1_of_lens_sum(const ConnectedSum& sum);

// Matrix file format: first line n, then n lines of n integers.
IntMatrix read_matrix(std::istream& in);

}  // namespace lensbound
