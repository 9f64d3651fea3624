#pragma once

#include "orbitcalc/matroid.hpp"

#include <map>
#include <optional>
#include <vector>

namespace orbitcalc {

enum class LatticeMode { Rank, Independence };

// Integer points of the shifted dilates behind the non-equivariant classes:
// e >= 0 with sum_{i in A} e_i <= (r+1) rk(A) - 1 for every nonempty A, and
// (rank mode only) sum e_i = (r+1) d - 1. The -1 slack implements the generic
// epsilon shift; all constraint data is integral, so they agree.
std::vector<std::vector<int>> lattice_points(const Matroid& m, int r, LatticeMode mode);

// Facet-defining inequalities sum_{i in A} x_i <= rk(A) of the rank polytope,
// as subsets A (bounds appear as singletons and complements of singletons).
// Decided exactly: the tight bases must affinely span codimension 1.
std::vector<Mask> flacets(const Matroid& m);

// Affine dimension of {e_B : B in bases}.
int affine_dim(const std::vector<Mask>& bases, int n);

struct ShadowSubdivision {
    Matroid big;                // matroid of (P_M + R>=0 (e_i - e_j)) ∩ Δ
    std::vector<Matroid> cells; // full-dimensional cells: M first, then one per shadow facet
};

// The subdivision of P_big induced by pushing P_M in direction e_i - e_j.
// Cell vertex rule: tight bases of the facet plus their (B \ j) ∪ i exchanges.
ShadowSubdivision shadow_facet_subdivision(const Matroid& m, int i, int j);

// Signed list of matroids whose weighted indicator sum reproduces the parent.
// Facet cells carry +1; with_faces() adds the inclusion-exclusion correction
// terms (intersections of cells), making the identity exact everywhere rather
// than almost everywhere — which is what valuative (not merely additive)
// invariants require.
struct Subdivision {
    Matroid parent;
    std::vector<std::pair<Matroid, int>> cells;

    Subdivision with_faces() const;
};

// Regular subdivision of P_M from heights on the bases (lower convex hull).
// Exhaustive exact search over supporting affine functions spanned by
// affinely independent lifted vertex subsets. Throws InternalError if a cell
// fails the exchange axiom (a non-matroidal subdivision signals misuse).
Subdivision regular_subdivision(const Matroid& m, const std::map<Mask, Rat>& heights);

// Probabilistic indicator check at `samples` generic rational points of the
// hypersimplex (fixed denominator 97*n!, rejecting points on any hyperplane
// sum_{i in A} x_i = integer) plus the exact signed lattice-point multiset
// test at r = 1,2,3. False is a finding, not an error.
bool indicator_residual(const Subdivision& s, int samples, uint64_t seed);

// sum_sigma (prod_{i not in B(sigma)} z_i^{r+1}) / prod_k (z_{sigma(k+1)} - z_{sigma(k)}),
// the non-equivariant rational-function class evaluated exactly at a point
// with pairwise distinct coordinates. Equals the lattice-point transform
// sum_e prod z_i^{r-e_i}.
Rat brion_eval(const Matroid& m, int r, const std::vector<Rat>& z);

std::vector<std::vector<int>> all_permutations(int n);  // 1-indexed, lexicographic

}  // namespace orbitcalc
