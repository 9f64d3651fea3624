#pragma once

#include "orbitcalc/matroid.hpp"
#include "orbitcalc/mpoly.hpp"
#include "orbitcalc/orbit.hpp"

#include <optional>
#include <vector>

namespace orbitcalc {

// Classes on the Grassmannian of lines: polynomials in the Chern roots u, v
// of the dual tautological bundle (arity-2 MPoly, symmetric when an actual
// class).

// d(d-1)(d-2) * prod_{k=2}^{d-2} (k u + (d-k) v), expanded; requires d >= 4.
MPoly line_section_class_closed_form(int d);

// Difference of the u^{r-1}v^{r-1} and u^{r-2}v^r coefficients; requires a
// symmetric homogeneous input of degree 2r-2.
Int grassmannian_degree(const MPoly& p, int r);

// The fiber-class pipeline: work over P^1 with split roots F = (z+u)(z+v),
// expand the section class L(sum H_i) through the {-u,-v}^d interpolation,
// push each of the 2^d product terms through the matroid operator, and
// extract [z^1][F^1]. `expr` may supply a structured route for the same
// matroid; the default is the chain-sum evaluation of `m`.
MPoly line_section_class_via_pipeline(int d, const Matroid& m, const ExprPtr& expr = nullptr);

struct TriIncidentRow {
    int i = 0;
    std::vector<int> multiplicities;  // sorted descending, shape (a, b, 1)
    Int degree;                       // pipeline degree for this partition
    bool two_to_one = false;          // multiplication map generically 2:1
    Int line_count;                   // degree, halved where two_to_one
};

struct TriIncidentReport {
    int d = 0;
    int r = 0;
    std::vector<TriIncidentRow> rows;
    Int total;  // equals the uniform-matroid degree
};

// Degrees of the partition-matroid pipelines {1..i} | {i+1} | {i+2..d} for
// i = 1..d-2; their sum must equal the uniform degree. Requires d = 2r+1.
TriIncidentReport tri_incident_report(int d, int r, uint64_t seed);

}  // namespace orbitcalc
