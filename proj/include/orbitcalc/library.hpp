#pragma once

#include "orbitcalc/matroid.hpp"
#include "orbitcalc/qmatrix.hpp"

#include <string>
#include <vector>

namespace orbitcalc {

struct LibraryEntry {
    std::string name;
    Matroid matroid;
};

// The standing test library: uniforms, Schubert matroids, partition
// matroids, series-parallel builds and a couple of disconnected sums.
// Deterministic for a fixed seed.
std::vector<LibraryEntry> matroid_library(uint64_t seed);

// Six points in the plane: the vertices and edge midpoints of a triangle,
// plus the degeneration chain obtained by breaking collinearities or merging
// points. All five matrices realize the configurations exactly.
struct PlaneSixPoints {
    QMatrix A;  // three collinear triples {1,2,4},{1,3,6},{4,5,6}; 17 bases
    QMatrix B;  // {1,2,4} broken; 18 bases
    QMatrix C;  // points 3,5,6 merged; 10 bases
    QMatrix D;  // only {4,5,6} collinear; 19 bases
    QMatrix E;  // points 2,4,5 merged; 10 bases
};

PlaneSixPoints plane_six_points();

}  // namespace orbitcalc
