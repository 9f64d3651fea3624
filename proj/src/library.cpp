#include "orbitcalc/library.hpp"

#include "orbitcalc/prng.hpp"

namespace orbitcalc {

std::vector<LibraryEntry> matroid_library(uint64_t seed) {
    Prng rng(seed);
    std::vector<LibraryEntry> lib;
    auto add = [&](const std::string& name, Matroid m) { lib.push_back({name, std::move(m)}); };

    for (auto [d, n] : std::vector<std::pair<int, int>>{
             {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {2, 5}, {3, 5}, {4, 5}})
        add("U(" + std::to_string(d) + "," + std::to_string(n) + ")", uniform_matroid(d, n));

    auto sch = [&](const std::vector<int>& ranks, const std::vector<std::vector<int>>& chain, int n) {
        std::string name = "Sch(";
        for (int r : ranks) name += std::to_string(r) + ",";
        name += "n=" + std::to_string(n) + ")";
        add(name, schubert_matroid(ranks, chain, n, rng));
    };
    sch({1, 2}, {{1, 2}, {1, 2, 3}}, 3);
    sch({1, 2}, {{1, 2}, {1, 2, 3, 4}}, 4);
    sch({1, 2}, {{1, 2, 3}, {1, 2, 3, 4}}, 4);
    sch({2, 3}, {{1, 2, 3}, {1, 2, 3, 4, 5}}, 5);
    sch({1, 3}, {{1, 2}, {1, 2, 3, 4, 5}}, 5);
    sch({1, 2, 3}, {{1, 2}, {1, 2, 3}, {1, 2, 3, 4, 5}}, 5);

    auto par = [&](const std::vector<std::vector<int>>& blocks, int n) {
        std::string name = "Part(";
        for (const auto& b : blocks) name += std::to_string(b.size()) + "|";
        name += "n=" + std::to_string(n) + ")";
        add(name, partition_matroid(blocks, n, rng));
    };
    par({{1, 2}, {3}}, 3);
    par({{1, 2}, {3, 4}}, 4);
    par({{1, 2, 3}, {4}}, 4);
    par({{1}, {2}, {3, 4, 5}}, 5);
    par({{1, 2}, {3}, {4, 5}}, 5);
    par({{1, 2, 3}, {4, 5}}, 5);

    // Series-parallel builds from certified-generic small matrices.
    QMatrix g12 = realize_generic(1, 2, rng);
    QMatrix g23 = realize_generic(2, 3, rng);
    QMatrix g12b = realize_generic(1, 2, rng);
    QMatrix g23b = realize_generic(2, 3, rng);
    add("S(1x2,1x2)", matroid_from_matrix(connect_matrices(g12, g12b, ConnectMode::Series)));
    add("P(2x3,1x2)", matroid_from_matrix(connect_matrices(g23, g12, ConnectMode::Parallel)));
    add("S(2x3,1x2)", matroid_from_matrix(connect_matrices(g23, g12, ConnectMode::Series)));
    add("P(2x3,2x3)", matroid_from_matrix(connect_matrices(g23, g23b, ConnectMode::Parallel)));
    add("S(1x2,2x3)", matroid_from_matrix(connect_matrices(g12, g23, ConnectMode::Series)));
    add("P(S(1x2,1x2),1x2)",
        matroid_from_matrix(connect_matrices(connect_matrices(g12, g12b, ConnectMode::Series), g12,
                                             ConnectMode::Parallel)));

    // Disconnected sums (classes vanish; exercised by the zero-class checks).
    add("U(1,1)+U(1,1)", direct_sum(Matroid(1, 1, {1}), Matroid(1, 1, {1})));
    add("U(1,2)+U(1,2)", direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2)));

    return lib;
}

namespace {

QMatrix from_points(const std::vector<std::pair<Rat, Rat>>& pts) {
    QMatrix m(3, static_cast<int>(pts.size()));
    for (size_t c = 0; c < pts.size(); ++c) {
        m.at(0, static_cast<int>(c)) = pts[c].first;
        m.at(1, static_cast<int>(c)) = pts[c].second;
        m.at(2, static_cast<int>(c)) = Rat(1);
    }
    return m;
}

}  // namespace

PlaneSixPoints plane_six_points() {
    auto half = Rat(1, 2);
    auto q = [](long a, long b) { return Rat(a, b); };
    PlaneSixPoints p{
        // Triangle (0,0),(2,0),(1,1) with edge midpoints.
        from_points({{Rat(1), Rat(1)}, {half, half}, {q(3, 2), half}, {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}}),
        // Point 2 pushed off the line through 1 and 4.
        from_points({{Rat(5), Rat(3)}, {q(17, 4), q(11, 4)}, {q(11, 2), q(5, 2)}, {Rat(4), Rat(2)}, {Rat(5), Rat(2)}, {Rat(6), Rat(2)}}),
        // Points 3,5,6 merged into one.
        from_points({{Rat(8), Rat(1)}, {q(29, 4), q(3, 4)}, {Rat(9), Rat(0)}, {Rat(7), Rat(0)}, {Rat(9), Rat(0)}, {Rat(9), Rat(0)}}),
        // Only the bottom line {4,5,6} kept.
        from_points({{Rat(8), Rat(5)}, {q(29, 4), q(19, 4)}, {q(35, 4), q(19, 4)}, {Rat(7), Rat(4)}, {Rat(8), Rat(4)}, {Rat(9), Rat(4)}}),
        // Points 2,4,5 merged into one.
        from_points({{Rat(11), Rat(3)}, {Rat(10), Rat(2)}, {q(47, 4), q(11, 4)}, {Rat(10), Rat(2)}, {Rat(10), Rat(2)}, {Rat(12), Rat(2)}}),
    };
    return p;
}

}  // namespace orbitcalc
