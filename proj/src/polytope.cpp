#include "orbitcalc/polytope.hpp"

#include "orbitcalc/prng.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace orbitcalc {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

bool admissible(const Matroid& m, int r, const std::vector<int>& e, LatticeMode mode) {
    int n = m.n();
    Mask full = (Mask(1) << n) - 1;
    std::vector<long> sum(size_t(1) << n, 0);
    for (Mask a = 1; a <= full; ++a) {
        Mask low = a & (Mask(0) - a);
        int i = popcount(low - 1);
        sum[a] = sum[a ^ low] + e[static_cast<size_t>(i)];
        if (sum[a] > static_cast<long>(r + 1) * m.rank(a) - 1) return false;
    }
    if (mode == LatticeMode::Rank && sum[full] != static_cast<long>(r + 1) * m.d() - 1) return false;
    return true;
}

void enumerate(const Matroid& m, int r, LatticeMode mode, std::vector<int>& e, int pos, long total,
               std::vector<std::vector<int>>& out) {
    int n = m.n();
    if (pos == n) {
        if (admissible(m, r, e, mode)) out.push_back(e);
        return;
    }
    long target = static_cast<long>(r + 1) * m.d() - 1;
    for (int v = 0; v <= r; ++v) {
        e[static_cast<size_t>(pos)] = v;
        long t = total + v;
        if (mode == LatticeMode::Rank) {
            long rest = static_cast<long>(n - pos - 1) * r;
            if (t > target || t + rest < target) continue;
        }
        enumerate(m, r, mode, e, pos + 1, t, out);
    }
    e[static_cast<size_t>(pos)] = 0;
}

}  // namespace

std::vector<std::vector<int>> lattice_points(const Matroid& m, int r, LatticeMode mode) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<size_t>(m.n()), 0);
    enumerate(m, r, mode, e, 0, 0, out);
    return out;  // recursion order is lexicographic already
}

int affine_dim(const std::vector<Mask>& bases, int n) {
    if (bases.empty()) return -1;
    // Rank over Q of {e_B - e_B0}; entries are in {-1,0,1}, exact elimination.
    std::vector<std::vector<Rat>> rows;
    for (size_t k = 1; k < bases.size(); ++k) {
        std::vector<Rat> row(static_cast<size_t>(n), Rat(0));
        for (int i = 0; i < n; ++i) {
            int a = (bases[k] >> i) & 1, b = (bases[0] >> i) & 1;
            row[static_cast<size_t>(i)] = Rat(a - b);
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(rank)]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            Rat f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] / rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (int c = col; c < n; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<Mask> tight_bases(const Matroid& m, Mask a) {
    int rk = m.rank(a);
    std::vector<Mask> tight;
    for (Mask b : m.bases())
        if (popcount(b & a) == rk) tight.push_back(b);
    return tight;
}

bool is_facet(const Matroid& m, Mask a) {
    return affine_dim(tight_bases(m, a), m.n()) == m.n() - 2;
}

}  // namespace

std::vector<Mask> flacets(const Matroid& m) {
    if (!m.is_connected()) throw UsageError("flacets: matroid must be connected");
    std::vector<Mask> out;
    Mask full = (Mask(1) << m.n()) - 1;
    for (Mask a = 1; a < full; ++a)
        if (is_facet(m, a)) out.push_back(a);
    return out;
}

ShadowSubdivision shadow_facet_subdivision(const Matroid& m, int i, int j) {
    int n = m.n();
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw UsageError("shadow_facet_subdivision: need distinct indices in 1..n");
    Mask bi = Mask(1) << (i - 1), bj = Mask(1) << (j - 1);

    auto exchange_closure = [&](const std::vector<Mask>& in) {
        std::vector<Mask> out = in;
        for (Mask b : in)
            if ((b & bj) && !(b & bi)) out.push_back((b ^ bj) | bi);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    Matroid big(n, m.d(), exchange_closure(m.bases()));

    // Facets are taken relative to the affine span of P_M (for connected M
    // that span is the whole hyperplane and this is the usual facet rule);
    // cells below the dimension of the target polytope are dropped.
    int dim_m = affine_dim(m.bases(), n);
    int dim_big = affine_dim(big.bases(), n);

    ShadowSubdivision result{big, {}};
    std::set<std::string> seen;
    if (dim_m == dim_big) {
        result.cells.push_back(m);
        seen.insert(m.key());
    }
    Mask full = (Mask(1) << n) - 1;
    // Shadow facets in direction e_i - e_j are exactly the facet-defining A
    // with i in A, j not in A (the x_i <= 1 and x_j >= 0 bounds appear as
    // A = {i} and A = ground \ {j}).
    for (Mask a = 1; a < full; ++a) {
        if (!(a & bi) || (a & bj)) continue;
        std::vector<Mask> tight = tight_bases(m, a);
        if (affine_dim(tight, n) != dim_m - 1) continue;
        Matroid cell(n, m.d(), exchange_closure(tight));
        if (affine_dim(cell.bases(), n) != dim_big) continue;  // positive codimension, class 0
        if (seen.insert(cell.key()).second) result.cells.push_back(cell);
    }
    if (result.cells.empty()) result.cells.push_back(m);
    return result;
}

Subdivision Subdivision::with_faces() const {
    // Inclusion-exclusion over the union of the facet cells. Intersections of
    // cells in a genuine subdivision are common faces, whose vertex sets are
    // the common bases.
    std::map<std::string, std::pair<std::vector<Mask>, long>> acc;
    size_t k = cells.size();
    for (Mask s = 1; s < (Mask(1) << k); ++s) {
        std::vector<Mask> inter;
        bool first = true;
        long coef = (popcount(s) % 2 == 1) ? 1 : -1;
        for (size_t c = 0; c < k; ++c) {
            if (!(s & (Mask(1) << c))) continue;
            coef *= cells[c].second;
            if (first) {
                inter = cells[c].first.bases();
                first = false;
            } else {
                std::vector<Mask> tmp;
                std::set_intersection(inter.begin(), inter.end(), cells[c].first.bases().begin(),
                                      cells[c].first.bases().end(), std::back_inserter(tmp));
                inter = std::move(tmp);
            }
        }
        if (inter.empty()) continue;
        std::string key;
        for (Mask b : inter) key += std::to_string(b) + ",";
        auto [it, fresh] = acc.emplace(key, std::make_pair(inter, coef));
        if (!fresh) it->second.second += coef;
    }
    Subdivision out{parent, {}};
    for (auto& [key, entry] : acc) {
        auto& [bases, coef] = entry;
        if (coef == 0) continue;
        Matroid face(parent.n(), parent.d(), bases);
        int sign = coef > 0 ? 1 : -1;
        for (long c = 0; c < (coef > 0 ? coef : -coef); ++c) out.cells.emplace_back(face, sign);
    }
    return out;
}

Subdivision regular_subdivision(const Matroid& m, const std::map<Mask, Rat>& heights) {
    int n = m.n();
    const auto& bases = m.bases();
    size_t nb = bases.size();
    for (Mask b : bases)
        if (!heights.count(b)) throw UsageError("regular_subdivision: height missing for a basis");
    if (nb > 62) throw UsageError("regular_subdivision: too many bases for exhaustive search");

    int D = affine_dim(bases, n);
    Subdivision out{m, {}};
    if (D == 0) {
        out.cells.emplace_back(m, 1);
        return out;
    }

    std::vector<Rat> h(nb);
    for (size_t k = 0; k < nb; ++k) h[k] = heights.at(bases[k]);

    // Fast path: heights that are the restriction of an affine function give
    // the trivial subdivision. Detected by the general search too; skipping
    // the enumeration for constant h just saves time in the common case.
    bool constant = true;
    for (size_t k = 1; k < nb; ++k)
        if (h[k] != h[0]) constant = false;
    if (constant) {
        out.cells.emplace_back(m, 1);
        return out;
    }

    // Enumerate (D+1)-subsets of affinely independent lifted vertices; each
    // spans a candidate supporting affine function L on aff(P_M). L supports
    // the lower hull iff L(e_B) <= h(B) for every basis; its tight set is a
    // cell of the subdivision (a facet when full-dimensional).
    std::set<uint64_t> cell_sets;
    std::vector<size_t> pick(static_cast<size_t>(D) + 1);

    auto process = [&]() {
        // A pick lying inside an already-found tight set re-derives it.
        for (uint64_t t : cell_sets) {
            bool inside = true;
            for (size_t idx : pick)
                if (!(t & (uint64_t(1) << idx))) inside = false;
            if (inside) return;
        }
        // Augmented system: columns 0..D-1 hold e_{B_pick[c+1]} - e_{B_pick[0]},
        // columns D..D+nb-1 hold e_{B_k} - e_{B_pick[0]} for every basis.
        // One elimination answers all nb interpolation queries.
        size_t width = static_cast<size_t>(D) + nb;
        Mask base0 = bases[pick[0]];
        std::vector<std::vector<Rat>> w(static_cast<size_t>(n), std::vector<Rat>(width, Rat(0)));
        for (int r = 0; r < n; ++r) {
            int b0 = (base0 >> r) & 1;
            for (int c = 0; c < D; ++c)
                w[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    Rat(((bases[pick[static_cast<size_t>(c) + 1]] >> r) & 1) - b0);
            for (size_t k = 0; k < nb; ++k)
                w[static_cast<size_t>(r)][static_cast<size_t>(D) + k] = Rat(((bases[k] >> r) & 1) - b0);
        }
        std::vector<int> pivot_row(static_cast<size_t>(D), -1);
        int rank = 0;
        for (int col = 0; col < D; ++col) {
            int p = -1;
            for (int r = rank; r < n; ++r)
                if (w[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return;  // affinely dependent pick
            std::swap(w[static_cast<size_t>(p)], w[static_cast<size_t>(rank)]);
            Rat lead = w[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (auto& x : w[static_cast<size_t>(rank)]) x /= lead;
            for (int r = 0; r < n; ++r) {
                if (r == rank) continue;
                Rat f = w[static_cast<size_t>(r)][static_cast<size_t>(col)];
                if (f == 0) continue;
                for (size_t c2 = static_cast<size_t>(col); c2 < width; ++c2)
                    w[static_cast<size_t>(r)][c2] -= f * w[static_cast<size_t>(rank)][c2];
            }
            pivot_row[static_cast<size_t>(col)] = rank;
            ++rank;
        }

        uint64_t tight = 0;
        for (size_t k = 0; k < nb; ++k) {
            // lambda[c] = RREF row of pivot c at the k-th RHS column.
            Rat val = h[pick[0]];
            for (int c = 0; c < D; ++c)
                val += w[static_cast<size_t>(pivot_row[static_cast<size_t>(c)])][static_cast<size_t>(D) + k] *
                       (h[pick[static_cast<size_t>(c) + 1]] - h[pick[0]]);
            if (val == h[k])
                tight |= uint64_t(1) << k;
            else if (val > h[k])
                return;  // not supporting
        }
        cell_sets.insert(tight);
    };

    // Enumerate combinations.
    std::vector<size_t> idx(static_cast<size_t>(D) + 1);
    for (size_t k = 0; k <= static_cast<size_t>(D); ++k) idx[k] = k;
    if (nb < idx.size()) throw InternalError("regular_subdivision: fewer bases than cell dimension");
    for (;;) {
        pick = idx;
        process();
        // next combination
        int k = D;
        while (k >= 0 && idx[static_cast<size_t>(k)] == nb - static_cast<size_t>(D - k) - 1) --k;
        if (k < 0) break;
        ++idx[static_cast<size_t>(k)];
        for (int j = k + 1; j <= D; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }

    for (uint64_t tight : cell_sets) {
        std::vector<Mask> cell_bases;
        for (size_t k = 0; k < nb; ++k)
            if (tight & (uint64_t(1) << k)) cell_bases.push_back(bases[k]);
        if (affine_dim(cell_bases, n) != D) continue;  // lower face, not a cell
        try {
            out.cells.emplace_back(Matroid(n, m.d(), cell_bases), 1);
        } catch (const UsageError& err) {
            throw InternalError(std::string("regular_subdivision: non-matroidal cell: ") + err.what());
        }
    }
    if (out.cells.empty()) throw InternalError("regular_subdivision: produced no cells");
    return out;
}

namespace {

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

bool indicator_residual(const Subdivision& s, int samples, uint64_t seed) {
    const Matroid& parent = s.parent;
    int n = parent.n(), d = parent.d();
    Mask full = (Mask(1) << n) - 1;
    long Dq = 97 * factorial(n);
    Prng rng(seed);

    std::vector<long> a(static_cast<size_t>(n)), sum(size_t(1) << n);
    int accepted = 0;
    long guard = 0;
    while (accepted < samples) {
        if (++guard > 4000L * samples && accepted == 0)
            throw InternalError("indicator_residual: sampler starved");
        long total = 0;
        for (int i = 0; i + 1 < n; ++i) {
            a[static_cast<size_t>(i)] = static_cast<long>(rng.below(static_cast<uint64_t>(Dq) + 1));
            total += a[static_cast<size_t>(i)];
        }
        long last = static_cast<long>(d) * Dq - total;
        if (last < 0 || last > Dq) continue;
        a[static_cast<size_t>(n - 1)] = last;
        sum[0] = 0;
        bool generic = true;
        for (Mask mset = 1; mset <= full && generic; ++mset) {
            Mask low = mset & (Mask(0) - mset);
            sum[mset] = sum[mset ^ low] + a[static_cast<size_t>(popcount(low - 1))];
            if (mset != full && sum[mset] % Dq == 0) generic = false;
        }
        if (!generic) continue;
        ++accepted;

        auto inside = [&](const Matroid& m) {
            for (Mask mset = 1; mset < full; ++mset)
                if (sum[mset] > static_cast<long>(m.rank(mset)) * Dq) return false;
            return true;
        };
        long lhs = inside(parent) ? 1 : 0;
        long rhs = 0;
        for (const auto& [cell, sign] : s.cells)
            if (inside(cell)) rhs += sign;
        if (lhs != rhs) return false;
    }

    // Exact signed lattice-point multiset test at three scales.
    for (int r = 1; r <= 3; ++r) {
        std::map<std::vector<int>, long> count;
        for (const auto& e : lattice_points(parent, r, LatticeMode::Rank)) count[e] += 1;
        for (const auto& [cell, sign] : s.cells)
            for (const auto& e : lattice_points(cell, r, LatticeMode::Rank)) count[e] -= sign;
        for (const auto& [e, c] : count)
            if (c != 0) return false;
    }
    return true;
}

Rat brion_eval(const Matroid& m, int r, const std::vector<Rat>& z) {
    int n = m.n();
    if (static_cast<int>(z.size()) != n) throw UsageError("brion_eval: need one coordinate per element");
    for (int i = 0; i < n; ++i) {
        if (z[static_cast<size_t>(i)] == 0) throw UsageError("brion_eval: coordinates must be nonzero");
        for (int j = i + 1; j < n; ++j)
            if (z[static_cast<size_t>(i)] == z[static_cast<size_t>(j)])
                throw UsageError("brion_eval: coordinates must be pairwise distinct");
    }
    std::vector<Rat> zpow(static_cast<size_t>(n), Rat(1));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= r; ++k) zpow[static_cast<size_t>(i)] *= z[static_cast<size_t>(i)];
    Rat total(0);
    for (const auto& sigma : all_permutations(n)) {
        Mask basis = m.gale_first_basis(sigma);
        Rat num(1);
        for (int i = 0; i < n; ++i)
            if (!(basis & (Mask(1) << i))) num *= zpow[static_cast<size_t>(i)];
        Rat den(1);
        for (int k = 0; k + 1 < n; ++k)
            den *= z[static_cast<size_t>(sigma[static_cast<size_t>(k) + 1] - 1)] -
                   z[static_cast<size_t>(sigma[static_cast<size_t>(k)] - 1)];
        total += num / den;
    }
    return total;
}

}  // namespace orbitcalc
