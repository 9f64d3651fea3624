#include "orbitcalc/qmatrix.hpp"

#include <algorithm>
#include <string>

namespace orbitcalc {

bool QMatrix::column_is_zero(int c) const {
    for (int r = 0; r < rows_; ++r)
        if (at(r, c) != 0) return false;
    return true;
}

QMatrix QMatrix::columns(const std::vector<int>& idx) const {
    QMatrix out(rows_, static_cast<int>(idx.size()));
    for (int r = 0; r < rows_; ++r)
        for (size_t j = 0; j < idx.size(); ++j) out.at(r, static_cast<int>(j)) = at(r, idx[j]);
    return out;
}

int rational_rank(QMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            Rat f = m.at(r, col) / m.at(rank, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

int QMatrix::rank() const { return rational_rank(*this); }

Matroid matroid_from_matrix(const QMatrix& m) {
    int d = m.rows(), n = m.cols();
    int rk = m.rank();
    if (rk < d) throw UsageError("matroid_from_matrix: matrix has rank " + std::to_string(rk) +
                                 " < " + std::to_string(d));
    std::vector<Mask> bases;
    std::vector<int> idx;
    for (Mask s = 0; s < (Mask(1) << n); ++s) {
        if (popcount(s) != d) continue;
        idx.clear();
        for (int c = 0; c < n; ++c)
            if (s & (Mask(1) << c)) idx.push_back(c);
        if (rational_rank(m.columns(idx)) == d) bases.push_back(s);
    }
    return Matroid(n, d, std::move(bases));
}

QMatrix connect_matrices(const QMatrix& m1, const QMatrix& m2, ConnectMode mode) {
    int d1 = m1.rows(), n1 = m1.cols(), d2 = m2.rows(), n2 = m2.cols();
    if (m1.column_is_zero(n1 - 1) || m2.column_is_zero(0))
        throw UsageError("connect_matrices: glued column is zero");

    if (mode == ConnectMode::Series) {
        QMatrix out(d1 + d2, n1 + n2 - 1);
        for (int c = 0; c < n1 - 1; ++c)
            for (int r = 0; r < d1; ++r) out.at(r, c) = m1.at(r, c);
        for (int r = 0; r < d1; ++r) out.at(r, n1 - 1) = m1.at(r, n1 - 1);
        for (int r = 0; r < d2; ++r) out.at(d1 + r, n1 - 1) = m2.at(r, 0);
        for (int c = 1; c < n2; ++c)
            for (int r = 0; r < d2; ++r) out.at(d1 + r, n1 - 1 + c) = m2.at(r, c);
        return out;
    }

    // Parallel: quotient K^{d1+d2} by the line through (x_{1,n1}, -x_{2,1}),
    // realized by eliminating a coordinate where that vector is nonzero.
    std::vector<Rat> u(static_cast<size_t>(d1 + d2), Rat(0));
    for (int r = 0; r < d1; ++r) u[static_cast<size_t>(r)] = m1.at(r, n1 - 1);
    for (int r = 0; r < d2; ++r) u[static_cast<size_t>(d1 + r)] = -m2.at(r, 0);
    int p = -1;
    for (int r = 0; r < d1 + d2; ++r)
        if (u[static_cast<size_t>(r)] != 0) {
            p = r;
            break;
        }
    auto project = [&](const std::vector<Rat>& w, QMatrix& out, int col) {
        Rat f = w[static_cast<size_t>(p)] / u[static_cast<size_t>(p)];
        int rr = 0;
        for (int r = 0; r < d1 + d2; ++r) {
            if (r == p) continue;
            out.at(rr++, col) = w[static_cast<size_t>(r)] - f * u[static_cast<size_t>(r)];
        }
    };
    QMatrix out(d1 + d2 - 1, n1 + n2 - 1);
    std::vector<Rat> w(static_cast<size_t>(d1 + d2));
    for (int c = 0; c < n1; ++c) {
        std::fill(w.begin(), w.end(), Rat(0));
        for (int r = 0; r < d1; ++r) w[static_cast<size_t>(r)] = m1.at(r, c);
        project(w, out, c);
    }
    for (int c = 1; c < n2; ++c) {
        std::fill(w.begin(), w.end(), Rat(0));
        for (int r = 0; r < d2; ++r) w[static_cast<size_t>(d1 + r)] = m2.at(r, c);
        project(w, out, n1 - 1 + c);
    }
    return out;
}

QMatrix realize_with_expected(int d, int n, const std::vector<Mask>& expected,
                              const std::vector<std::vector<bool>>& support, Prng& rng) {
    std::vector<Mask> want = expected;
    std::sort(want.begin(), want.end());
    for (int attempt = 0; attempt < 16; ++attempt) {
        QMatrix m(d, n);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < n; ++c)
                if (support[static_cast<size_t>(r)][static_cast<size_t>(c)])
                    m.at(r, c) = Rat(static_cast<long>(rng.nonzero(1000000)));
        try {
            Matroid got = matroid_from_matrix(m);
            if (got.bases() == want) return m;
        } catch (const UsageError&) {
            // rank-deficient draw; retry
        }
    }
    throw InternalError("certified-generic realization failed after 16 attempts");
}

QMatrix realize_generic(int d, int n, Prng& rng) {
    std::vector<std::vector<bool>> support(static_cast<size_t>(d), std::vector<bool>(static_cast<size_t>(n), true));
    std::vector<Mask> expected;
    for (Mask s = 0; s < (Mask(1) << n); ++s)
        if (popcount(s) == d) expected.push_back(s);
    return realize_with_expected(d, n, expected, support, rng);
}

Matroid schubert_matroid(const std::vector<int>& ranks, const std::vector<std::vector<int>>& chain,
                         int n, Prng& rng) {
    std::vector<Mask> chain_masks;
    chain_masks.reserve(chain.size());
    for (const auto& x : chain) chain_masks.push_back(elems_to_mask(x, n));
    std::vector<Mask> expected = schubert_bases(ranks, chain_masks, n);
    int d = ranks.back();
    // Column j in X_i \ X_{i-1}: first r_i entries general, the rest zero.
    std::vector<std::vector<bool>> support(static_cast<size_t>(d), std::vector<bool>(static_cast<size_t>(n), false));
    for (int c = 0; c < n; ++c) {
        int level = -1;
        for (size_t i = 0; i < chain_masks.size(); ++i)
            if (chain_masks[i] & (Mask(1) << c)) {
                level = static_cast<int>(i);
                break;
            }
        for (int r = 0; r < ranks[static_cast<size_t>(level)]; ++r)
            support[static_cast<size_t>(r)][static_cast<size_t>(c)] = true;
    }
    QMatrix m = realize_with_expected(d, n, expected, support, rng);
    return matroid_from_matrix(m);
}

Matroid partition_matroid(const std::vector<std::vector<int>>& blocks, int n, Prng& rng) {
    std::vector<Mask> block_masks;
    block_masks.reserve(blocks.size());
    for (const auto& b : blocks) block_masks.push_back(elems_to_mask(b, n));
    std::vector<Mask> expected = partition_bases(block_masks, n);
    std::vector<Mask> want = expected;
    std::sort(want.begin(), want.end());
    // Rank-2 realization: one general direction per block, columns are
    // nonzero multiples of their block's direction.
    for (int attempt = 0; attempt < 16; ++attempt) {
        QMatrix m(2, n);
        std::vector<std::pair<long, long>> dirs;
        for (size_t i = 0; i < blocks.size(); ++i)
            dirs.emplace_back(rng.nonzero(1000000), rng.nonzero(1000000));
        for (size_t i = 0; i < blocks.size(); ++i)
            for (int e : blocks[i]) {
                long mult = rng.nonzero(1000);
                m.at(0, e - 1) = Rat(dirs[i].first * mult);
                m.at(1, e - 1) = Rat(dirs[i].second * mult);
            }
        try {
            Matroid got = matroid_from_matrix(m);
            if (got.bases() == want) return got;
        } catch (const UsageError&) {
        }
    }
    throw InternalError("partition_matroid: certified realization failed after 16 attempts");
}

}  // namespace orbitcalc
