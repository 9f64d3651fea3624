#include "orbitcalc/matroid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace orbitcalc {

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> mask_to_elems(Mask m) {
    std::vector<int> v;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) v.push_back(i + 1);
    return v;
}

Mask elems_to_mask(const std::vector<int>& v, int n) {
    Mask m = 0;
    for (int e : v) {
        if (e < 1 || e > n) throw UsageError("ground-set element out of range: " + std::to_string(e));
        m |= Mask(1) << (e - 1);
    }
    return m;
}

Matroid::Matroid(int n, int d, std::vector<Mask> bases) : n_(n), d_(d), bases_(std::move(bases)) {
    if (n < 1 || n > 16) throw UsageError("matroid ground-set size out of supported range");
    if (d < 0 || d > n) throw UsageError("matroid rank out of range");
    if (bases_.empty()) throw UsageError("matroid must have at least one basis");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    for (Mask b : bases_) {
        if (b >= (Mask(1) << n)) throw UsageError("basis outside ground set");
        if (popcount(b) != d) throw UsageError("basis of wrong size");
    }

    if (n <= 8) {
        // Basis exchange, exhaustively: for all B1,B2 and x in B1\B2 there is
        // y in B2\B1 with B1-x+y a basis.
        for (Mask b1 : bases_)
            for (Mask b2 : bases_) {
                Mask only1 = b1 & ~b2;
                for (Mask x = only1; x;) {
                    Mask xb = x & (Mask(0) - x);
                    x ^= xb;
                    bool ok = false;
                    for (Mask y = b2 & ~b1; y && !ok;) {
                        Mask yb = y & (Mask(0) - y);
                        y ^= yb;
                        ok = std::binary_search(bases_.begin(), bases_.end(), (b1 ^ xb) | yb);
                    }
                    if (!ok) throw UsageError("basis-exchange axiom fails");
                }
            }
    }

    // rank(A) = max over bases of |A ∩ B|: A∩B is independent, and any
    // maximal independent subset of A extends to a basis.
    rank_tab_.assign(size_t(1) << n, 0);
    for (Mask a = 0; a < (Mask(1) << n); ++a) {
        int best = 0;
        for (Mask b : bases_) best = std::max(best, popcount(a & b));
        rank_tab_[a] = static_cast<uint8_t>(best);
    }
}

bool Matroid::is_basis(Mask m) const { return std::binary_search(bases_.begin(), bases_.end(), m); }

int Matroid::rank(Mask subset) const {
    if (subset >= (Mask(1) << n_)) throw UsageError("rank: subset outside ground set");
    return rank_tab_[subset];
}

int Matroid::rank_elems(const std::vector<int>& elems) const { return rank(elems_to_mask(elems, n_)); }

bool Matroid::is_connected() const {
    Mask full = (Mask(1) << n_) - 1;
    if (rank(full) != d_) return false;
    for (Mask a = 1; a < full; ++a)
        if (rank(a) + rank(full & ~a) == d_) return false;
    return true;
}

Mask Matroid::gale_first_basis(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n_) throw UsageError("gale_first_basis: permutation size mismatch");
    Mask cur = 0;
    for (int e : sigma) {
        Mask bit = Mask(1) << (e - 1);
        if (rank(cur | bit) > rank(cur)) cur |= bit;
    }
    return cur;
}

Matroid Matroid::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw UsageError("permuted: permutation size mismatch");
    std::vector<Mask> nb;
    nb.reserve(bases_.size());
    for (Mask b : bases_) {
        Mask m = 0;
        for (int i = 1; i <= n_; ++i)
            if (b & (Mask(1) << (i - 1))) m |= Mask(1) << (perm[static_cast<size_t>(i - 1)] - 1);
        nb.push_back(m);
    }
    return Matroid(n_, d_, std::move(nb));
}

std::string Matroid::key() const {
    std::ostringstream out;
    out << n_ << ":" << d_ << ":";
    for (Mask b : bases_) out << b << ",";
    return out.str();
}

Matroid uniform_matroid(int d, int n) {
    if (d < 1 || d > n) throw UsageError("uniform_matroid: need 1 <= d <= n");
    std::vector<Mask> bases;
    for (Mask m = 0; m < (Mask(1) << n); ++m)
        if (popcount(m) == d) bases.push_back(m);
    return Matroid(n, d, std::move(bases));
}

Matroid truncate(const Matroid& m, int k) {
    if (k <= 0) throw UsageError("truncate: k must be positive");
    if (k >= m.d()) return m;
    std::vector<Mask> bases;
    for (Mask s = 0; s < (Mask(1) << m.n()); ++s)
        if (popcount(s) == k && m.rank(s) == k) bases.push_back(s);
    return Matroid(m.n(), k, std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    std::vector<Mask> bases;
    bases.reserve(a.bases().size() * b.bases().size());
    for (Mask x : a.bases())
        for (Mask y : b.bases()) bases.push_back(x | (y << a.n()));
    return Matroid(a.n() + b.n(), a.d() + b.d(), std::move(bases));
}

std::vector<Mask> schubert_bases(const std::vector<int>& ranks, const std::vector<Mask>& chain, int n) {
    size_t l = ranks.size();
    if (l == 0 || chain.size() != l) throw UsageError("schubert: ranks/chain length mismatch");
    Mask full = (Mask(1) << n) - 1;
    if (chain.back() != full) throw UsageError("schubert: chain must end at the full ground set");
    for (size_t i = 0; i < l; ++i) {
        if (chain[i] == 0) throw UsageError("schubert: chain members must be nonempty");
        if (i > 0 && ((chain[i - 1] & ~chain[i]) != 0 || chain[i - 1] == chain[i]))
            throw UsageError("schubert: chain must be strictly nested");
        if (ranks[i] < 0 || (i > 0 && ranks[i] < ranks[i - 1]))
            throw UsageError("schubert: ranks must be nondecreasing");
    }
    int d = ranks.back();
    std::vector<Mask> bases;
    for (Mask s = 0; s <= full; ++s) {
        if (popcount(s) != d) continue;
        bool ok = true;
        for (size_t i = 0; i < l && ok; ++i)
            if (popcount(s & chain[i]) > ranks[i]) ok = false;
        if (ok) bases.push_back(s);
    }
    if (bases.empty()) throw UsageError("schubert: empty basis set (infeasible ranks)");
    return bases;
}

std::vector<Mask> partition_bases(const std::vector<Mask>& blocks, int n) {
    if (blocks.size() < 2) throw UsageError("partition: need at least two blocks");
    Mask seen = 0;
    for (Mask b : blocks) {
        if (b == 0) throw UsageError("partition: empty block");
        if (seen & b) throw UsageError("partition: blocks must be disjoint");
        seen |= b;
    }
    if (seen != (Mask(1) << n) - 1) throw UsageError("partition: blocks must cover the ground set");
    std::vector<Mask> bases;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Mask p = (Mask(1) << (i - 1)) | (Mask(1) << (j - 1));
            bool same = false;
            for (Mask b : blocks)
                if ((p & b) == p) same = true;
            if (!same) bases.push_back(p);
        }
    return bases;
}

}  // namespace orbitcalc
