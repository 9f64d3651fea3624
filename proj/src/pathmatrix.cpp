#include "orbitcalc/pathmatrix.hpp"

#include "orbitcalc/mpoly.hpp"

#include <algorithm>

namespace orbitcalc {

TPoly tpoly_parse(const std::string& text) {
    MPoly p = parse_poly(text, {"t"});
    TPoly out(static_cast<size_t>(std::max(p.total_degree(), -1)) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) out[static_cast<size_t>(m.exp(0))] = c;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string tpoly_to_string(const TPoly& p) {
    MPoly q(1);
    for (size_t i = 0; i < p.size(); ++i) {
        Mono m(1);
        m.set(0, static_cast<int>(i));
        q.add_term(m, p[i]);
    }
    return q.to_string({"t"});
}

int tpoly_ord(const TPoly& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

namespace {

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void tpoly_add_scaled(TPoly& acc, const TPoly& x, int sign) {
    if (acc.size() < x.size()) acc.resize(x.size(), Rat(0));
    for (size_t i = 0; i < x.size(); ++i) acc[i] += sign > 0 ? x[i] : -x[i];
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
}

}  // namespace

TPoly PathMatrix::det_of_columns(const std::vector<int>& cols0) const {
    int d = rows_;
    if (static_cast<int>(cols0.size()) != d) throw InternalError("det_of_columns: not square");
    std::vector<int> perm(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) perm[static_cast<size_t>(i)] = i;
    TPoly det;
    do {
        int sign = 1;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        TPoly prod{Rat(1)};
        for (int i = 0; i < d && !prod.empty(); ++i)
            prod = tpoly_mul(prod, at(perm[static_cast<size_t>(i)], cols0[static_cast<size_t>(i)]));
        tpoly_add_scaled(det, prod, sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Matroid PathMatrix::generic_matroid() const {
    int d = rows_, n = cols_;
    std::vector<Mask> bases;
    std::vector<int> idx;
    for (Mask s = 0; s < (Mask(1) << n); ++s) {
        if (popcount(s) != d) continue;
        idx.clear();
        for (int c = 0; c < n; ++c)
            if (s & (Mask(1) << c)) idx.push_back(c);
        if (!det_of_columns(idx).empty()) bases.push_back(s);
    }
    if (bases.empty())
        throw UsageError("path matrix has generic rank < " + std::to_string(d));
    return Matroid(n, d, std::move(bases));
}

std::map<Mask, int> path_heights(const PathMatrix& m) {
    Matroid generic = m.generic_matroid();
    std::map<Mask, int> h;
    std::vector<int> idx;
    for (Mask b : generic.bases()) {
        idx.clear();
        for (int c = 0; c < m.cols(); ++c)
            if (b & (Mask(1) << c)) idx.push_back(c);
        h[b] = tpoly_ord(m.det_of_columns(idx));
    }
    return h;
}

}  // namespace orbitcalc
