#include "orbitcalc/chow.hpp"

namespace orbitcalc {

std::vector<std::string> ChowClass::var_names() const {
    std::vector<std::string> names = ctx.coeff_vars;
    for (int i = 1; i <= n; ++i) names.push_back("H" + std::to_string(i));
    return names;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    ctx.require_same(o.ctx);
    if (n != o.n) throw InternalError("ChowClass: point-count mismatch");
    return {ctx, n, poly + o.poly};
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    ctx.require_same(o.ctx);
    if (n != o.n) throw InternalError("ChowClass: point-count mismatch");
    return {ctx, n, poly - o.poly};
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
    ctx.require_same(o.ctx);
    if (n != o.n) throw InternalError("ChowClass: point-count mismatch");
    return {ctx, n, poly * o.poly};
}

ChowClass ChowClass::specialize_czero() const {
    QuantumContext nctx = QuantumContext::nonequivariant(ctx.r);
    int a = ctx.arity();
    MPoly p = poly;
    for (int v = 0; v < a; ++v) p = p.at_zero(v);
    std::vector<int> slot(static_cast<size_t>(a + n), -1);
    for (int i = 0; i < n; ++i) slot[static_cast<size_t>(a + i)] = i;
    return {nctx, n, p.remap(n, slot)};
}

MPoly reduce_in_var(const MPoly& p, const UniPoly& F_embedded, int var) {
    int r1 = up_degree(F_embedded);  // = r+1
    MPoly out = p;
    for (;;) {
        // Find a term with exponent >= r+1 in `var`; graded-lex order means
        // rbegin-side terms have the big exponents, but any order works.
        const Mono* bad = nullptr;
        Rat coef;
        for (auto it = out.terms().rbegin(); it != out.terms().rend(); ++it)
            if (it->first.exp(var) >= r1) {
                bad = &it->first;
                coef = it->second;
                break;
            }
        if (!bad) break;
        Mono stem = *bad;
        stem.set(var, bad->exp(var) - r1);
        // out -= coef * stem * F(H_var): cancels the offending term exactly.
        for (int k = 0; k <= r1; ++k) {
            if (F_embedded[static_cast<size_t>(k)].is_zero()) continue;
            Mono shift = stem;
            shift.set(var, shift.exp(var) + k);
            out.add_shifted(F_embedded[static_cast<size_t>(k)], shift, -coef);
        }
    }
    return out;
}

ChowClass reduce_class(const ChowClass& c) {
    int a = c.ctx.arity();
    int total = a + c.n;
    std::vector<int> slot(static_cast<size_t>(a));
    for (int v = 0; v < a; ++v) slot[static_cast<size_t>(v)] = v;
    ChowClass out = c;
    for (int i = 0; i < c.n; ++i) {
        UniPoly Fh = c.ctx.embedded_F(total, slot);
        out.poly = reduce_in_var(out.poly, Fh, a + i);
    }
    return out;
}

MPoly pair_with_monomial(const ChowClass& c, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != c.n) throw InternalError("pair_with_monomial: arity mismatch");
    int r = c.ctx.r, ar = c.ctx.arity();
    int amax = 0;
    for (int v : a) amax = std::max(amax, v);
    // g[m] = [z^r] (z^m mod F) for m up to r + max exponent.
    std::vector<MPoly> g;
    UniPoly zm = up_constant(ar, Rat(1));
    for (int m = 0; m <= r + amax + c.poly.total_degree() + 1; ++m) {
        g.push_back(up_degree(zm) < r ? MPoly(ar) : zm[static_cast<size_t>(r)]);
        UniPoly next(zm.size() + 1, MPoly(ar));
        for (size_t k = 0; k < zm.size(); ++k) next[k + 1] = zm[k];
        zm = reduce_mod_F(next, c.ctx);
    }
    MPoly acc(ar);
    for (const auto& [mono, coef] : c.poly.terms()) {
        MPoly prod(ar);
        Mono cpart(ar);
        for (int v = 0; v < ar; ++v) cpart.set(v, mono.exp(v));
        prod.add_term(cpart, coef);
        bool zero = false;
        for (int i = 0; i < c.n && !zero; ++i) {
            const MPoly& gi = g[static_cast<size_t>(mono.exp(ar + i) + a[static_cast<size_t>(i)])];
            if (gi.is_zero())
                zero = true;
            else
                prod = prod * gi;
        }
        if (!zero) acc += prod;
    }
    return acc;
}

}  // namespace orbitcalc
