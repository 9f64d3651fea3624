#pragma once

#include "orbitcalc/quantum.hpp"

#include <vector>

namespace orbitcalc {

// Canonical representative of an equivariant class on n points: a polynomial
// in H_1..H_n of degree <= r per variable with coefficients in the context's
// coefficient ring. The underlying MPoly has arity ctx.arity() + n, the
// coefficient variables first, then H_1..H_n.
struct ChowClass {
    QuantumContext ctx;
    int n = 0;
    MPoly poly;

    static ChowClass zero(const QuantumContext& ctx, int n) {
        return {ctx, n, MPoly(ctx.arity() + n)};
    }

    int hvar(int i) const { return ctx.arity() + i; }  // 0-indexed H_{i+1} slot
    std::vector<std::string> var_names() const;

    bool operator==(const ChowClass& o) const {
        return ctx == o.ctx && n == o.n && poly == o.poly;
    }
    bool operator!=(const ChowClass& o) const { return !(*this == o); }

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const ChowClass& o) const;  // not reduced

    // Specialize every coefficient variable to 0 (context becomes
    // non-equivariant with the same r).
    ChowClass specialize_czero() const;
};

// Reduce modulo F(H_i) independently in each variable; idempotent.
ChowClass reduce_class(const ChowClass& c);
MPoly reduce_in_var(const MPoly& p, const UniPoly& F_embedded, int var);

// Kronecker pairing of a class against monomial input H^a:
// integral over (P^r)^n of c * prod H_i^{a_i}, computed coefficientwise from
// the one-variable pairing g_{ab} = [z^r] (z^{a+b} mod F).
MPoly pair_with_monomial(const ChowClass& c, const std::vector<int>& a);

}  // namespace orbitcalc
