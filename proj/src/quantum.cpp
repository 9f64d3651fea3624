#include "orbitcalc/quantum.hpp"

#include <algorithm>

namespace orbitcalc {

void up_trim(UniPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int up_degree(const UniPoly& f) { return static_cast<int>(f.size()) - 1; }

bool up_is_zero(const UniPoly& f) { return f.empty(); }

UniPoly up_zero() { return {}; }

UniPoly up_constant(int nvars, const Rat& c) {
    if (c == 0) return {};
    return {MPoly(nvars, c)};
}

UniPoly up_monomial(int nvars, int zdeg, const Rat& c) {
    if (c == 0) return {};
    UniPoly f(static_cast<size_t>(zdeg) + 1, MPoly(nvars));
    f.back() = MPoly(nvars, c);
    return f;
}

UniPoly up_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), MPoly(b.empty() ? 0 : b[0].nvars()));
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    up_trim(r);
    return r;
}

UniPoly up_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), MPoly(b.empty() ? 0 : b[0].nvars()));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    up_trim(r);
    return r;
}

UniPoly up_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    int nv = a[0].nvars();
    UniPoly r(a.size() + b.size() - 1, MPoly(nv));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    up_trim(r);
    return r;
}

UniPoly up_scale(const UniPoly& a, const MPoly& c) {
    if (c.is_zero()) return {};
    UniPoly r = a;
    for (auto& p : r) p = p * c;
    up_trim(r);
    return r;
}

bool up_equal(const UniPoly& a, const UniPoly& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

void up_divmod(const UniPoly& f, const UniPoly& monic, UniPoly& quot, UniPoly& rem) {
    if (monic.empty()) throw InternalError("up_divmod: zero divisor");
    int dd = up_degree(monic);
    if (!(monic.back().is_constant() && monic.back().coeff(Mono(monic.back().nvars())) == 1))
        throw InternalError("up_divmod: divisor not monic");
    rem = f;
    int nv = monic[0].nvars();
    int qd = up_degree(f) - dd;
    quot.assign(qd >= 0 ? static_cast<size_t>(qd) + 1 : 0, MPoly(nv));
    while (up_degree(rem) >= dd) {
        int k = up_degree(rem) - dd;
        MPoly lead = rem.back();
        quot[static_cast<size_t>(k)] += lead;
        // rem -= lead * z^k * monic
        for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(k + i)] -= lead * monic[static_cast<size_t>(i)];
        up_trim(rem);
    }
    up_trim(quot);
}

QuantumContext QuantumContext::equivariant(int r) {
    QuantumContext ctx;
    ctx.r = r;
    for (int i = 1; i <= r + 1; ++i) ctx.coeff_vars.push_back("c" + std::to_string(i));
    int nv = r + 1;
    ctx.F.assign(static_cast<size_t>(r) + 2, MPoly(nv));
    ctx.F[static_cast<size_t>(r) + 1] = MPoly(nv, Rat(1));
    for (int i = 1; i <= r + 1; ++i) ctx.F[static_cast<size_t>(r + 1 - i)] = MPoly::variable(nv, i - 1);
    return ctx;
}

QuantumContext QuantumContext::nonequivariant(int r) {
    QuantumContext ctx;
    ctx.r = r;
    ctx.F.assign(static_cast<size_t>(r) + 2, MPoly(0));
    ctx.F[static_cast<size_t>(r) + 1] = MPoly(0, Rat(1));
    return ctx;
}

QuantumContext QuantumContext::split_roots() {
    QuantumContext ctx;
    ctx.r = 1;
    ctx.coeff_vars = {"u", "v"};
    MPoly u = MPoly::variable(2, 0), v = MPoly::variable(2, 1);
    ctx.F = {u * v, u + v, MPoly(2, Rat(1))};  // (z+u)(z+v)
    return ctx;
}

UniPoly QuantumContext::embedded_F(int new_nvars, const std::vector<int>& slot) const {
    UniPoly f;
    f.reserve(F.size());
    for (const auto& c : F) f.push_back(c.remap(new_nvars, slot));
    return f;
}

void QuantumContext::require_same(const QuantumContext& o) const {
    if (*this != o) throw InternalError("quantum context mismatch");
}

bool QuantumElement::is_zero() const {
    for (const auto& l : levels)
        if (!up_is_zero(l)) return false;
    return true;
}

void QuantumElement::trim() {
    while (!levels.empty() && up_is_zero(levels.back())) levels.pop_back();
}

int QuantumElement::hbar_degree() const {
    for (int k = static_cast<int>(levels.size()) - 1; k >= 0; --k)
        if (!up_is_zero(levels[static_cast<size_t>(k)])) return k;
    return -1;
}

UniPoly QuantumElement::coeff_hbar(int k) const {
    if (k < 0 || k >= static_cast<int>(levels.size())) return {};
    return levels[static_cast<size_t>(k)];
}

MPoly QuantumElement::coeff_z_hbar(int j, int k) const {
    UniPoly a = coeff_hbar(k);
    if (j < 0 || j > up_degree(a)) return MPoly(ctx.arity());
    return a[static_cast<size_t>(j)];
}

bool QuantumElement::operator==(const QuantumElement& o) const {
    if (ctx != o.ctx) return false;
    size_t n = std::max(levels.size(), o.levels.size());
    for (size_t k = 0; k < n; ++k) {
        UniPoly a = k < levels.size() ? levels[k] : UniPoly{};
        UniPoly b = k < o.levels.size() ? o.levels[k] : UniPoly{};
        if (!up_equal(a, b)) return false;
    }
    return true;
}

UniPoly reduce_mod_F(const UniPoly& f, const QuantumContext& ctx) {
    if (up_degree(f) <= ctx.r) {
        UniPoly r = f;
        up_trim(r);
        return r;
    }
    UniPoly q, rem;
    up_divmod(f, ctx.F, q, rem);
    // One division step leaves degree <= r already since deg F = r+1.
    return rem;
}

QuantumElement f_adic_expand(const UniPoly& f, const QuantumContext& ctx) {
    QuantumElement out;
    out.ctx = ctx;
    UniPoly cur = f;
    up_trim(cur);
    while (!up_is_zero(cur)) {
        UniPoly q, rem;
        up_divmod(cur, ctx.F, q, rem);
        out.levels.push_back(rem);
        cur = q;
    }
    return out;
}

UniPoly lift(const QuantumElement& q) {
    UniPoly acc;
    // Horner from the top level down: acc = acc*F + a_k.
    for (int k = static_cast<int>(q.levels.size()) - 1; k >= 0; --k) {
        acc = up_mul(acc, q.ctx.F);
        acc = up_add(acc, q.levels[static_cast<size_t>(k)]);
    }
    return acc;
}

namespace {

// Push every over-degree part of level k into level k+1 (division by the
// monic F); afterwards each level has degree <= r.
void carry_normalize(QuantumElement& q) {
    for (size_t k = 0; k < q.levels.size(); ++k) {
        if (up_degree(q.levels[k]) <= q.ctx.r) continue;
        UniPoly quot, rem;
        up_divmod(q.levels[k], q.ctx.F, quot, rem);
        q.levels[k] = rem;
        if (!up_is_zero(quot)) {
            if (k + 1 >= q.levels.size()) q.levels.resize(k + 2);
            q.levels[k + 1] = up_add(q.levels[k + 1], quot);
        }
    }
    q.trim();
}

}  // namespace

QuantumElement star(const QuantumElement& a, const QuantumElement& b) {
    a.ctx.require_same(b.ctx);
    QuantumElement out;
    out.ctx = a.ctx;
    if (a.is_zero() || b.is_zero()) return out;
    out.levels.resize(a.levels.size() + b.levels.size() - 1);
    for (size_t i = 0; i < a.levels.size(); ++i) {
        if (up_is_zero(a.levels[i])) continue;
        for (size_t j = 0; j < b.levels.size(); ++j)
            out.levels[i + j] = up_add(out.levels[i + j], up_mul(a.levels[i], b.levels[j]));
    }
    carry_normalize(out);
    return out;
}

QuantumElement star_via_lift(const QuantumElement& a, const QuantumElement& b) {
    a.ctx.require_same(b.ctx);
    return f_adic_expand(up_mul(lift(a), lift(b)), a.ctx);
}

QuantumElement qe_add(const QuantumElement& a, const QuantumElement& b) {
    a.ctx.require_same(b.ctx);
    QuantumElement out;
    out.ctx = a.ctx;
    out.levels.resize(std::max(a.levels.size(), b.levels.size()));
    for (size_t k = 0; k < out.levels.size(); ++k) {
        if (k < a.levels.size()) out.levels[k] = up_add(out.levels[k], a.levels[k]);
        if (k < b.levels.size()) out.levels[k] = up_add(out.levels[k], b.levels[k]);
    }
    out.trim();
    return out;
}

QuantumElement qe_neg(const QuantumElement& a) {
    QuantumElement out = a;
    for (auto& l : out.levels)
        for (auto& c : l) c = -c;
    return out;
}

QuantumElement qe_sub(const QuantumElement& a, const QuantumElement& b) { return qe_add(a, qe_neg(b)); }

QuantumElement qe_zero(const QuantumContext& ctx) { return {ctx, {}}; }

QuantumElement qe_one(const QuantumContext& ctx) { return {ctx, {up_constant(ctx.arity(), Rat(1))}}; }

QuantumElement truncate_hbar(const QuantumElement& q, int k) {
    QuantumElement out = q;
    if (static_cast<int>(out.levels.size()) > k) out.levels.resize(static_cast<size_t>(std::max(k, 0)));
    out.trim();
    return out;
}

MPoly integrate_point(const UniPoly& f, const QuantumContext& ctx) {
    UniPoly rem = reduce_mod_F(f, ctx);
    if (up_degree(rem) < ctx.r) return MPoly(ctx.arity());
    return rem[static_cast<size_t>(ctx.r)];
}

UniPoly specialize_czero(const UniPoly& f, const QuantumContext& ctx) {
    std::vector<int> drop(static_cast<size_t>(ctx.arity()), -1);
    UniPoly out;
    out.reserve(f.size());
    for (const auto& c : f) {
        MPoly keep = c;
        for (int v = 0; v < ctx.arity(); ++v) keep = keep.at_zero(v);
        out.push_back(keep.remap(0, drop));
    }
    up_trim(out);
    return out;
}

}  // namespace orbitcalc
