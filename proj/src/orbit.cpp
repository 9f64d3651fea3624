#include "orbitcalc/orbit.hpp"

#include "orbitcalc/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbitcalc {

int MatroidExpr::width() const {
    switch (kind) {
        case Kind::Star: return 1;
        case Kind::Leaf: return leaf.n();
        case Kind::Sum: {
            int w = 0;
            for (const auto& s : summands) w += s->width();
            return w;
        }
        case Kind::Truncate: return child->width();
        case Kind::Permute: return child->width();
    }
    return 0;
}

Matroid MatroidExpr::eval() const {
    switch (kind) {
        case Kind::Star: return Matroid(1, 1, {1});
        case Kind::Leaf: return leaf;
        case Kind::Sum: {
            Matroid acc = summands.at(0)->eval();
            for (size_t i = 1; i < summands.size(); ++i) acc = direct_sum(acc, summands[i]->eval());
            return acc;
        }
        case Kind::Truncate: return orbitcalc::truncate(child->eval(), trunc_k);
        case Kind::Permute: return child->eval().permuted(perm);
    }
    throw InternalError("MatroidExpr::eval: bad kind");
}

ExprPtr MatroidExpr::star_point() {
    auto e = std::make_shared<MatroidExpr>();
    e->kind = Kind::Star;
    return e;
}

ExprPtr MatroidExpr::matroid(Matroid m) {
    auto e = std::make_shared<MatroidExpr>();
    e->kind = Kind::Leaf;
    e->leaf = std::move(m);
    return e;
}

ExprPtr MatroidExpr::sum(std::vector<ExprPtr> parts) {
    if (parts.empty()) throw UsageError("MatroidExpr::sum: empty");
    auto e = std::make_shared<MatroidExpr>();
    e->kind = Kind::Sum;
    e->summands = std::move(parts);
    return e;
}

ExprPtr MatroidExpr::truncate(int k, ExprPtr inner) {
    if (k <= 0) throw UsageError("MatroidExpr::truncate: k must be positive");
    auto e = std::make_shared<MatroidExpr>();
    e->kind = Kind::Truncate;
    e->trunc_k = k;
    e->child = std::move(inner);
    return e;
}

ExprPtr MatroidExpr::permute(std::vector<int> p, ExprPtr inner) {
    auto e = std::make_shared<MatroidExpr>();
    e->kind = Kind::Permute;
    e->perm = std::move(p);
    e->child = std::move(inner);
    return e;
}

ExprPtr uniform_expr(int d, int n) {
    std::vector<ExprPtr> stars;
    for (int i = 0; i < n; ++i) stars.push_back(MatroidExpr::star_point());
    ExprPtr s = MatroidExpr::sum(std::move(stars));
    return d < n ? MatroidExpr::truncate(d, s) : s;
}

ExprPtr schubert_expr(const std::vector<int>& ranks, const std::vector<std::vector<int>>& chain, int n) {
    // tau^{<= r_l}( ... tau^{<= r_1}(* + ... + *) + * ... + * ), stars of the
    // i-th block carrying the indices in X_i \ X_{i-1}.
    std::vector<int> order;  // element at in-order leaf position j
    ExprPtr acc;
    Mask prev = 0;
    for (size_t i = 0; i < ranks.size(); ++i) {
        Mask xi = elems_to_mask(chain[i], n);
        std::vector<ExprPtr> parts;
        if (acc) parts.push_back(acc);
        for (int e : mask_to_elems(xi & ~prev)) {
            parts.push_back(MatroidExpr::star_point());
            order.push_back(e);
        }
        acc = parts.size() == 1 ? parts[0] : MatroidExpr::sum(std::move(parts));
        if (ranks[i] < popcount(xi)) acc = MatroidExpr::truncate(ranks[i], acc);
        prev = xi;
    }
    return MatroidExpr::permute(order, acc);
}

ExprPtr partition_expr(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<int> order;
    std::vector<ExprPtr> parts;
    Mask covered = 0;
    for (const auto& blk : blocks) covered |= elems_to_mask(blk, n);
    if (covered != (Mask(1) << n) - 1) throw UsageError("partition_expr: blocks must cover 1..n");
    for (const auto& blk : blocks) {
        std::vector<ExprPtr> stars;
        for (int e : blk) {
            stars.push_back(MatroidExpr::star_point());
            order.push_back(e);
        }
        ExprPtr b = stars.size() == 1 ? stars[0] : MatroidExpr::sum(std::move(stars));
        if (blk.size() > 1) b = MatroidExpr::truncate(1, b);
        parts.push_back(b);
    }
    ExprPtr s = MatroidExpr::sum(std::move(parts));
    if (static_cast<int>(blocks.size()) > 2) s = MatroidExpr::truncate(2, s);
    return MatroidExpr::permute(order, s);
}

namespace {

std::string up_fingerprint(const UniPoly& f) {
    std::ostringstream out;
    out << f.size() << ";";
    for (const auto& c : f) {
        for (const auto& [m, v] : c.terms()) {
            for (int i = 0; i < c.nvars(); ++i) out << m.exp(i) << ".";
            out << v.get_str() << ",";
        }
        out << "|";
    }
    return out.str();
}

}  // namespace

QuantumElement qe_scale(const QuantumElement& q, const MPoly& c) {
    QuantumElement out = q;
    for (auto& l : out.levels) l = up_scale(l, c);
    out.trim();
    return out;
}

QuantumElement MhbarEvaluator::eval(const Matroid& m, const std::vector<UniPoly>& inputs) {
    if (static_cast<int>(inputs.size()) != m.n())
        throw UsageError("mhbar: arity mismatch (" + std::to_string(inputs.size()) + " inputs for n=" +
                         std::to_string(m.n()) + ")");
    int n = m.n();
    std::vector<UniPoly> reduced(inputs.size());
    for (size_t i = 0; i < inputs.size(); ++i) reduced[i] = reduce_mod_F(inputs[i], ctx_);

    // Canonical relabeling: stable-sort positions by input fingerprint and
    // relabel the matroid to match. The operator commutes with simultaneous
    // column/input permutation (manifest in the chain sum), so symmetric
    // instances collapse to one cache entry.
    std::vector<std::string> fp(reduced.size());
    for (size_t i = 0; i < reduced.size(); ++i) fp[i] = up_fingerprint(reduced[i]);
    std::vector<int> posn(static_cast<size_t>(n));
    std::iota(posn.begin(), posn.end(), 0);
    std::stable_sort(posn.begin(), posn.end(), [&](int a, int b) {
        return fp[static_cast<size_t>(a)] < fp[static_cast<size_t>(b)];
    });
    std::vector<int> relabel(static_cast<size_t>(n));  // old element -> new element
    std::vector<UniPoly> sorted(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        relabel[static_cast<size_t>(posn[static_cast<size_t>(j)])] = j + 1;
        sorted[static_cast<size_t>(j)] = reduced[static_cast<size_t>(posn[static_cast<size_t>(j)])];
    }
    Matroid canon = m.permuted(relabel);
    std::ostringstream keys;
    keys << canon.key() << "#";
    for (int j = 0; j < n; ++j) keys << fp[static_cast<size_t>(posn[static_cast<size_t>(j)])] << "&";
    std::string key = keys.str();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    QuantumElement value = chain_sum(canon, sorted);
    cache_.emplace(std::move(key), value);
    return value;
}

QuantumElement MhbarEvaluator::chain_sum(const Matroid& m, const std::vector<UniPoly>& reduced) {
    int n = m.n();
    Mask full = (Mask(1) << n) - 1;

    // prod[mask] = product of the reduced inputs over mask.
    std::vector<UniPoly> prod(size_t(1) << n);
    prod[0] = up_constant(ctx_.arity(), Rat(1));
    for (Mask mask = 1; mask <= full; ++mask) {
        Mask low = mask & (Mask(0) - mask);
        prod[mask] = up_mul(prod[mask ^ low], reduced[static_cast<size_t>(popcount(low - 1))]);
    }

    // g[mask] = signed sum over flags ending at mask, F-adically truncated at
    // rk(mask) levels at every step; g[0] = 1 with sign convention such that
    // the answer is (-1)^n g[full].
    std::vector<std::vector<UniPoly>> g(size_t(1) << n);
    g[0] = {up_constant(ctx_.arity(), Rat(1))};
    for (Mask mask = 1; mask <= full; ++mask) {
        int rk = m.rank(mask);
        std::vector<UniPoly> acc(static_cast<size_t>(rk));
        for (Mask sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
            const auto& gs = g[sub];
            const UniPoly& p = prod[mask ^ sub];
            size_t top = std::min(gs.size(), static_cast<size_t>(rk));
            for (size_t lvl = 0; lvl < top; ++lvl)
                if (!up_is_zero(gs[lvl])) acc[lvl] = up_add(acc[lvl], up_mul(gs[lvl], p));
            if (sub == 0) break;
        }
        // Carry-normalize to degree <= r per level, truncating at rk levels.
        for (size_t lvl = 0; lvl < acc.size(); ++lvl) {
            if (up_degree(acc[lvl]) <= ctx_.r) continue;
            UniPoly q, rem;
            up_divmod(acc[lvl], ctx_.F, q, rem);
            acc[lvl] = rem;
            if (lvl + 1 < acc.size()) acc[lvl + 1] = up_add(acc[lvl + 1], q);
        }
        for (auto& l : acc)
            for (auto& c : l) c = -c;
        g[mask] = std::move(acc);
    }

    QuantumElement out;
    out.ctx = ctx_;
    out.levels = std::move(g[full]);
    if (n % 2 == 1)
        for (auto& l : out.levels)
            for (auto& c : l) c = -c;
    out.trim();
    return out;
}

namespace {
bool g_expr_crosscheck = false;
}

void set_expr_crosscheck(bool enabled) { g_expr_crosscheck = enabled; }

QuantumElement MhbarEvaluator::eval_expr(const ExprPtr& e, const std::vector<UniPoly>& inputs) {
    if (static_cast<int>(inputs.size()) != e->width()) throw UsageError("mhbar: expression arity mismatch");
    if (g_expr_crosscheck && e->width() <= 6 && e->kind != MatroidExpr::Kind::Star &&
        e->kind != MatroidExpr::Kind::Leaf) {
        g_expr_crosscheck = false;  // avoid re-checking every subtree
        QuantumElement structured = eval_expr(e, inputs);
        g_expr_crosscheck = true;
        if (!(structured == eval(e->eval(), inputs)))
            throw InternalError("mhbar: structured route disagrees with the chain sum");
        return structured;
    }
    switch (e->kind) {
        case MatroidExpr::Kind::Star: {
            QuantumElement q;
            q.ctx = ctx_;
            q.levels = {reduce_mod_F(inputs[0], ctx_)};
            q.trim();
            return q;
        }
        case MatroidExpr::Kind::Leaf:
            return eval(e->leaf, inputs);
        case MatroidExpr::Kind::Sum: {
            QuantumElement acc = qe_one(ctx_);
            size_t pos = 0;
            for (const auto& part : e->summands) {
                size_t w = static_cast<size_t>(part->width());
                std::vector<UniPoly> slice(inputs.begin() + static_cast<long>(pos),
                                           inputs.begin() + static_cast<long>(pos + w));
                acc = star(acc, eval_expr(part, slice));
                pos += w;
            }
            return acc;
        }
        case MatroidExpr::Kind::Truncate:
            return truncate_hbar(eval_expr(e->child, inputs), e->trunc_k);
        case MatroidExpr::Kind::Permute: {
            std::vector<UniPoly> moved(inputs.size());
            for (size_t j = 0; j < inputs.size(); ++j)
                moved[j] = inputs[static_cast<size_t>(e->perm[j] - 1)];
            return eval_expr(e->child, moved);
        }
    }
    throw InternalError("mhbar: bad expression kind");
}

QuantumElement mhbar(const Matroid& m, const std::vector<UniPoly>& inputs, const QuantumContext& ctx) {
    MhbarEvaluator ev(ctx);
    return ev.eval(m, inputs);
}

QuantumElement mhbar(const ExprPtr& e, const std::vector<UniPoly>& inputs, const QuantumContext& ctx) {
    MhbarEvaluator ev(ctx);
    return ev.eval_expr(e, inputs);
}

MPoly kronecker_dual(const Matroid& m, const std::vector<UniPoly>& inputs, const QuantumContext& ctx) {
    MhbarEvaluator ev(ctx);
    return ev.eval(m, inputs).coeff_z_hbar(ctx.r, m.d() - 1);
}

namespace {

// Iterate multi-indices in {0..r}^n, least-significant position first.
bool next_index(std::vector<int>& idx, int r) {
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < r) {
            ++idx[i];
            std::fill(idx.begin(), idx.begin() + static_cast<long>(i), 0);
            return true;
        }
    }
    return false;
}

}  // namespace

ChowClass class_from_duals(const Matroid& m, const QuantumContext& ctx) {
    int n = m.n(), d = m.d(), r = ctx.r, ar = ctx.arity();
    MhbarEvaluator ev(ctx);

    // Dual panel: D_a = [z^r][F^{d-1}] [M](z^{a_1},...,z^{a_n}).
    std::map<std::vector<int>, MPoly> dual;
    std::vector<int> a(static_cast<size_t>(n), 0);
    do {
        std::vector<UniPoly> inputs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) inputs[static_cast<size_t>(i)] = up_monomial(ar, a[static_cast<size_t>(i)]);
        dual.emplace(a, ev.eval(m, inputs).coeff_z_hbar(r, d - 1));
    } while (next_index(a, r));

    // One-variable pairing g[s] = [z^r](z^s mod F); g[s]=0 below the
    // anti-diagonal and 1 on it.
    std::vector<MPoly> g;
    {
        UniPoly zm = up_constant(ar, Rat(1));
        for (int s = 0; s <= 2 * r; ++s) {
            g.push_back(up_degree(zm) < r ? MPoly(ar) : zm[static_cast<size_t>(r)]);
            UniPoly next(zm.size() + 1, MPoly(ar));
            for (size_t k = 0; k < zm.size(); ++k) next[k + 1] = zm[k];
            zm = reduce_mod_F(next, ctx);
        }
    }

    // Back-substitution along anti-diagonals, highest |b| first: the only
    // unknown in D_{r-b} with nonzero pairing against H^{b'} has b' >= b
    // componentwise, and the b' = b factor is exactly 1.
    std::map<std::vector<int>, MPoly> coeffs;
    std::vector<std::vector<int>> order;
    a.assign(static_cast<size_t>(n), 0);
    do order.push_back(a);
    while (next_index(a, r));
    std::sort(order.begin(), order.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
        int sx = std::accumulate(x.begin(), x.end(), 0), sy = std::accumulate(y.begin(), y.end(), 0);
        if (sx != sy) return sx > sy;
        return x < y;
    });
    for (const auto& b : order) {
        std::vector<int> ab(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) ab[static_cast<size_t>(i)] = r - b[static_cast<size_t>(i)];
        MPoly acc = dual.at(ab);
        for (const auto& [bp, cb] : coeffs) {
            bool geq = true, equal = true;
            for (int i = 0; i < n && geq; ++i) {
                if (bp[static_cast<size_t>(i)] < b[static_cast<size_t>(i)]) geq = false;
                if (bp[static_cast<size_t>(i)] != b[static_cast<size_t>(i)]) equal = false;
            }
            if (!geq || equal) continue;
            MPoly w = cb;
            for (int i = 0; i < n && !w.is_zero(); ++i)
                w = w * g[static_cast<size_t>(ab[static_cast<size_t>(i)] + bp[static_cast<size_t>(i)])];
            acc -= w;
        }
        if (!acc.is_zero()) coeffs.emplace(b, std::move(acc));
    }

    ChowClass out = ChowClass::zero(ctx, n);
    std::vector<int> slot(static_cast<size_t>(ar));
    for (int v = 0; v < ar; ++v) slot[static_cast<size_t>(v)] = v;
    for (const auto& [b, cb] : coeffs) {
        MPoly lifted = cb.remap(ar + n, slot);
        Mono hmono(ar + n);
        for (int i = 0; i < n; ++i) hmono.set(ar + i, b[static_cast<size_t>(i)]);
        out.poly.add_shifted(lifted, hmono, Rat(1));
    }
    if (!out.poly.is_integral())
        throw InternalError("class_from_duals: non-integral reconstruction");
    return out;
}

ChowClass class_via_permutation_formula(const Matroid& m, const QuantumContext& ctx) {
    int n = m.n(), r = ctx.r, ar = ctx.arity();
    auto perms = all_permutations(n);

    // Gale-first basis per permutation, grouped by basis.
    std::map<Mask, std::vector<size_t>> by_basis;
    for (size_t p = 0; p < perms.size(); ++p) by_basis[m.gale_first_basis(perms[p])].push_back(p);

    // Disjoint integer node sets: variable i (1-based) takes i(r+1)+1 .. i(r+1)+(r+1).
    auto node = [&](int i0, int k) { return static_cast<long>(i0 + 1) * (r + 1) + 1 + k; };
    std::vector<std::vector<MPoly>> Fv(static_cast<size_t>(n));  // F evaluated at each node
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= r; ++k) {
            MPoly val(ar);
            Rat pw(1);
            for (size_t jd = 0; jd < ctx.F.size(); ++jd) {
                val.add_scaled(ctx.F[jd], pw);
                pw *= Rat(node(i, k));
            }
            Fv[static_cast<size_t>(i)].push_back(val);
        }

    size_t grid = 1;
    for (int i = 0; i < n; ++i) grid *= static_cast<size_t>(r + 1);
    std::vector<MPoly> tensor(grid, MPoly(ar));

    // Grid evaluation is pure per point; each index owns its tensor slot, so
    // the result is identical for any worker count.
    parallel_for(grid, [&](size_t flat) {
        std::vector<int> t(static_cast<size_t>(n));
        size_t rest = flat;
        for (int i = 0; i < n; ++i) {
            t[static_cast<size_t>(i)] = static_cast<int>(rest % static_cast<size_t>(r + 1));
            rest /= static_cast<size_t>(r + 1);
        }
        std::vector<long> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = node(i, t[static_cast<size_t>(i)]);
        // W_B = sum over permutations with Gale basis B of the inverse
        // difference chain; integer denominators, exact rationals.
        MPoly total(ar);
        for (const auto& [basis, plist] : by_basis) {
            Rat w(0);
            for (size_t p : plist) {
                const auto& sg = perms[p];
                long den = 1;
                for (int k = 0; k + 1 < n; ++k)
                    den *= v[static_cast<size_t>(sg[static_cast<size_t>(k + 1)] - 1)] -
                           v[static_cast<size_t>(sg[static_cast<size_t>(k)] - 1)];
                w += make_rat(1, den);
            }
            if (w == 0) continue;
            MPoly fp(ar, w);
            for (int i = 0; i < n; ++i)
                if (!(basis & (Mask(1) << i))) fp = fp * Fv[static_cast<size_t>(i)][static_cast<size_t>(t[static_cast<size_t>(i)])];
            total += fp;
        }
        tensor[flat] = std::move(total);
    });

    // Tensor-product interpolation, one dimension at a time. Dimension i has
    // stride (r+1)^i in the flat index (least-significant-first layout).
    size_t stride = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> nodes;
        for (int k = 0; k <= r; ++k) nodes.emplace_back(node(i, k));
        size_t block = stride * static_cast<size_t>(r + 1);
        for (size_t base = 0; base < grid; base += block)
            for (size_t off = 0; off < stride; ++off) {
                std::vector<MPoly> line;
                for (int k = 0; k <= r; ++k) line.push_back(tensor[base + off + static_cast<size_t>(k) * stride]);
                std::vector<MPoly> co = newton_interpolate(nodes, line);
                for (int k = 0; k <= r; ++k) tensor[base + off + static_cast<size_t>(k) * stride] = co[static_cast<size_t>(k)];
            }
        stride = block;
    }

    ChowClass out = ChowClass::zero(ctx, n);
    std::vector<int> slot(static_cast<size_t>(ar));
    for (int v2 = 0; v2 < ar; ++v2) slot[static_cast<size_t>(v2)] = v2;
    std::vector<int> t(static_cast<size_t>(n), 0);
    size_t flat = 0;
    do {
        if (!tensor[flat].is_zero()) {
            Mono hmono(ar + n);
            for (int i = 0; i < n; ++i) hmono.set(ar + i, t[static_cast<size_t>(i)]);
            out.poly.add_shifted(tensor[flat].remap(ar + n, slot), hmono, Rat(1));
        }
        ++flat;
    } while (next_index(t, r));
    if (!out.poly.is_integral())
        throw InternalError("class_via_permutation_formula: non-integral interpolation output");
    return out;
}

std::vector<MPoly> newton_interpolate(const std::vector<Rat>& nodes, const std::vector<MPoly>& values) {
    size_t n = nodes.size();
    if (values.size() != n || n == 0) throw InternalError("newton_interpolate: size mismatch");
    std::vector<MPoly> dd = values;
    for (size_t k = 1; k < n; ++k)
        for (size_t j = n - 1; j >= k; --j) {
            MPoly diff = dd[j] - dd[j - 1];
            diff.scale(Rat(1) / (nodes[j] - nodes[j - k]));
            dd[j] = std::move(diff);
            if (j == k) break;
        }
    int nv = values[0].nvars();
    std::vector<MPoly> coeffs(n, MPoly(nv));
    coeffs[0] = dd[n - 1];
    int deg = 0;
    for (int j = static_cast<int>(n) - 2; j >= 0; --j) {
        // coeffs <- coeffs*(x - x_j) + dd[j]
        for (int k = deg + 1; k >= 0; --k) {
            MPoly next = k > 0 ? coeffs[static_cast<size_t>(k - 1)] : MPoly(nv);
            if (k <= deg) next -= coeffs[static_cast<size_t>(k)].scaled(nodes[static_cast<size_t>(j)]);
            coeffs[static_cast<size_t>(k)] = std::move(next);
        }
        ++deg;
        coeffs[0] += dd[static_cast<size_t>(j)];
    }
    return coeffs;
}

ChowClass nonequivariant_class(const Matroid& m, int r) {
    QuantumContext ctx = QuantumContext::nonequivariant(r);
    ChowClass out = ChowClass::zero(ctx, m.n());
    for (const auto& e : lattice_points(m, r, LatticeMode::Rank)) {
        Mono mono(m.n());
        for (int i = 0; i < m.n(); ++i) mono.set(i, r - e[static_cast<size_t>(i)]);
        out.poly.add_term(mono, Rat(1));
    }
    return out;
}

DualClass mhbar_dual(const Matroid& m, const QuantumContext& ctx) {
    DualClass out{ctx, m.n(), {}};
    Matroid star1(1, 1, {1});
    for (int k = 0; k < m.d(); ++k)
        out.hbar_parts.push_back(class_from_duals(truncate(direct_sum(m, star1), k + 1), ctx));
    return out;
}

QuantumElement DualClass::apply(const std::vector<int>& a) const {
    if (static_cast<int>(a.size()) != n) throw UsageError("DualClass::apply: arity mismatch");
    int r = ctx.r, ar = ctx.arity();
    // One-variable pairings against each of the first n slots; the last slot
    // stays as a z-power.
    std::vector<MPoly> g;
    {
        UniPoly zm = up_constant(ar, Rat(1));
        for (int s = 0; s <= 2 * r; ++s) {
            g.push_back(up_degree(zm) < r ? MPoly(ar) : zm[static_cast<size_t>(r)]);
            UniPoly next(zm.size() + 1, MPoly(ar));
            for (size_t k = 0; k < zm.size(); ++k) next[k + 1] = zm[k];
            zm = reduce_mod_F(next, ctx);
        }
    }
    QuantumElement out;
    out.ctx = ctx;
    out.levels.resize(hbar_parts.size());
    for (size_t k = 0; k < hbar_parts.size(); ++k) {
        UniPoly level(static_cast<size_t>(r) + 1, MPoly(ar));
        for (const auto& [mono, coef] : hbar_parts[k].poly.terms()) {
            MPoly prod(ar);
            Mono cpart(ar);
            for (int v = 0; v < ar; ++v) cpart.set(v, mono.exp(v));
            prod.add_term(cpart, coef);
            bool zero = false;
            for (int i = 0; i < n && !zero; ++i) {
                const MPoly& gi = g[static_cast<size_t>(mono.exp(ar + i) + a[static_cast<size_t>(i)])];
                if (gi.is_zero())
                    zero = true;
                else
                    prod = prod * gi;
            }
            if (!zero) level[static_cast<size_t>(mono.exp(ar + n))] += prod;
        }
        up_trim(level);
        out.levels[k] = std::move(level);
    }
    out.trim();
    return out;
}

std::vector<std::string> GraphClass::var_names() const {
    std::vector<std::string> names = ctx.coeff_vars;
    for (int i = 1; i <= n; ++i) names.push_back("H" + std::to_string(i));
    names.push_back("H");
    return names;
}

GraphClass graph_closure_class(const Matroid& m, const QuantumContext& ctx) {
    int n = m.n(), d = m.d(), ar = ctx.arity();
    int total = ar + n + 1;
    Matroid star1(1, 1, {1});

    // F(H) as a polynomial in the last variable.
    std::vector<int> cslot(static_cast<size_t>(ar));
    for (int v = 0; v < ar; ++v) cslot[static_cast<size_t>(v)] = v;
    MPoly FH(total);
    for (size_t k = 0; k < ctx.F.size(); ++k) {
        Mono hk(total);
        hk.set(total - 1, static_cast<int>(k));
        FH.add_shifted(ctx.F[k].remap(total, cslot), hk, Rat(1));
    }

    GraphClass out{ctx, n, MPoly(total)};
    MPoly fpow(total, Rat(1));
    std::vector<int> widen(static_cast<size_t>(ar + n + 1));
    for (int v = 0; v < ar + n + 1; ++v) widen[static_cast<size_t>(v)] = v;
    for (int k = 0; k < d; ++k) {
        Matroid mk = truncate(direct_sum(m, star1), k + 1);
        ChowClass ck = class_from_duals(mk, ctx);  // on n+1 points; H_{n+1} plays H
        out.poly += ck.poly.remap(total, widen) * fpow;
        fpow = fpow * FH;
    }
    return out;
}

std::pair<ChowClass, ChowClass> serpar_classes(const ChowClass& a, const ChowClass& b) {
    a.ctx.require_same(b.ctx);
    const QuantumContext& ctx = a.ctx;
    int ar = ctx.arity(), n1 = a.n, n2 = b.n;
    int N = n1 + n2 - 1;
    int total = ar + N + 1;  // z last
    int zslot = total - 1;

    std::vector<int> slot_a(static_cast<size_t>(ar + n1));
    for (int v = 0; v < ar; ++v) slot_a[static_cast<size_t>(v)] = v;
    for (int i = 0; i < n1 - 1; ++i) slot_a[static_cast<size_t>(ar + i)] = ar + i;
    slot_a[static_cast<size_t>(ar + n1 - 1)] = zslot;

    std::vector<int> slot_b(static_cast<size_t>(ar + n2));
    for (int v = 0; v < ar; ++v) slot_b[static_cast<size_t>(v)] = v;
    slot_b[static_cast<size_t>(ar)] = zslot;
    for (int j = 2; j <= n2; ++j) slot_b[static_cast<size_t>(ar + j - 1)] = ar + n1 + j - 2;

    MPoly prod = a.poly.remap(total, slot_a) * b.poly.remap(total, slot_b);

    // Collect as a polynomial in z with coefficients free of z.
    int zdeg = prod.degree_in(zslot);
    UniPoly inz(static_cast<size_t>(std::max(zdeg, 0)) + 1, MPoly(ar + N));
    for (const auto& [mono, coef] : prod.terms()) {
        Mono stem = mono;
        int k = mono.exp(zslot);
        stem.set(zslot, 0);
        Mono small(ar + N);
        for (int v = 0; v < zslot; ++v) small.set(v, stem.exp(v));
        inz[static_cast<size_t>(k)].add_term(small, coef);
    }
    up_trim(inz);

    std::vector<int> cslot(static_cast<size_t>(ar));
    for (int v = 0; v < ar; ++v) cslot[static_cast<size_t>(v)] = v;
    UniPoly Fbig = ctx.embedded_F(ar + N, cslot);

    // F-adic split in the glued variable; inputs of degree <= r per variable
    // give hbar-degree <= 1 here.
    std::vector<UniPoly> levels;
    UniPoly cur = inz;
    while (!up_is_zero(cur)) {
        UniPoly q, rem;
        up_divmod(cur, Fbig, q, rem);
        levels.push_back(rem);
        cur = q;
    }
    if (levels.size() > 2)
        throw UsageError("serpar_classes: hbar-degree exceeds 1 (inputs not reduced?)");

    auto to_class = [&](int lvl) {
        ChowClass c = ChowClass::zero(ctx, N);
        if (lvl >= static_cast<int>(levels.size())) return c;
        int hslot = ar + n1 - 1;  // glued variable position
        for (size_t k = 0; k < levels[static_cast<size_t>(lvl)].size(); ++k) {
            const MPoly& ck = levels[static_cast<size_t>(lvl)][k];
            for (const auto& [mono, coef] : ck.terms()) {
                Mono big = mono;
                big.set(hslot, mono.exp(hslot) + static_cast<int>(k));
                c.poly.add_term(big, coef);
            }
        }
        return c;
    };
    return {to_class(0), to_class(1)};
}

}  // namespace orbitcalc
