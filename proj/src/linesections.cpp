#include "orbitcalc/linesections.hpp"

#include "orbitcalc/prng.hpp"
#include "orbitcalc/qmatrix.hpp"

#include <numeric>

namespace orbitcalc {

namespace {

MPoly uv_linear(long cu, long cv) {
    MPoly p(2);
    Mono mu(2), mv(2);
    mu.set(0, 1);
    mv.set(1, 1);
    p.add_term(mu, Rat(cu));
    p.add_term(mv, Rat(cv));
    return p;
}

}  // namespace

MPoly line_section_class_closed_form(int d) {
    if (d < 4) throw UsageError("line_section_class_closed_form: requires d >= 4");
    MPoly out(2, Rat(static_cast<long>(d) * (d - 1) * (d - 2)));
    for (int k = 2; k <= d - 2; ++k) out = out * uv_linear(k, d - k);
    return out;
}

Int grassmannian_degree(const MPoly& p, int r) {
    if (p.nvars() != 2) throw UsageError("grassmannian_degree: expected a polynomial in u, v");
    int want = 2 * r - 2;
    for (const auto& [m, c] : p.terms()) {
        if (m.deg != want) throw UsageError("grassmannian_degree: input not homogeneous of degree 2r-2");
        Mono swapped(2);
        swapped.set(0, m.exp(1));
        swapped.set(1, m.exp(0));
        if (p.coeff(swapped) != c) throw UsageError("grassmannian_degree: input not symmetric in u, v");
    }
    Mono m1(2), m2(2);
    m1.set(0, r - 1);
    m1.set(1, r - 1);
    Rat val = p.coeff(m1);
    if (r >= 2) {
        m2.set(0, r - 2);
        m2.set(1, r);
        val -= p.coeff(m2);
    }
    return to_int(val);
}

MPoly line_section_class_via_pipeline(int d, const Matroid& m, const ExprPtr& expr) {
    if (m.d() != 2 || m.n() != d)
        throw UsageError("line_section_class_via_pipeline: need a rank-2 matroid on d elements");
    QuantumContext ctx = QuantumContext::split_roots();
    MPoly u = MPoly::variable(2, 0), v = MPoly::variable(2, 1);

    // G(z) = prod_{k=0}^{d} (z + k u + (d-k) v); the section class is
    // L(z) = (G(z) - G(0))/z. Evaluating L(sum H_i) on {-u,-v}^d kills G, so
    // each interpolation term carries the constant -G(0)/(-|T|v-(d-|T|)u),
    // which is the product of the other linear factors of G(0) — a
    // polynomial. The per-term Lagrange denominators contribute the global
    // (u-v)^d divided off at the end.
    std::vector<MPoly> kappa(static_cast<size_t>(d) + 1);  // by |T|
    for (int t = 0; t <= d; ++t) {
        MPoly acc(2, Rat(1));
        for (int k = 0; k <= d; ++k)
            if (k != d - t) acc = acc * uv_linear(k, d - k);
        kappa[static_cast<size_t>(t)] = acc;
    }

    UniPoly in_u = {u, MPoly(2, Rat(1))};  // z + u  (the Lagrange factor H_i + u)
    UniPoly in_v = {v, MPoly(2, Rat(1))};  // z + v

    MhbarEvaluator ev(ctx);
    MPoly total(2);
    for (Mask T = 0; T < (Mask(1) << d); ++T) {
        std::vector<UniPoly> inputs(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) inputs[static_cast<size_t>(i)] = (T & (Mask(1) << i)) ? in_u : in_v;
        QuantumElement q = expr ? ev.eval_expr(expr, inputs) : ev.eval(m, inputs);
        MPoly val = q.coeff_z_hbar(1, 1);
        if (val.is_zero()) continue;
        int t = popcount(T);
        val = val * kappa[static_cast<size_t>(t)];
        if ((d - t) % 2 == 1)
            total -= val;
        else
            total += val;
    }

    MPoly umv = u - v;
    MPoly denom(2, Rat(1));
    for (int k = 0; k < d; ++k) denom = denom * umv;
    MPoly out = total.exact_div(denom);

    // Sanity: an actual class on G(1,r) is symmetric and homogeneous.
    for (const auto& [mono, c] : out.terms()) {
        if (mono.deg != d - 3) throw InternalError("pipeline class not homogeneous of degree d-3");
        Mono swapped(2);
        swapped.set(0, mono.exp(1));
        swapped.set(1, mono.exp(0));
        if (out.coeff(swapped) != c) throw InternalError("pipeline class not symmetric in u, v");
    }
    return out;
}

TriIncidentReport tri_incident_report(int d, int r, uint64_t seed) {
    if (d != 2 * r + 1) throw UsageError("tri_incident_report: requires d = 2r+1");
    if (d < 4) throw UsageError("tri_incident_report: requires d >= 4");
    Prng rng(seed);
    TriIncidentReport rep;
    rep.d = d;
    rep.r = r;
    Int total = 0;
    for (int i = 1; i <= d - 2; ++i) {
        std::vector<std::vector<int>> blocks;
        std::vector<int> first, last;
        for (int e = 1; e <= i; ++e) first.push_back(e);
        for (int e = i + 2; e <= d; ++e) last.push_back(e);
        blocks.push_back(first);
        blocks.push_back({i + 1});
        blocks.push_back(last);
        Matroid m = partition_matroid(blocks, d, rng);
        MPoly cls = line_section_class_via_pipeline(d, m);
        TriIncidentRow row;
        row.i = i;
        row.multiplicities = {i, 1, d - 1 - i};
        std::sort(row.multiplicities.begin(), row.multiplicities.end(), std::greater<int>());
        row.degree = grassmannian_degree(cls, r);
        row.two_to_one = (i == 1 || i == d - 2 || 2 * i == d - 1);
        row.line_count = row.two_to_one ? Int(row.degree / 2) : row.degree;
        total += row.degree;
        rep.rows.push_back(std::move(row));
    }
    rep.total = total;

    // Additivity: the partition degrees must sum to the uniform degree.
    Matroid uni = uniform_matroid(2, d);
    Int uniform_degree = grassmannian_degree(line_section_class_via_pipeline(d, uni), r);
    if (uniform_degree != total)
        throw InternalError("tri_incident_report: partition degrees do not sum to the uniform degree");
    return rep;
}

}  // namespace orbitcalc
