#include "orbitcalc/json_io.hpp"

namespace orbitcalc {

Json poly_to_json(const MPoly& p, const std::vector<std::string>& names) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["exp"] = m.exps();
        t["coeff"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    Json out;
    out["vars"] = names;
    out["terms"] = std::move(terms);
    return out;
}

MPoly poly_from_json(const Json& j, std::vector<std::string>* names_out) {
    std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
    if (names_out) *names_out = names;
    MPoly p(static_cast<int>(names.size()));
    for (const auto& t : j.at("terms")) {
        std::vector<int> exp = t.at("exp").get<std::vector<int>>();
        p.add_term(Mono(static_cast<int>(names.size()), exp), parse_rat(t.at("coeff").get<std::string>()));
    }
    return p;
}

Json matroid_to_json(const Matroid& m) {
    Json bases = Json::array();
    for (Mask b : m.bases()) bases.push_back(mask_to_elems(b));
    Json out;
    out["n"] = m.n();
    out["d"] = m.d();
    out["bases"] = std::move(bases);
    return out;
}

Matroid matroid_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    std::vector<Mask> bases;
    for (const auto& b : j.at("bases")) bases.push_back(elems_to_mask(b.get<std::vector<int>>(), n));
    return Matroid(n, d, std::move(bases));
}

Json matrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

QMatrix matrix_from_json(const Json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    QMatrix m(rows, cols);
    const Json& e = j.at("entries");
    if (static_cast<int>(e.size()) != rows) throw UsageError("matrix JSON: row count mismatch");
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(e[static_cast<size_t>(r)].size()) != cols)
            throw UsageError("matrix JSON: column count mismatch");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = parse_rat(e[static_cast<size_t>(r)][static_cast<size_t>(c)].get<std::string>());
    }
    return m;
}

PathMatrix path_matrix_from_json(const Json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    PathMatrix m(rows, cols);
    const Json& e = j.at("entries");
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = tpoly_parse(e.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)).get<std::string>());
    return m;
}

Json class_to_json(const ChowClass& c) {
    Json out = poly_to_json(c.poly, c.var_names());
    out["r"] = c.ctx.r;
    out["n"] = c.n;
    out["coeff_vars"] = c.ctx.coeff_vars;
    return out;
}

ChowClass class_from_json(const Json& j) {
    int r = j.at("r").get<int>();
    int n = j.at("n").get<int>();
    auto cvars = j.at("coeff_vars").get<std::vector<std::string>>();
    QuantumContext ctx;
    if (cvars.empty())
        ctx = QuantumContext::nonequivariant(r);
    else if (cvars == std::vector<std::string>{"u", "v"})
        ctx = QuantumContext::split_roots();
    else
        ctx = QuantumContext::equivariant(r);
    if (ctx.coeff_vars != cvars) throw UsageError("class JSON: unrecognized coefficient variables");
    ChowClass c = ChowClass::zero(ctx, n);
    c.poly = poly_from_json(j);
    if (c.poly.nvars() != ctx.arity() + n) throw UsageError("class JSON: variable count mismatch");
    return c;
}

Json qelem_to_json(const QuantumElement& q) {
    // Combined polynomial in (coeff vars, z, hbar).
    int ar = q.ctx.arity();
    int total = ar + 2;
    MPoly acc(total);
    std::vector<int> cslot(static_cast<size_t>(ar));
    for (int v = 0; v < ar; ++v) cslot[static_cast<size_t>(v)] = v;
    for (size_t k = 0; k < q.levels.size(); ++k)
        for (size_t zj = 0; zj < q.levels[k].size(); ++zj) {
            Mono m(total);
            m.set(ar, static_cast<int>(zj));
            m.set(ar + 1, static_cast<int>(k));
            acc.add_shifted(q.levels[k][zj].remap(total, cslot), m, Rat(1));
        }
    std::vector<std::string> names = q.ctx.coeff_vars;
    names.push_back("z");
    names.push_back("hbar");
    Json out = poly_to_json(acc, names);
    out["r"] = q.ctx.r;
    out["coeff_vars"] = q.ctx.coeff_vars;
    return out;
}

Json graph_class_to_json(const GraphClass& g) {
    Json out = poly_to_json(g.poly, g.var_names());
    out["r"] = g.ctx.r;
    out["n"] = g.n;
    out["coeff_vars"] = g.ctx.coeff_vars;
    return out;
}

Json subdivision_to_json(const Subdivision& s) {
    Json cells = Json::array();
    for (const auto& [m, sign] : s.cells) {
        Json c;
        c["matroid"] = matroid_to_json(m);
        c["sign"] = sign;
        cells.push_back(std::move(c));
    }
    Json out;
    out["parent"] = matroid_to_json(s.parent);
    out["cells"] = std::move(cells);
    return out;
}

Subdivision subdivision_from_json(const Json& j) {
    Matroid parent = matroid_from_json(j.at("parent"));
    Subdivision s{parent, {}};
    for (const auto& c : j.at("cells"))
        s.cells.emplace_back(matroid_from_json(c.at("matroid")), c.at("sign").get<int>());
    return s;
}

}  // namespace orbitcalc
