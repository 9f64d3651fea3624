#pragma once

#include "orbitcalc/chow.hpp"
#include "orbitcalc/matroid.hpp"
#include "orbitcalc/polytope.hpp"
#include "orbitcalc/quantum.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace orbitcalc {

// Structured matroid expressions: the free point, direct sums, generic
// truncations and column permutations. These are exactly the shapes whose
// hbar-operator evaluates by the recursive rules (star, hbar-truncation,
// input permutation) rather than by the chain sum.
class MatroidExpr;
using ExprPtr = std::shared_ptr<const MatroidExpr>;

class MatroidExpr {
  public:
    enum class Kind { Star, Leaf, Sum, Truncate, Permute };

    Kind kind;
    Matroid leaf{1, 1, {1}};       // Kind::Leaf
    std::vector<ExprPtr> summands; // Kind::Sum
    int trunc_k = 0;               // Kind::Truncate
    std::vector<int> perm;         // Kind::Permute (child slot j reads input perm[j])
    ExprPtr child;                 // Truncate / Permute

    int width() const;
    Matroid eval() const;

    static ExprPtr star_point();
    static ExprPtr matroid(Matroid m);
    static ExprPtr sum(std::vector<ExprPtr> parts);
    static ExprPtr truncate(int k, ExprPtr inner);
    static ExprPtr permute(std::vector<int> p, ExprPtr inner);
};

ExprPtr uniform_expr(int d, int n);
ExprPtr schubert_expr(const std::vector<int>& ranks, const std::vector<std::vector<int>>& chain, int n);
ExprPtr partition_expr(const std::vector<std::vector<int>>& blocks, int n);

// The n-ary operator [.] on the quantum ring, keyed by matroid. For a plain
// matroid it evaluates the signed chain sum
//   sum over flags  X_1 ⊂ ... ⊂ X_l = {1..n}  of
//   (-1)^{n-l} (((prod_{X_1} f mod F^{rk X_1}) prod_{X_2\X_1} f) mod F^{rk X_2}) ...
// organized as a dynamic program over subsets; evaluations are cached under
// simultaneous relabeling of (matroid, inputs), which the operator respects.
class MhbarEvaluator {
  public:
    explicit MhbarEvaluator(QuantumContext ctx) : ctx_(std::move(ctx)) {}

    const QuantumContext& ctx() const { return ctx_; }

    QuantumElement eval(const Matroid& m, const std::vector<UniPoly>& inputs);
    QuantumElement eval_expr(const ExprPtr& e, const std::vector<UniPoly>& inputs);

  private:
    QuantumElement chain_sum(const Matroid& m, const std::vector<UniPoly>& reduced);

    QuantumContext ctx_;
    std::map<std::string, QuantumElement> cache_;
};

// One-off conveniences over a fresh evaluator.
QuantumElement mhbar(const Matroid& m, const std::vector<UniPoly>& inputs, const QuantumContext& ctx);
QuantumElement mhbar(const ExprPtr& e, const std::vector<UniPoly>& inputs, const QuantumContext& ctx);

// [z^r][F^{d-1}] of the operator value: the pairing of the class against the
// given inputs.
MPoly kronecker_dual(const Matroid& m, const std::vector<UniPoly>& inputs, const QuantumContext& ctx);

// Class reconstruction from the full panel of monomial duals; the pairing
// matrix is anti-triangular with unit anti-diagonal, so back-substitution is
// fraction-free over the coefficient ring.
ChowClass class_from_duals(const Matroid& m, const QuantumContext& ctx);

// The permutation-sum rational-function formula, evaluated on an integer
// tensor grid with disjoint per-variable node sets and reconstructed by exact
// Lagrange interpolation, one coefficient monomial at a time. Throws
// InternalError if the interpolated class is not integral.
ChowClass class_via_permutation_formula(const Matroid& m, const QuantumContext& ctx);

// Non-equivariant class: the lattice-point sum over the shifted rank dilate.
ChowClass nonequivariant_class(const Matroid& m, int r);

// Kronecker dual of the operator: the hbar-series of classes on n+1 points
// whose k-th coefficient is the class of tau^{<= k+1}(M + *); pairing the
// first n slots against inputs and reading the last slot as z reproduces the
// operator itself. hbar-degree <= d-1.
struct DualClass {
    QuantumContext ctx;
    int n = 0;
    std::vector<ChowClass> hbar_parts;  // each on n+1 points

    // Partial pairing against monomial inputs on the first n factors; the
    // (n+1)-st variable becomes z. This is the defining convolution.
    QuantumElement apply(const std::vector<int>& a) const;
};

DualClass mhbar_dual(const Matroid& m, const QuantumContext& ctx);

// Class of the graph closure: a polynomial in H_1..H_n and one extra
// variable H with no reduction applied in H. Variable order in `poly`:
// coefficient ring, H_1..H_n, then H.
struct GraphClass {
    QuantumContext ctx;
    int n = 0;
    MPoly poly;

    std::vector<std::string> var_names() const;
};

GraphClass graph_closure_class(const Matroid& m, const QuantumContext& ctx);

// Quantum product of two classes along the last variable of `a` and the
// first variable of `b`: returns the hbar^0 part (parallel connection class,
// glued variable at position a.n) and the hbar^1 part (series connection).
std::pair<ChowClass, ChowClass> serpar_classes(const ChowClass& a, const ChowClass& b);

// Newton interpolation through (nodes[k], values[k]); returns power-basis
// coefficients (degree = nodes.size()-1).
std::vector<MPoly> newton_interpolate(const std::vector<Rat>& nodes, const std::vector<MPoly>& values);

QuantumElement qe_scale(const QuantumElement& q, const MPoly& c);

// When enabled, expression evaluations with at most 6 inputs are re-run
// through the chain sum on the evaluated matroid and compared (the CLI
// --check flag).
void set_expr_crosscheck(bool enabled);

}  // namespace orbitcalc
