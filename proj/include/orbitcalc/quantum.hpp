#pragma once

#include "orbitcalc/mpoly.hpp"

#include <string>
#include <vector>

namespace orbitcalc {

// Univariate polynomial in z with MPoly coefficients (over the coefficient
// ring variables). coeffs[k] is the z^k coefficient; trailing zeros trimmed.
using UniPoly = std::vector<MPoly>;

void up_trim(UniPoly& f);
int up_degree(const UniPoly& f);  // -1 for zero
bool up_is_zero(const UniPoly& f);
UniPoly up_zero();
UniPoly up_constant(int nvars, const Rat& c);
UniPoly up_monomial(int nvars, int zdeg, const Rat& c = Rat(1));
UniPoly up_add(const UniPoly& a, const UniPoly& b);
UniPoly up_sub(const UniPoly& a, const UniPoly& b);
UniPoly up_mul(const UniPoly& a, const UniPoly& b);
UniPoly up_scale(const UniPoly& a, const MPoly& c);
bool up_equal(const UniPoly& a, const UniPoly& b);

// Division with remainder by a monic divisor; exact, no fractions introduced.
void up_divmod(const UniPoly& f, const UniPoly& monic, UniPoly& quot, UniPoly& rem);

// The ambient ring data: dimension r plus the monic degree-(r+1) relation
// F(z) over a declared coefficient variable list. Every ring operation is
// parameterized by one of these.
class QuantumContext {
  public:
    int r = 0;
    std::vector<std::string> coeff_vars;  // e.g. {"c1",...,"c{r+1}"}, {"u","v"}, {}
    UniPoly F;                            // monic, degree r+1, coefficients over coeff_vars

    int arity() const { return static_cast<int>(coeff_vars.size()); }

    // F = z^{r+1} + c1 z^r + ... + c_{r+1}, the generic equivariant relation.
    static QuantumContext equivariant(int r);
    // F = z^{r+1}: the non-equivariant specialization.
    static QuantumContext nonequivariant(int r);
    // r = 1 with split Chern roots: F = (z+u)(z+v).
    static QuantumContext split_roots();

    bool operator==(const QuantumContext& o) const {
        return r == o.r && coeff_vars == o.coeff_vars && up_equal(F, o.F);
    }
    bool operator!=(const QuantumContext& o) const { return !(*this == o); }

    // F with coefficients remapped into a wider variable ring (the context's
    // variables occupy slots slot[0..arity)).
    UniPoly embedded_F(int new_nvars, const std::vector<int>& slot) const;

    void require_same(const QuantumContext& o) const;
};

// Element of QH: a finite hbar-series of z-polynomials of degree <= r.
// levels[k] is the coefficient of hbar^k = F(z)^k.
struct QuantumElement {
    QuantumContext ctx;
    std::vector<UniPoly> levels;

    bool is_zero() const;
    void trim();
    int hbar_degree() const;  // -1 for zero

    // [F^k] and [z^j][F^k] extractors.
    UniPoly coeff_hbar(int k) const;
    MPoly coeff_z_hbar(int j, int k) const;

    bool operator==(const QuantumElement& o) const;
};

// Reduction of f modulo F: the unique representative of degree <= r.
UniPoly reduce_mod_F(const UniPoly& f, const QuantumContext& ctx);

// F-adic expansion f = a_0 + a_1 F + a_2 F^2 + ..., each a_k of degree <= r.
QuantumElement f_adic_expand(const UniPoly& f, const QuantumContext& ctx);

// Sum a_k F^k back to a plain polynomial.
UniPoly lift(const QuantumElement& q);

// The star product: lift, multiply as polynomials, re-expand F-adically.
// Implemented as a level convolution with carries; star_via_lift is the
// literal definition and is used as its oracle in tests.
QuantumElement star(const QuantumElement& a, const QuantumElement& b);
QuantumElement star_via_lift(const QuantumElement& a, const QuantumElement& b);

QuantumElement qe_add(const QuantumElement& a, const QuantumElement& b);
QuantumElement qe_sub(const QuantumElement& a, const QuantumElement& b);
QuantumElement qe_neg(const QuantumElement& a);
QuantumElement qe_zero(const QuantumContext& ctx);
QuantumElement qe_one(const QuantumContext& ctx);

// Truncate modulo hbar^k (keep levels 0..k-1).
QuantumElement truncate_hbar(const QuantumElement& q, int k);

// Pushforward to a point: [z^r] reduce_mod_F(f).
MPoly integrate_point(const UniPoly& f, const QuantumContext& ctx);

// Specialize every coefficient variable to 0 (F becomes z^{r+1}).
UniPoly specialize_czero(const UniPoly& f, const QuantumContext& ctx);

}  // namespace orbitcalc
