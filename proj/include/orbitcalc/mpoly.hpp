#pragma once

#include "orbitcalc/numeric.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace orbitcalc {

// Monomial over a fixed variable list. Exponents are tiny in this domain
// (degree <= ~30), so a fixed-width array keeps map keys cheap.
struct Mono {
    static constexpr int kMaxVars = 16;

    uint8_t arity = 0;
    uint16_t deg = 0;  // total degree, cached for graded comparison
    std::array<uint8_t, kMaxVars> e{};

    Mono() = default;
    explicit Mono(int nvars) : arity(static_cast<uint8_t>(nvars)) {}
    Mono(int nvars, const std::vector<int>& exps);

    int exp(int i) const { return e[static_cast<size_t>(i)]; }
    void set(int i, int v);
    bool is_one() const { return deg == 0; }

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;          // this | o
    Mono divided_into(const Mono& o) const;     // o / this
    std::vector<int> exps() const;

    bool operator==(const Mono& o) const { return arity == o.arity && deg == o.deg && e == o.e; }
};

// Graded lexicographic: by total degree, then lex on the exponent vector.
struct GradedLex {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.e < b.e;
    }
};

// Sparse multivariate polynomial with exact rational coefficients. No zero
// terms are stored; the term map's graded-lex order makes every iteration
// (printing, serialization, hashing) deterministic.
class MPoly {
  public:
    using Terms = std::map<Mono, Rat, GradedLex>;

    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}
    MPoly(int nvars, const Rat& c);

    static MPoly variable(int nvars, int index, int power = 1);
    static MPoly constant(int nvars, const Rat& c) { return MPoly(nvars, c); }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;
    int degree_in(int var) const;
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    const Rat& coeff(const Mono& m) const;
    void add_term(const Mono& m, const Rat& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly& scale(const Rat& c);
    MPoly scaled(const Rat& c) const;
    void add_scaled(const MPoly& o, const Rat& c);          // *this += c*o
    void add_shifted(const MPoly& o, const Mono& m, const Rat& c);  // *this += c*m*o

    // Exact division; throws InternalError if the remainder is nonzero.
    // Divisibility failures indicate upstream bugs, never expected data.
    MPoly exact_div(const MPoly& divisor) const;

    // Substitute variable `var` := 0 (drops terms) or := a polynomial.
    MPoly at_zero(int var) const;
    MPoly substitute(int var, const MPoly& value) const;

    // Reinterpret over a wider/narrower variable list: old variable i becomes
    // new variable slot[i]. Dropping a variable requires exponent 0 on it.
    MPoly remap(int new_nvars, const std::vector<int>& slot) const;

    bool is_integral() const;  // all denominators 1

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    int nvars_ = 0;
    Terms terms_;
};

MPoly parse_poly(const std::string& text, const std::vector<std::string>& names);

}  // namespace orbitcalc
