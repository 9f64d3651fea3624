#include "orbitcalc/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace orbitcalc {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw UsageError("bad rational literal: '" + s + "'");
    }
}

Mono::Mono(int nvars, const std::vector<int>& exps) : arity(static_cast<uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw InternalError("Mono: too many variables");
    if (static_cast<int>(exps.size()) != nvars) throw InternalError("Mono: exponent arity mismatch");
    for (int i = 0; i < nvars; ++i) set(i, exps[static_cast<size_t>(i)]);
}

void Mono::set(int i, int v) {
    if (v < 0 || v > 255) throw InternalError("Mono: exponent out of range");
    deg = static_cast<uint16_t>(deg - e[static_cast<size_t>(i)] + v);
    e[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
}

Mono Mono::operator*(const Mono& o) const {
    Mono r = *this;
    for (int i = 0; i < arity; ++i) r.set(i, exp(i) + o.exp(i));
    return r;
}

bool Mono::divides(const Mono& o) const {
    for (int i = 0; i < arity; ++i)
        if (exp(i) > o.exp(i)) return false;
    return true;
}

Mono Mono::divided_into(const Mono& o) const {
    Mono r(arity);
    for (int i = 0; i < arity; ++i) r.set(i, o.exp(i) - exp(i));
    return r;
}

std::vector<int> Mono::exps() const {
    std::vector<int> v(arity);
    for (int i = 0; i < arity; ++i) v[static_cast<size_t>(i)] = exp(i);
    return v;
}

MPoly::MPoly(int nvars, const Rat& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Mono(nvars), c);
}

MPoly MPoly::variable(int nvars, int index, int power) {
    MPoly p(nvars);
    Mono m(nvars);
    m.set(index, power);
    p.terms_.emplace(m, Rat(1));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int MPoly::total_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.deg;
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
    return d;
}

const Rat& MPoly::coeff(const Mono& m) const {
    static const Rat zero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (nvars_ != o.nvars_) throw InternalError("MPoly: variable-set mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (nvars_ != o.nvars_) throw InternalError("MPoly: variable-set mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw InternalError("MPoly: variable-set mismatch");
    MPoly r(nvars_);
    // Iterate the smaller operand outside; term merging dominates anyway.
    const MPoly& a = terms_.size() <= o.terms_.size() ? *this : o;
    const MPoly& b = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& [ma, ca] : a.terms_) r.add_shifted(b, ma, ca);
    return r;
}

MPoly& MPoly::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r = *this;
    r.scale(c);
    return r;
}

void MPoly::add_scaled(const MPoly& o, const Rat& c) {
    if (c == 0) return;
    for (const auto& [m, v] : o.terms_) add_term(m, v * c);
}

void MPoly::add_shifted(const MPoly& o, const Mono& m, const Rat& c) {
    if (c == 0) return;
    for (const auto& [mo, v] : o.terms_) add_term(mo * m, v * c);
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
    if (nvars_ != divisor.nvars_) throw InternalError("exact_div: variable-set mismatch");
    if (divisor.is_zero()) throw InternalError("exact_div: division by zero");
    MPoly rem = *this;
    MPoly quot(nvars_);
    const auto& [dm, dc] = *divisor.terms_.rbegin();  // leading term, graded-lex
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        if (!dm.divides(rm)) throw InternalError("exact_div: inexact division");
        Mono q = dm.divided_into(rm);
        Rat f = rc / dc;
        quot.add_term(q, f);
        rem.add_shifted(divisor, q, -f);
    }
    return quot;
}

MPoly MPoly::at_zero(int var) const {
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.exp(var) == 0) r.terms_.emplace(m, c);
    return r;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
    if (value.nvars() != nvars_) throw InternalError("substitute: variable-set mismatch");
    int dmax = degree_in(var);
    if (dmax <= 0) return dmax == 0 ? *this : MPoly(nvars_);
    std::vector<MPoly> powers(static_cast<size_t>(dmax) + 1, MPoly(nvars_, Rat(1)));
    for (int k = 1; k <= dmax; ++k) powers[static_cast<size_t>(k)] = powers[static_cast<size_t>(k - 1)] * value;
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Mono base = m;
        int k = m.exp(var);
        base.set(var, 0);
        r.add_shifted(powers[static_cast<size_t>(k)], base, c);
    }
    return r;
}

MPoly MPoly::remap(int new_nvars, const std::vector<int>& slot) const {
    if (static_cast<int>(slot.size()) != nvars_) throw InternalError("remap: slot arity mismatch");
    MPoly r(new_nvars);
    for (const auto& [m, c] : terms_) {
        Mono nm(new_nvars);
        for (int i = 0; i < nvars_; ++i) {
            int s = slot[static_cast<size_t>(i)];
            if (s < 0) {
                if (m.exp(i) != 0) throw InternalError("remap: dropping a used variable");
            } else {
                nm.set(s, nm.exp(s) + m.exp(i));
            }
        }
        r.add_term(nm, c);
    }
    return r;
}

bool MPoly::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_) throw InternalError("to_string: name arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.is_one()) {
            out << rat_to_string(a);
            printed = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (m.exp(i) == 0) continue;
            if (printed) out << "*";
            out << names[static_cast<size_t>(i)];
            if (m.exp(i) > 1) out << "^" << m.exp(i);
            printed = true;
        }
    }
    return out.str();
}

namespace {

// Minimal recursive-descent parser for sums of terms like "3 - 2*t + t^2",
// "1/2*u*v^3". Only what the JSON/CLI surfaces need.
class PolyParser {
  public:
    PolyParser(const std::string& text, const std::vector<std::string>& names)
        : s_(text), names_(names) {}

    MPoly parse() {
        MPoly acc(static_cast<int>(names_.size()));
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        acc += term(neg);
        skip_ws();
        while (pos_ < s_.size()) {
            char op = get();
            if (op != '+' && op != '-') throw UsageError("polynomial parse error near '" + s_.substr(pos_ - 1) + "'");
            acc += term(op == '-');
            skip_ws();
        }
        return acc;
    }

  private:
    MPoly term(bool neg) {
        int n = static_cast<int>(names_.size());
        Rat coeff(neg ? -1 : 1);
        Mono m(n);
        bool any = false;
        for (;;) {
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= number();
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
                int v = varname();
                int p = 1;
                skip_ws();
                if (peek() == '^') {
                    get();
                    skip_ws();
                    p = static_cast<int>(number().get_num().get_si());
                }
                m.set(v, m.exp(v) + p);
                any = true;
            } else {
                throw UsageError("polynomial parse error: expected term");
            }
            skip_ws();
            if (peek() == '*') {
                get();
                continue;
            }
            break;
        }
        if (!any) throw UsageError("polynomial parse error: empty term");
        MPoly p(n);
        p.add_term(m, coeff);
        return p;
    }

    Rat number() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        return parse_rat(s_.substr(start, pos_ - start));
    }

    int varname() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        throw UsageError("unknown variable '" + name + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    const std::string& s_;
    const std::vector<std::string>& names_;
    size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& names) {
    return PolyParser(text, names).parse();
}

}  // namespace orbitcalc
