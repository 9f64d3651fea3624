#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbitcalc {

// Exact arithmetic scalars. Everything in this project is computed over Q;
// there is no floating point anywhere in the math core.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_int: not an integer: " + q.get_str());
    return q.get_num();
}

// "p" or "p/q", canonical (gcd 1, q >= 1).
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& s);

class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant (exit code 3 in the CLI); anything a correct
// build should never raise, e.g. a non-integral interpolation result.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace orbitcalc
