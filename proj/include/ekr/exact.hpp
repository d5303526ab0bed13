#pragma once

// Exact scalar types shared by every module, plus the library's error types.

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ekr {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using RationalVector = std::vector<Rational>;

/// Raised when a degree (or other size parameter) lies outside the range an
/// operation supports.
class DegreeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised when a construction is asked for a degree where it does not exist
/// or is not implemented (e.g. Hamiltonian decompositions of K_4*, K_6*).
class UnsupportedConstruction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed user input: unparsable permutations, conflicting constraints.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency assertion failed. Should never fire.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline std::uint64_t factorial_u64(unsigned n) {
    if (n > 20) throw DegreeError("factorial_u64: n! overflows 64 bits for n > 20");
    std::uint64_t r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return mp::numerator(q).str();
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvariantViolation("make_rational: zero denominator");
    return Rational(num, den);
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw InputError("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

}  // namespace ekr
