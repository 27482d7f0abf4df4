#ifndef CUTVOR_RATIONAL_HPP
#define CUTVOR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cutvor {

// All geometry is exact: cpp_rational is always stored reduced with a
// positive denominator, so equality of values is equality of representations.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Int = long long;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Floor division for machine integers, correct for negative numerators.
inline Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

inline BigInt rat_floor(const Rat& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q"; q must be nonzero.
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw ParseError("rational with zero denominator: " + s);
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational: " + s);
    }
}

}  // namespace cutvor

#endif
