#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sympvoa {

// The only number type in the core.  Arbitrary precision, always in lowest
// terms with positive denominator (maintained by the backend).
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
}

// Serialized as "a/b", with "/b" omitted when the denominator is 1.
inline std::string rat_to_string(const Rat& x) {
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("denominator must be positive: " + s);
    return Rat(num, den);
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// x in Z + 1/2
inline bool is_half_odd_integer(const Rat& x) { return denominator(x) == 2; }

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

// Product of `count` arithmetic-progression factors start, start+step, ...
// count = 0 gives the empty product 1.
inline Rat falling_product(const Rat& start, unsigned count, const Rat& step) {
    Rat r = 1;
    Rat f = start;
    for (unsigned j = 0; j < count; ++j) {
        r *= f;
        f += step;
    }
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned e) {
    Rat r = 1;
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
}

// Generalized binomial x(x-1)...(x-k+1)/k! with rational upper argument.
inline Rat binom(const Rat& x, unsigned k) {
    return falling_product(x, k, Rat(-1)) / Rat(factorial(k));
}

}  // namespace sympvoa
