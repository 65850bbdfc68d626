#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <cstdint>
#include <string>

namespace reduct {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_rational keeps values canonical: denominator > 0, gcd(num, den) = 1,
// zero stored as 0/1. Everything here relies on that.

inline Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat acc(1);
    Rat b = base;
    while (exp != 0) {
        if (exp & 1u) acc *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return acc;
}

// Gauss content gcd: gcd of numerators over lcm of denominators, >= 0.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Int n = gcd(numerator(a), numerator(b));
    Int d = lcm(denominator(a), denominator(b));
    return Rat(n, d);
}

// "p/q" in lowest terms; plain "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Cheap hash reading limbs in place: sign, limb count, first/middle/last
// limb. Values get very large inside image-size kernels, so neither copies
// nor full-limb passes are acceptable; equality stays exact regardless.
inline std::size_t int_hash(const Int& n) {
    const auto& b = n.backend();
    std::size_t seed = b.sign() ? 0x9e3779b97f4a7c15ull : 0;
    const unsigned sz = b.size();
    boost::hash_combine(seed, sz);
    const auto* limbs = b.limbs();
    boost::hash_combine(seed, limbs[0]);
    boost::hash_combine(seed, limbs[sz - 1]);
    if (sz > 2) boost::hash_combine(seed, limbs[sz / 2]);
    return seed;
}

struct IntHash {
    std::size_t operator()(const Int& n) const { return int_hash(n); }
};

struct RatHash {
    std::size_t operator()(const Rat& r) const {
        std::size_t seed = int_hash(numerator(r));
        boost::hash_combine(seed, int_hash(denominator(r)));
        return seed;
    }
};

}  // namespace reduct
