#pragma once

#include "reduct/mpoly.hpp"
#include "reduct/parse.hpp"
#include "reduct/upoly.hpp"

#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

namespace testutil {

using reduct::MPoly;
using reduct::Rat;
using reduct::UPoly;

using Rng = std::mt19937_64;

inline MPoly P(const std::string& text) {
    auto r = reduct::parse_poly(text);
    if (auto* err = std::get_if<reduct::ParseError>(&r))
        throw std::runtime_error("test parse failed: " + err->message + " in \"" + text + "\"");
    return std::get<MPoly>(r);
}

inline UPoly U(const std::string& text) { return UPoly::from_mpoly(P(text)); }

inline Rat rand_rat(Rng& rng, long num_range = 6, long den_range = 3) {
    std::uniform_int_distribution<long> nd(-num_range, num_range);
    std::uniform_int_distribution<long> dd(1, den_range);
    return Rat(nd(rng), dd(rng));
}

inline Rat rand_nonzero_rat(Rng& rng, long num_range = 6, long den_range = 3) {
    for (;;) {
        Rat r = rand_rat(rng, num_range, den_range);
        if (r != 0) return r;
    }
}

// Random dense-ish univariate polynomial of degree exactly deg.
inline UPoly rand_upoly(Rng& rng, const std::string& var, int deg, long num_range = 5) {
    std::vector<Rat> cs(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) cs[static_cast<size_t>(i)] = rand_rat(rng, num_range, 2);
    while (cs.back() == 0) cs.back() = rand_rat(rng, num_range, 2);
    return UPoly(var, cs);
}

inline UPoly rand_nonconstant_upoly(Rng& rng, const std::string& var, int max_deg) {
    std::uniform_int_distribution<int> dd(1, max_deg);
    return rand_upoly(rng, var, dd(rng));
}

// Random sparse multivariate polynomial over the given variables.
inline MPoly rand_mpoly(Rng& rng, const std::vector<std::string>& vars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> td(1, max_terms);
    std::uniform_int_distribution<int> ed(0, max_deg);
    MPoly p;
    int terms = td(rng);
    for (int t = 0; t < terms; ++t) {
        reduct::ExpVec m;
        int budget = max_deg;
        for (const auto& v : vars) {
            int e = std::uniform_int_distribution<int>(0, budget)(rng);
            if (e > 0) m[v] = e;
            budget -= e;
        }
        p += MPoly::term(rand_rat(rng), m);
    }
    return p;
}

}  // namespace testutil
