#pragma once

#include "reduct/mpoly.hpp"
#include "reduct/upoly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace reduct {

// Gcd of polynomials in at most two shared variables, normalized to be
// integer-primitive with positive grlex-leading coefficient. Rejects the
// all-zero case.
MPoly bivariate_gcd(const MPoly& a, const MPoly& b);

// (num/g, den/g) for g the polynomial gcd together with the rational content
// shared by both, the quotient pair sign-normalized so den leads positive.
// den must be nonzero.
std::pair<MPoly, MPoly> reduce_fraction(const MPoly& num, const MPoly& den);

// Split f (supported on {x, y}) as g(x) * h(y) with g monic, when the
// coefficient matrix of f has rank at most 1.
std::optional<std::pair<UPoly, UPoly>> rank1_separate(const MPoly& f, const std::string& x,
                                                      const std::string& y);

}  // namespace reduct
