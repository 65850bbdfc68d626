#pragma once

#include "reduct/upoly.hpp"

#include <string>
#include <vector>

namespace reduct {

// n-fold composition. n = 0 is the identity; negative n composes the exact
// inverse, which exists only for degree-1 maps with nonzero slope.
UPoly iterate(const UPoly& p, long n);

// For p = a*x^2 + b*x + c, the reflection r(x) = -b/a - x across the axis;
// satisfies p ∘ r = p. Degree-2 input only.
UPoly reflection(const UPoly& p);

enum class UnaryCase { constant, degree1, degree2, degree_ge3 };

struct DefinableFamily {
    UnaryCase kind;
    std::vector<UPoly> members;        // distinct, constants excluded
    bool includes_all_constants = true;
};

// The unary polynomial maps a single polynomial generates, enumerated up to
// the degree bound (for degree-1 generators: iterates -bound..bound).
DefinableFamily definable_functions(const UPoly& p, int degree_bound);

// Membership of q in the family p generates, decided without a bound.
// `why`, when non-null, receives the witnessing composition.
bool is_definable_from(const UPoly& q, const UPoly& p, std::string* why = nullptr);

struct UnaryInterdef {
    bool interdefinable = false;
    std::string explanation;
    // Verdict of the two narrow closed-form clauses (identity/constant pair,
    // or inverse linear maps); a mismatch with the family-based answer is
    // surfaced as a diagnostic.
    bool clause_verdict = false;
    bool discrepancy = false;
};

UnaryInterdef interdefinable_unary(const UPoly& p, const UPoly& q);

}  // namespace reduct
