#pragma once

#include "reduct/mpoly.hpp"
#include "reduct/upoly.hpp"

#include <optional>
#include <string>

namespace reduct {

// Strong additive shape f_adjusted(c1*u(x) + c2*u(y)) with u monic and
// zero constant term.
struct StrongAdditive {
    UPoly u_common;
    Rat c1, c2;
    UPoly f_adjusted;
};

// Weak additive shape f(u(x) + v(y)); u monic with zero constant term,
// v with zero constant term, all absorbed constants live in f.
struct AdditiveDecomp {
    UPoly f, u, v;
    std::optional<StrongAdditive> strong;
};

// Strong multiplicative shape f_adjusted(u0^m(x) * u0^n(y)), u0 monic.
struct StrongMultiplicative {
    UPoly u0;
    unsigned m = 1, n = 1;
    UPoly f_adjusted;
};

// Weak multiplicative shape f(u(x) * v(y)); u and v monic.
struct MultiplicativeDecomp {
    UPoly f, u, v;
    std::optional<StrongMultiplicative> strong;
};

enum class ERTag { Additive, Multiplicative, Neither };

struct ERVerdict {
    ERTag tag = ERTag::Neither;
    std::optional<AdditiveDecomp> additive;
    std::optional<MultiplicativeDecomp> multiplicative;
};

// The detectors run on polynomials depending on exactly two variables
// (taken in name order). Every certificate they return has been verified
// by full re-expansion against P; failure to verify means "no".
std::optional<AdditiveDecomp> weak_additive(const MPoly& P);
std::optional<MultiplicativeDecomp> weak_multiplicative(const MPoly& P);

std::optional<StrongAdditive> strengthen_additive(const AdditiveDecomp& dec, const MPoly& P);
std::optional<StrongMultiplicative> strengthen_multiplicative(const MultiplicativeDecomp& dec,
                                                              const MPoly& P);

// Runs both weak detectors (they can never both fire) and strengthens the
// winner when possible.
ERVerdict er_classify(const MPoly& P);

std::string er_tag_name(ERTag t);

}  // namespace reduct
