#pragma once

#include "reduct/mpoly.hpp"
#include "reduct/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reduct {

// Witness that P equals c * prod_i (x_i - r)^(e_i) + r.
struct TwistCertificate {
    Rat center;
    Rat base_constant;  // c above
    ExpVec exponents;   // e_i, one entry per supported variable
};

// Rebuild the twisted monomial a certificate describes.
MPoly expand_twist(const TwistCertificate& cert);

// Everything twist detection learns about one nonconstant polynomial: the
// exact solution set of centers plus full certificates at the rational ones.
struct TwistScan {
    RootDescriptor centers;
    Rat base_constant;
    ExpVec exponents;
    std::vector<TwistCertificate> rational_certs;
};

// nullopt when p is not a twisted monomial for any center. Rejects constants
// (classify handles those at the collection level).
std::optional<TwistScan> twist_candidates(const MPoly& p);

// Is the identity p == c * prod (x_i - s)^(e_i) + s satisfied modulo the
// witness polynomial g(s)? Sound for irrational centers: it holds exactly
// when every root of g is a valid center.
bool twist_holds_modulo(const MPoly& p, const Rat& base_constant, const ExpVec& exponents,
                        const UPoly& witness);

// Common twist center(s) of a whole collection.
struct CommonTwist {
    bool all_centers = false;       // every r works (collection of identity maps)
    UPoly witness;                  // squarefree; roots are the common centers
    std::vector<Rat> centers;       // rational common centers
    std::optional<Rat> unique_center;  // set when the witness pins down one rational r
};

std::optional<CommonTwist> common_twist(const std::vector<MPoly>& ps);

enum class Case { I_unary, II_vector_space, III_twisted_mult, IV_full_field };

std::string case_name(Case c);

struct ClassificationReport {
    Case kind;
    // Case II: multiset of nonzero coefficients on variables, in input order.
    std::vector<Rat> generators;
    // Case III: the shared center data and one certificate per polynomial.
    std::optional<CommonTwist> twist;
    std::vector<TwistCertificate> certificates;
    // Cases I and IV: per-polynomial evidence trail.
    std::vector<std::string> evidence;
};

bool is_unary(const MPoly& p);
bool is_linear(const MPoly& p);

ClassificationReport classify(const std::vector<MPoly>& ps);  // rejects empty input

enum class InterdefVerdict { yes, no, undetermined_case_I };

struct InterdefReport {
    InterdefVerdict verdict;
    std::string explanation;
    std::vector<std::string> diagnostics;
    ClassificationReport left, right;
};

InterdefReport interdefinable(const std::vector<MPoly>& a, const std::vector<MPoly>& b);

}  // namespace reduct
