#pragma once

#include "reduct/mpoly.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace reduct {

// Raised whenever a desk-scale size guard would be exceeded. Guards reject,
// they never truncate silently.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned long long kMaxSetElements = 1000000ull;    // 10^6
inline constexpr unsigned long long kMaxEvaluations = 100000000ull;  // 10^8

// Exact N-element arithmetic / geometric progressions.
std::vector<Rat> ap_set(const Rat& start, const Rat& step, long long n);
std::vector<Rat> gp_set(const Rat& start, const Rat& ratio, long long n);

// Bounded-coefficient combinations of low-degree monomials in the
// generators. Formal mode keeps the generators symbolic (collision-free);
// integer mode specializes them and reports collisions instead of assuming
// them away.
struct WitnessParams {
    std::vector<std::string> generators;  // non-empty, distinct names
    std::vector<Int> integer_values;      // empty = formal mode; else distinct integers >= 2
    int degree_cap = 2;                   // per-variable degree < degree_cap
    long coeff_bound = 2;                 // coefficients in {0, ..., coeff_bound-1}

    bool formal() const { return integer_values.empty(); }
};

struct WitnessSet {
    bool formal = true;
    std::vector<MPoly> elements;        // formal mode (exactly combinations entries)
    std::vector<Rat> values;            // integer mode, distinct
    unsigned long long combinations = 0;  // coeff_bound ^ |monomial basis|
    unsigned long long collisions = 0;    // integer mode: combinations - |values|
};

WitnessSet witness_B(const WitnessParams& params);

// Does alpha*B + beta*B stay inside the bounded-coefficient set with degree
// cap target_cap and coefficient bound target_bound (defaults: cap+1, 2r)?
// alpha/beta are generator names or "1". Within the evaluation guard every
// pair is enumerated; above it the verdict comes from the exact per-monomial
// coefficient-range argument (formal coefficients are independent across
// monomials), which checks the same condition without materializing pairs.
struct ContainmentResult {
    bool holds = false;
    std::optional<MPoly> counterexample;
    unsigned long long pairs_checked = 0;
    bool exhaustive_pairs = false;
};

ContainmentResult containment_check(const std::string& alpha, const std::string& beta,
                                    const WitnessParams& params, int target_cap = -1,
                                    long target_bound = -1);

// The per-monomial decision on its own (no pair enumeration); exact in
// formal mode. containment_check falls back to this above the pair guard,
// and tests cross-validate the two on small grids.
ContainmentResult containment_check_structural(const std::string& alpha, const std::string& beta,
                                               const WitnessParams& params, int target_cap = -1,
                                               long target_bound = -1);

// |{P(a,b) : a in A, b in B}| over exact rational values. The unqualified
// version is the OpenMP kernel (compiled term list, per-thread sets); the
// _serial version is the plain reference implementation kept for testing.
unsigned long long image_size(const MPoly& P, const std::vector<Rat>& A, const std::vector<Rat>& B);
unsigned long long image_size_serial(const MPoly& P, const std::vector<Rat>& A,
                                     const std::vector<Rat>& B);

// Same, with formal (polynomial) elements.
unsigned long long image_size_formal(const MPoly& P, const std::vector<MPoly>& A,
                                     const std::vector<MPoly>& B);
unsigned long long image_size_formal_serial(const MPoly& P, const std::vector<MPoly>& A,
                                            const std::vector<MPoly>& B);

enum class Family { ap, gp, witness };

struct ExpansionRow {
    long long set_size = 0;
    unsigned long long image = 0;
    double exponent = 0.0;  // log(image)/log(set_size)
};

// One row per requested size. ap: {0, 1, ..., N-1}; gp: {1, 2, 4, ...};
// witness: sizes are taken as coefficient bounds and N is the realized set
// size. Sizes must be ascending.
std::vector<ExpansionRow> expansion_series(const MPoly& P, Family family,
                                           const std::vector<long long>& sizes,
                                           const WitnessParams* witness_params = nullptr);

// log|Z| / log|S| for Z the union of tau_i*S + tau_j*S over the given pairs
// of generator names (or "1"), S the formal witness set.
double zk_ratio(const WitnessParams& params,
                const std::vector<std::pair<std::string, std::string>>& pairs);

// Round to 3 decimals, ties to even; deterministic rendering of exponents.
double round_milli(double x);
std::string format_exponent(double x);

// CSV with header "N,image_size,exponent".
void write_csv(std::ostream& os, const std::vector<ExpansionRow>& rows);

}  // namespace reduct
