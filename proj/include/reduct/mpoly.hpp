#pragma once

#include "reduct/rat.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>

namespace reduct {

// Monomial: variable name -> exponent. No zero exponents are stored; the
// empty map is the constant monomial.
using ExpVec = std::map<std::string, int>;

int expvec_total_degree(const ExpVec& e);

// Graded lexicographic order: total degree first, then lexicographic with
// alphabetically earlier variables more significant.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Q. Immutable in spirit: operations
// return new values, nothing mutates its arguments.
class MPoly {
  public:
    using Terms = std::map<ExpVec, Rat, GrlexLess>;

    MPoly() = default;  // zero
    explicit MPoly(const Rat& c);
    explicit MPoly(long c) : MPoly(Rat(c)) {}
    static MPoly var(const std::string& name);
    static MPoly term(const Rat& coeff, const ExpVec& monomial);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (0 for the zero polynomial).
    Rat constant_value() const;

    const Terms& terms() const { return terms_; }
    Rat coeff(const ExpVec& monomial) const;
    // Grlex-largest term; polynomial must be nonzero.
    const std::pair<const ExpVec, Rat>& leading() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly pow(unsigned long e) const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly derivative(const std::string& v) const;
    MPoly substitute(const std::string& v, const MPoly& replacement) const;

    int degree_in(const std::string& v) const;  // 0 when v is absent
    int total_degree() const;                   // 0 for the zero polynomial
    std::set<std::string> support() const;

    // Full evaluation; every support variable must be present in the point.
    Rat eval(const std::map<std::string, Rat>& point) const;

    // Positive gcd of all coefficients (0 for the zero polynomial).
    Rat content() const;
    // Integer-primitive with positive grlex-leading coefficient.
    MPoly normalized_primitive() const;

    // Canonical text form, grlex-descending, explicit '*'; parse round-trips.
    std::string str() const;

    // Exact quotient a/b, or nullopt when b does not divide a. b != 0.
    static std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

  private:
    void add_term(const ExpVec& m, const Rat& c);
    Terms terms_;
};

// Total order and hash so MPoly can be used as a set element.
bool mpoly_less(const MPoly& a, const MPoly& b);
std::size_t mpoly_hash(const MPoly& p);

struct MPolyLess {
    bool operator()(const MPoly& a, const MPoly& b) const { return mpoly_less(a, b); }
};
struct MPolyHash {
    std::size_t operator()(const MPoly& p) const { return mpoly_hash(p); }
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

// A name based on `base` not contained in `used` ("s", "s0", "s1", ...).
std::string fresh_var(const std::string& base, const std::set<std::string>& used);

}  // namespace reduct
