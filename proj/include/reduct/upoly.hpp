#pragma once

#include "reduct/mpoly.hpp"
#include "reduct/rat.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace reduct {

// Dense univariate polynomial over Q. Constants carry an empty variable
// name; two polynomials can be combined when their names agree or either
// side is constant.
class UPoly {
  public:
    UPoly() = default;  // zero
    explicit UPoly(const Rat& c);
    explicit UPoly(long c) : UPoly(Rat(c)) {}
    UPoly(std::string var, std::vector<Rat> coeffs);
    static UPoly var(const std::string& name);

    static UPoly from_mpoly(const MPoly& p);  // throws if more than one variable
    MPoly to_mpoly() const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::string& var_name() const { return var_; }

    Rat coeff(int i) const;
    const Rat& lc() const;  // leading coefficient; nonzero polynomial only
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat at(const Rat& x) const;  // Horner evaluation
    // Evaluate with a polynomial argument (this ∘ arg as an MPoly).
    MPoly at(const MPoly& arg) const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const Rat& c) const;
    UPoly pow(unsigned long e) const;
    friend bool operator==(const UPoly& a, const UPoly& b);

    UPoly derivative() const;
    // Formal antiderivative with zero constant term. The hint names the
    // integration variable when this polynomial is a constant.
    UPoly antiderivative(const std::string& var_hint = "") const;
    UPoly compose(const UPoly& inner) const;  // this ∘ inner
    UPoly shifted_arg(const Rat& s) const;    // p(x + s)

    UPoly monic() const;                 // nonzero only
    UPoly normalized_primitive() const;  // integer coefficients, gcd 1, positive lc
    UPoly with_var(const std::string& v) const;

    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

  private:
    void trim();
    std::string var_;          // empty iff constant (or zero)
    std::vector<Rat> coeffs_;  // coeffs_[i] multiplies var^i; no trailing zeros
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

// Monic gcd; rejects the case where both inputs are zero.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

// p / gcd(p, p'), integer-primitive with positive leading coefficient.
UPoly squarefree_part(const UPoly& p);

// All rational roots, ascending, no repeats. p must be nonzero.
std::vector<Rat> rational_roots(const UPoly& p);

// Monic u0 with p = lc(p)/lc(u0^k) ... precisely: p = c * u0^k for the
// constant c = lc(p). nullopt when no such u0 exists. p != 0, k >= 1.
std::optional<UPoly> poly_kth_root(const UPoly& p, unsigned k);

// The unique f with q = f ∘ w, if it exists (greedy top-term elimination).
// deg(w) >= 1 required.
std::optional<UPoly> inner_compose_solve(const UPoly& q, const UPoly& w);

// Solution set for a twist center: a squarefree witness polynomial plus all
// of its rational roots. A zero witness marks "every center is valid".
struct RootDescriptor {
    UPoly witness;
    std::vector<Rat> roots;
    bool all_valid() const { return witness.is_zero(); }
};

RootDescriptor make_root_descriptor(const UPoly& g);

}  // namespace reduct
