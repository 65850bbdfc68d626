#include "reduct/classify.hpp"

#include "reduct/unary.hpp"

#include <map>
#include <stdexcept>

namespace reduct {

bool is_unary(const MPoly& p) { return p.support().size() <= 1; }

bool is_linear(const MPoly& p) { return p.total_degree() <= 1; }

MPoly expand_twist(const TwistCertificate& cert) {
    MPoly prod(cert.base_constant);
    for (const auto& [v, e] : cert.exponents)
        prod *= (MPoly::var(v) - MPoly(cert.center)).pow(static_cast<unsigned long>(e));
    return prod + MPoly(cert.center);
}

namespace {

// Coefficients of p(x1+s, ..., xn+s) - s, bucketed by the monomial in the
// original variables; each bucket is a univariate polynomial in s.
std::map<ExpVec, UPoly, GrlexLess> shift_buckets(const MPoly& p, const std::string& s) {
    MPoly q = p;
    for (const auto& v : p.support()) q = q.substitute(v, MPoly::var(v) + MPoly::var(s));
    q -= MPoly::var(s);

    std::map<ExpVec, UPoly, GrlexLess> buckets;
    std::map<ExpVec, MPoly, GrlexLess> raw;
    for (const auto& [m, c] : q.terms()) {
        ExpVec rest = m;
        int e = 0;
        auto it = rest.find(s);
        if (it != rest.end()) {
            e = it->second;
            rest.erase(it);
        }
        raw[rest] += MPoly::term(c, ExpVec{{s, e}});
    }
    for (const auto& [m, c] : raw) buckets.emplace(m, UPoly::from_mpoly(c));
    return buckets;
}

}  // namespace

bool twist_holds_modulo(const MPoly& p, const Rat& base_constant, const ExpVec& exponents,
                        const UPoly& witness) {
    if (witness.is_zero()) {
        // "Every center" marker: the identity must hold with s left symbolic.
        const std::string s = fresh_var("s", p.support());
        MPoly rhs(base_constant);
        for (const auto& [v, e] : exponents)
            rhs *= (MPoly::var(v) - MPoly::var(s)).pow(static_cast<unsigned long>(e));
        rhs += MPoly::var(s);
        return p == rhs;
    }
    const std::string s = witness.var_name().empty() ? "s" : witness.var_name();
    MPoly rhs(base_constant);
    for (const auto& [v, e] : exponents)
        rhs *= (MPoly::var(v) - MPoly::var(s)).pow(static_cast<unsigned long>(e));
    rhs += MPoly::var(s);
    MPoly diff = p - rhs;
    // Divisibility of every s-coefficient by the witness.
    std::map<ExpVec, MPoly, GrlexLess> raw;
    for (const auto& [m, c] : diff.terms()) {
        ExpVec rest = m;
        auto it = rest.find(s);
        int e = 0;
        if (it != rest.end()) {
            e = it->second;
            rest.erase(it);
        }
        raw[rest] += MPoly::term(c, ExpVec{{s, e}});
    }
    for (const auto& [m, c] : raw) {
        auto [q, r] = divmod(UPoly::from_mpoly(c), witness);
        if (!r.is_zero()) return false;
    }
    return true;
}

std::optional<TwistScan> twist_candidates(const MPoly& p) {
    if (p.is_constant()) throw std::invalid_argument("constant polynomial; classify at collection level");

    const std::string s = fresh_var("s", p.support());
    auto buckets = shift_buckets(p, s);

    ExpVec top;
    for (const auto& v : p.support()) top[v] = p.degree_in(v);

    auto top_it = buckets.find(top);
    if (top_it == buckets.end()) return std::nullopt;  // top multi-degree monomial missing
    if (!top_it->second.is_constant())
        throw std::logic_error("top coefficient is not constant under shifting");
    Rat c = top_it->second.coeff(0);

    UPoly g;
    bool any = false;
    for (const auto& [m, poly_s] : buckets) {
        if (m == top) continue;
        any = true;
        g = g.is_zero() ? poly_s.monic() : upoly_gcd(g, poly_s);
        if (g.is_constant()) break;
    }

    TwistScan scan;
    scan.base_constant = c;
    scan.exponents = top;
    if (!any) {
        // All non-top coefficients vanish identically: every center is valid.
        scan.centers = RootDescriptor{UPoly(), {}};
        return scan;
    }
    if (g.is_constant()) return std::nullopt;

    scan.centers = make_root_descriptor(g.with_var(s));
    for (const Rat& r : scan.centers.roots) {
        TwistCertificate cert{r, c, top};
        if (!(expand_twist(cert) == p)) throw std::logic_error("twist certificate failed re-expansion");
        scan.rational_certs.push_back(std::move(cert));
    }
    if (!twist_holds_modulo(p, c, top, scan.centers.witness))
        throw std::logic_error("twist witness failed the modular identity check");
    return scan;
}

std::optional<CommonTwist> common_twist(const std::vector<MPoly>& ps) {
    if (ps.empty()) throw std::invalid_argument("empty collection");

    UPoly g;  // zero = no constraint yet (every center still valid)
    const std::string s = "s";
    for (const auto& p : ps) {
        UPoly constraint;
        if (p.is_constant()) {
            // A constant c is a twisted monomial only for center c.
            constraint = UPoly(s, {-p.constant_value(), Rat(1)});
        } else {
            auto scan = twist_candidates(p);
            if (!scan) return std::nullopt;
            if (scan->centers.all_valid()) continue;
            constraint = scan->centers.witness.with_var(s);
        }
        g = g.is_zero() ? constraint.monic() : upoly_gcd(g, constraint);
        if (g.is_constant()) return std::nullopt;
    }

    CommonTwist ct;
    if (g.is_zero()) {
        ct.all_centers = true;
        return ct;
    }
    RootDescriptor rd = make_root_descriptor(g);
    ct.witness = rd.witness;
    ct.centers = rd.roots;
    if (ct.witness.degree() == 1) ct.unique_center = ct.centers.front();
    return ct;
}

std::string case_name(Case c) {
    switch (c) {
        case Case::I_unary: return "I_unary";
        case Case::II_vector_space: return "II_vector_space";
        case Case::III_twisted_mult: return "III_twisted_mult";
        case Case::IV_full_field: return "IV_full_field";
    }
    return "?";
}

ClassificationReport classify(const std::vector<MPoly>& ps) {
    if (ps.empty()) throw std::invalid_argument("empty collection");

    ClassificationReport rep;

    bool all_unary = true;
    for (const auto& p : ps) all_unary = all_unary && is_unary(p);
    if (all_unary) {
        rep.kind = Case::I_unary;
        for (const auto& p : ps) rep.evidence.push_back(p.str() + ": involves at most one variable");
        // A unary collection can simultaneously consist of twisted monomials
        // with a shared center; the unary case takes precedence, noted here.
        if (common_twist(ps))
            rep.evidence.push_back(
                "note: every member is also a monomial twisted by a common center; "
                "the unary classification takes precedence");
        return rep;
    }

    bool all_linear = true;
    for (const auto& p : ps) all_linear = all_linear && is_linear(p);
    if (all_linear) {
        rep.kind = Case::II_vector_space;
        for (const auto& p : ps)
            for (const auto& [m, c] : p.terms())
                if (expvec_total_degree(m) == 1) rep.generators.push_back(c);
        return rep;
    }

    if (auto ct = common_twist(ps)) {
        rep.kind = Case::III_twisted_mult;
        rep.twist = *ct;
        if (ct->unique_center) {
            for (const auto& p : ps) {
                if (p.is_constant()) {
                    rep.certificates.push_back(TwistCertificate{*ct->unique_center, Rat(0), {}});
                    continue;
                }
                auto scan = twist_candidates(p);
                rep.certificates.push_back(TwistCertificate{*ct->unique_center, scan->base_constant, scan->exponents});
            }
        }
        return rep;
    }

    rep.kind = Case::IV_full_field;
    bool mixed_possible = true;
    for (const auto& p : ps) {
        if (is_linear(p)) {
            rep.evidence.push_back(p.str() + ": linear");
            continue;
        }
        auto scan = twist_candidates(p);  // p is nonconstant here: constants are linear
        if (!scan) {
            rep.evidence.push_back(p.str() + ": neither linear nor a twisted monomial");
            mixed_possible = false;
        } else if (scan->centers.roots.empty() && !scan->centers.all_valid()) {
            rep.evidence.push_back(p.str() + ": twist centers exist but none is rational");
        } else {
            rep.evidence.push_back(p.str() + ": twisted monomial (its centers do not extend to the whole collection)");
        }
    }
    if (mixed_possible)
        rep.evidence.push_back("collection mixes linear and twisted members or twist centers disagree");
    return rep;
}

namespace {

bool same_center(const CommonTwist& a, const CommonTwist& b) {
    if (a.all_centers || b.all_centers) return true;  // unreachable in case III, kept for safety
    if (a.unique_center && b.unique_center) return *a.unique_center == *b.unique_center;
    return a.witness == b.witness && a.centers == b.centers;
}

}  // namespace

InterdefReport interdefinable(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
    InterdefReport rep{InterdefVerdict::no, "", {}, classify(a), classify(b)};
    const Case ca = rep.left.kind;
    const Case cb = rep.right.kind;

    if (ca != cb) {
        rep.verdict = InterdefVerdict::no;
        rep.explanation = "different classification cases: " + case_name(ca) + " vs " + case_name(cb);
        return rep;
    }
    switch (ca) {
        case Case::I_unary: {
            if (a.size() == 1 && b.size() == 1) {
                UnaryInterdef u = interdefinable_unary(UPoly::from_mpoly(a.front()), UPoly::from_mpoly(b.front()));
                rep.verdict = u.interdefinable ? InterdefVerdict::yes : InterdefVerdict::no;
                rep.explanation = u.explanation;
                if (u.discrepancy)
                    rep.diagnostics.push_back(
                        "family-based verdict differs from the narrow closed-form clauses "
                        "(identity/constant pair or inverse linear maps); the degree-2 reflection "
                        "produces interdefinable pairs the clauses miss");
                return rep;
            }
            rep.verdict = InterdefVerdict::undetermined_case_I;
            rep.explanation = "both collections are unary; interdefinability is only decided for single polynomials";
            return rep;
        }
        case Case::II_vector_space:
            rep.verdict = InterdefVerdict::yes;
            rep.explanation = "both are vector-space collections over Q (all rational coefficients generate Q)";
            return rep;
        case Case::III_twisted_mult: {
            bool same = same_center(*rep.left.twist, *rep.right.twist);
            rep.verdict = same ? InterdefVerdict::yes : InterdefVerdict::no;
            if (same) {
                rep.explanation = "both collections are twisted monomials with the same center";
            } else {
                std::string lc = rep.left.twist->unique_center ? rat_str(*rep.left.twist->unique_center) : "?";
                std::string rc = rep.right.twist->unique_center ? rat_str(*rep.right.twist->unique_center) : "?";
                rep.explanation = "twist centers differ: " + lc + " vs " + rc;
            }
            return rep;
        }
        case Case::IV_full_field:
            rep.verdict = InterdefVerdict::yes;
            rep.explanation = "both collections recover the full field, hence define each other";
            return rep;
    }
    return rep;
}

}  // namespace reduct
