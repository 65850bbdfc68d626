#include "reduct/unary.hpp"

#include <algorithm>
#include <stdexcept>

namespace reduct {

namespace {

UPoly identity_of(const UPoly& p) { return UPoly::var(p.var_name().empty() ? "x" : p.var_name()); }

UPoly linear_inverse(const UPoly& p) {
    // p = a*x + b with a != 0 inverts to (x - b)/a.
    Rat a = p.coeff(1);
    Rat b = p.coeff(0);
    return UPoly(p.var_name(), {-b / a, Rat(1) / a});
}

}  // namespace

UPoly iterate(const UPoly& p, long n) {
    if (n < 0) {
        if (p.degree() != 1) throw std::invalid_argument("inverse not polynomial");
        return iterate(linear_inverse(p), -n);
    }
    UPoly acc = identity_of(p);
    for (long i = 0; i < n; ++i) acc = p.compose(acc);
    return acc;
}

UPoly reflection(const UPoly& p) {
    if (p.degree() != 2) throw std::invalid_argument("reflection requires a degree-2 polynomial");
    Rat a = p.coeff(2);
    Rat b = p.coeff(1);
    UPoly r(p.var_name(), {-b / a, Rat(-1)});
    if (!(p.compose(r) == p)) throw std::logic_error("reflection identity failed");
    return r;
}

DefinableFamily definable_functions(const UPoly& p, int degree_bound) {
    DefinableFamily fam;
    auto push_unique = [&fam](const UPoly& q) {
        if (q.is_constant()) return;  // constants are covered by the flag
        if (std::find(fam.members.begin(), fam.members.end(), q) == fam.members.end())
            fam.members.push_back(q);
    };

    const int d = p.degree();
    if (d <= 0) {
        fam.kind = UnaryCase::constant;
        push_unique(identity_of(p));
        return fam;
    }
    if (d == 1) {
        fam.kind = UnaryCase::degree1;
        for (long n = -static_cast<long>(degree_bound); n <= degree_bound; ++n) push_unique(iterate(p, n));
        return fam;
    }
    if (d == 2) {
        fam.kind = UnaryCase::degree2;
        UPoly r = reflection(p);
        UPoly it = identity_of(p);
        for (;;) {
            push_unique(it);
            push_unique(r.compose(it));
            if (it.degree() * 2 > degree_bound) break;
            it = p.compose(it);
        }
        return fam;
    }
    fam.kind = UnaryCase::degree_ge3;
    UPoly it = identity_of(p);
    for (;;) {
        push_unique(it);
        if (it.degree() * d > degree_bound) break;
        it = p.compose(it);
    }
    return fam;
}

namespace {

bool matches_with(const UPoly& q, const UPoly& cand, long n, const char* how, std::string* why) {
    if (!(q == cand)) return false;
    if (why) {
        *why = std::string(how);
        why->replace(why->find("{n}"), 3, std::to_string(n));
    }
    return true;
}

// Solve slope^n == target for integral n; exact rational comparisons only.
std::optional<long> slope_exponent(const Rat& a, const Rat& target) {
    if (target == 1) return 0;
    Rat abs_a = abs(a);
    if (abs_a == 1) return std::nullopt;  // handled separately by the caller
    Rat cur(1);
    if (abs(target) > 1) {
        if (abs_a < 1) {
            auto n = slope_exponent(Rat(1) / a, target);
            return n ? std::optional<long>(-*n) : std::nullopt;
        }
        for (long n = 1;; ++n) {
            cur *= a;
            if (cur == target) return n;
            if (abs(cur) > abs(target)) return std::nullopt;
        }
    } else {
        if (abs_a > 1) {
            auto n = slope_exponent(Rat(1) / a, target);
            return n ? std::optional<long>(-*n) : std::nullopt;
        }
        for (long n = 1;; ++n) {
            cur *= a;
            if (cur == target) return n;
            if (abs(cur) < abs(target)) return std::nullopt;
        }
    }
}

bool definable_degree1(const UPoly& q, const UPoly& p, std::string* why) {
    if (q.degree() != 1) return false;
    const Rat a = p.coeff(1);
    const Rat b = p.coeff(0);
    const UPoly id = identity_of(p);
    if (p == id) return matches_with(q, id, 0, "q is the identity iterate (n = {n})", why);
    if (a == 1) {
        // Translation lattice: p^n = x + n*b.
        Rat c = q.coeff(0);
        if (q.coeff(1) != 1) return false;
        Rat n = c / b;
        if (denominator(n) != 1) return false;
        long ni = numerator(n).convert_to<long>();
        return matches_with(q, iterate(p, ni), ni, "q = p^{n} (translation)", why);
    }
    if (a == -1) {
        // Involution: the iterates form a 2-cycle {id, p}.
        if (q == id) return matches_with(q, id, 0, "q = p^{n} (involution cycle)", why);
        if (q == p) return matches_with(q, p, 1, "q = p^{n} (involution cycle)", why);
        return false;
    }
    auto n = slope_exponent(a, q.coeff(1));
    if (!n) return false;
    return matches_with(q, iterate(p, *n), *n, "q = p^{n}", why);
}

bool definable_degree2(const UPoly& q, const UPoly& p, std::string* why) {
    const UPoly r = reflection(p);
    UPoly it = identity_of(p);
    long n = 0;
    for (;;) {
        if (it.degree() > q.degree()) return false;
        if (it.degree() == q.degree()) {
            if (matches_with(q, it, n, "q = p^{n}", why)) return true;
            return matches_with(q, r.compose(it), n, "q = r ∘ p^{n} with r the axis reflection", why);
        }
        it = p.compose(it);
        ++n;
    }
}

bool definable_degree_ge3(const UPoly& q, const UPoly& p, std::string* why) {
    UPoly it = identity_of(p);
    long n = 0;
    for (;;) {
        if (it.degree() > q.degree()) return false;
        if (it.degree() == q.degree()) return matches_with(q, it, n, "q = p^{n}", why);
        it = p.compose(it);
        ++n;
    }
}

}  // namespace

bool is_definable_from(const UPoly& q, const UPoly& p, std::string* why) {
    if (q.is_constant()) {
        if (why) *why = "q is a constant map";
        return true;
    }
    // Compare in a single variable; names are immaterial to composition.
    const UPoly qn = p.is_constant() ? q : q.with_var(p.var_name());
    const int d = p.degree();
    if (d <= 0) {
        return matches_with(qn, identity_of(qn), 0, "q is the identity (n = {n})", why);
    }
    if (d == 1) return definable_degree1(qn, p, why);
    if (d == 2) return definable_degree2(qn, p, why);
    return definable_degree_ge3(qn, p, why);
}

UnaryInterdef interdefinable_unary(const UPoly& p, const UPoly& q) {
    UnaryInterdef out;
    std::string fwd, bwd;
    bool qp = is_definable_from(q, p, &fwd);
    bool pq = is_definable_from(p, q, &bwd);
    out.interdefinable = qp && pq;
    if (out.interdefinable) {
        out.explanation = "each defines the other: " + fwd + "; conversely " + bwd;
    } else if (!qp) {
        out.explanation = "second polynomial is not definable from the first";
    } else {
        out.explanation = "first polynomial is not definable from the second";
    }

    const UPoly idp = identity_of(p);
    const UPoly qn = p.is_constant() || q.is_constant() ? q : q.with_var(p.var_name());
    bool clause1 = (p.is_constant() || p == idp) && (q.is_constant() || q == identity_of(q));
    bool clause2 = p.degree() == 1 && qn.degree() == 1 && p.compose(qn) == idp && qn.compose(p) == idp;
    out.clause_verdict = clause1 || clause2;
    out.discrepancy = out.clause_verdict != out.interdefinable;
    return out;
}

}  // namespace reduct
