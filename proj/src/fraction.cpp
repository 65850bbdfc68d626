#include "reduct/fraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace reduct {

namespace {

// View of a bivariate polynomial as dense coefficients in the main variable,
// each coefficient a polynomial in the remaining variable.
std::vector<MPoly> coeffs_in(const MPoly& p, const std::string& main) {
    std::vector<MPoly> out(static_cast<size_t>(p.degree_in(main)) + 1);
    for (const auto& [m, c] : p.terms()) {
        ExpVec rest = m;
        int e = 0;
        auto it = rest.find(main);
        if (it != rest.end()) {
            e = it->second;
            rest.erase(it);
        }
        out[static_cast<size_t>(e)] += MPoly::term(c, rest);
    }
    return out;
}

MPoly assemble(const std::vector<MPoly>& cs, const std::string& main) {
    MPoly r;
    MPoly x = MPoly::var(main);
    for (size_t i = 0; i < cs.size(); ++i)
        if (!cs[i].is_zero()) r += cs[i] * x.pow(i);
    return r;
}

void trim(std::vector<MPoly>& cs) {
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
}

// Gcd of the coefficients of p in the main variable, as a polynomial in the
// other variable (integer-primitive, positive leading).
MPoly content_in(const std::vector<MPoly>& cs) {
    UPoly g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        UPoly u = UPoly::from_mpoly(c);
        g = g.is_zero() ? u : upoly_gcd(g, u);
        if (g.is_constant()) break;
    }
    return g.normalized_primitive().to_mpoly();
}

std::vector<MPoly> divide_coeffs(const std::vector<MPoly>& cs, const MPoly& d) {
    std::vector<MPoly> out;
    out.reserve(cs.size());
    for (const auto& c : cs) {
        if (c.is_zero()) {
            out.push_back(MPoly());
            continue;
        }
        auto q = MPoly::divide_exact(c, d);
        if (!q) throw std::logic_error("content does not divide coefficient");
        out.push_back(std::move(*q));
    }
    return out;
}

// Pseudo-remainder of a by b in the main variable.
std::vector<MPoly> pseudo_rem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    const MPoly& lb = b.back();
    while (a.size() >= b.size()) {
        MPoly la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c = c * lb;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

MPoly gcd_two_vars(const MPoly& a, const MPoly& b, const std::string& main) {
    auto ca = coeffs_in(a, main);
    auto cb = coeffs_in(b, main);
    MPoly cont_a = content_in(ca);
    MPoly cont_b = content_in(cb);
    MPoly cont = bivariate_gcd(cont_a, cont_b);  // univariate or constant: recursion bottoms out

    auto pa = divide_coeffs(ca, cont_a);
    auto pb = divide_coeffs(cb, cont_b);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    // Primitive PRS: take the primitive part after every pseudo-remainder.
    while (!pb.empty()) {
        auto r = pseudo_rem(pa, pb);
        if (!r.empty()) {
            r = divide_coeffs(r, content_in(r));
            MPoly scale(Rat(1) / assemble(r, main).content());
            for (auto& cc : r) cc = cc * scale;
        }
        pa = std::move(pb);
        pb = std::move(r);
    }
    auto pcs = divide_coeffs(pa, content_in(pa));
    return (cont * assemble(pcs, main)).normalized_primitive();
}

}  // namespace

MPoly bivariate_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd undefined for two zero polynomials");
    if (a.is_zero()) return b.normalized_primitive();
    if (b.is_zero()) return a.normalized_primitive();

    std::set<std::string> vars = a.support();
    for (const auto& v : b.support()) vars.insert(v);
    if (vars.size() > 2) throw std::invalid_argument("gcd supports at most two shared variables");

    if (vars.empty()) return MPoly(Rat(1));
    if (vars.size() == 1) {
        UPoly g = upoly_gcd(UPoly::from_mpoly(a), UPoly::from_mpoly(b));
        return g.normalized_primitive().to_mpoly();
    }
    const std::string main = *vars.rbegin();
    return gcd_two_vars(a, b, main);
}

std::pair<MPoly, MPoly> reduce_fraction(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    if (num.is_zero()) return {MPoly(), MPoly(Rat(1))};

    MPoly g = bivariate_gcd(num, den);
    auto n = MPoly::divide_exact(num, g);
    auto d = MPoly::divide_exact(den, g);
    if (!n || !d) throw std::logic_error("gcd does not divide its arguments");

    Rat c = rat_gcd(n->content(), d->content());
    if (d->leading().second < 0) c = -c;
    MPoly cinv(Rat(1) / c);
    return {*n * cinv, *d * cinv};
}

std::optional<std::pair<UPoly, UPoly>> rank1_separate(const MPoly& f, const std::string& x,
                                                      const std::string& y) {
    for (const auto& v : f.support())
        if (v != x && v != y) throw std::invalid_argument("polynomial not supported on {" + x + "," + y + "}");

    if (f.is_zero()) return std::make_pair(UPoly(Rat(1)), UPoly());

    // Coefficient matrix entries keyed by (deg_x, deg_y).
    std::map<std::pair<int, int>, Rat> m;
    for (const auto& [mono, c] : f.terms()) {
        auto ix = mono.find(x);
        auto iy = mono.find(y);
        m[{ix == mono.end() ? 0 : ix->second, iy == mono.end() ? 0 : iy->second}] = c;
    }
    auto [pi, pj] = m.begin()->first;
    const Rat& pivot = m.begin()->second;

    std::vector<Rat> gx(static_cast<size_t>(f.degree_in(x)) + 1, Rat(0));
    std::vector<Rat> hy(static_cast<size_t>(f.degree_in(y)) + 1, Rat(0));
    for (const auto& [ij, c] : m) {
        if (ij.second == pj) gx[static_cast<size_t>(ij.first)] = c;
        if (ij.first == pi) hy[static_cast<size_t>(ij.second)] = c / pivot;
    }
    UPoly g(x, std::move(gx));
    UPoly h(y, std::move(hy));

    // The product test is the rank decision.
    if (!(g.to_mpoly() * h.to_mpoly() == f)) return std::nullopt;
    Rat lc = g.lc();
    return std::make_pair(g.monic(), h.scaled(lc));
}

}  // namespace reduct
