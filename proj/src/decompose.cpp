#include "reduct/decompose.hpp"

#include "reduct/fraction.hpp"

#include <stdexcept>
#include <vector>

namespace reduct {

namespace {

struct VarPair {
    std::string x, y;
};

VarPair bivariate_vars(const MPoly& P) {
    auto vars = P.support();
    if (vars.size() != 2) throw std::invalid_argument("not genuinely bivariate");
    auto it = vars.begin();
    VarPair vp{*it, *std::next(it)};
    return vp;
}

// Coefficient of var^k in P, as a polynomial in the remaining variables.
MPoly coeff_of_power(const MPoly& P, const std::string& var, int k) {
    MPoly out;
    for (const auto& [m, c] : P.terms()) {
        auto it = m.find(var);
        int e = it == m.end() ? 0 : it->second;
        if (e != k) continue;
        ExpVec rest = m;
        if (it != m.end()) rest.erase(var);
        out += MPoly::term(c, rest);
    }
    return out;
}

// Smallest y0 in 0,1,2,... keeping deg_x P intact and satisfying extra.
Rat pick_specialization(const MPoly& P, const VarPair& vp, const UPoly* avoid_root_of) {
    UPoly lcx = UPoly::from_mpoly(coeff_of_power(P, vp.x, P.degree_in(vp.x)));
    for (long k = 0;; ++k) {
        Rat y0(k);
        if (lcx.at(y0) == 0) continue;
        if (avoid_root_of != nullptr && avoid_root_of->at(y0) == 0) continue;
        return y0;
    }
}

// One nonzero kernel vector of the homogeneous system, or nullopt.
std::optional<std::vector<Rat>> kernel_vector(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return std::nullopt;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    std::vector<size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        is_pivot[c] = true;
        pivot_cols.push_back(c);
        ++r;
    }
    size_t free_col = cols;
    for (size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    if (free_col == cols) return std::nullopt;
    std::vector<Rat> v(cols, Rat(0));
    v[free_col] = 1;
    for (size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free_col];
    return v;
}

// First nontrivial z with z'(x)*den(x) = c_k * z(x)*num(x), where c_k is the
// leading-coefficient match forced at each candidate degree k. Solutions of
// the true derivative-ratio equation are unique up to scalar, so the search
// returns the primitive base the input is a power of.
std::optional<UPoly> ratio_base(const UPoly& num, const UPoly& den, int max_deg,
                                const std::string& var) {
    for (int k = 1; k <= max_deg; ++k) {
        // Leading coefficients force the proportionality constant at degree k.
        Rat c = Rat(k) * den.lc() / num.lc();
        const int deg_out = std::max(k - 1 + den.degree(), k + num.degree());
        std::vector<std::vector<Rat>> rows(static_cast<size_t>(deg_out) + 1,
                                           std::vector<Rat>(static_cast<size_t>(k) + 1, Rat(0)));
        for (int i = 0; i <= k; ++i) {
            // z' contribution: i * z_i at degree i-1, times den.
            for (int j = 0; j <= den.degree(); ++j)
                if (i >= 1) rows[static_cast<size_t>(i - 1 + j)][static_cast<size_t>(i)] += Rat(i) * den.coeff(j);
            // -c * z * num contribution.
            for (int j = 0; j <= num.degree(); ++j)
                rows[static_cast<size_t>(i + j)][static_cast<size_t>(i)] -= c * num.coeff(j);
        }
        auto z = kernel_vector(rows);
        if (z) {
            UPoly base(var, *z);
            if (base.degree() >= 1) return base.monic();
        }
    }
    return std::nullopt;
}

MPoly compose_additive(const UPoly& f, const UPoly& u, const UPoly& v) {
    return f.at(u.to_mpoly() + v.to_mpoly());
}

MPoly compose_multiplicative(const UPoly& f, const UPoly& u, const UPoly& v) {
    return f.at(u.to_mpoly() * v.to_mpoly());
}

}  // namespace

std::optional<AdditiveDecomp> weak_additive(const MPoly& P) {
    VarPair vp = bivariate_vars(P);
    auto [N, D] = reduce_fraction(P.derivative(vp.x), P.derivative(vp.y));

    for (const auto& v : N.support())
        if (v != vp.x) return std::nullopt;
    for (const auto& v : D.support())
        if (v != vp.y) return std::nullopt;

    UPoly u_raw = UPoly::from_mpoly(N).antiderivative(vp.x);
    UPoly v_raw = UPoly::from_mpoly(D).antiderivative(vp.y);
    if (u_raw.is_constant() || v_raw.is_constant()) return std::nullopt;

    // Shared rescale making u monic; both already have zero constant term.
    Rat lambda = u_raw.lc();
    UPoly u = u_raw.monic();
    UPoly v = v_raw.scaled(Rat(1) / lambda);

    Rat y0 = pick_specialization(P, vp, nullptr);
    UPoly q = UPoly::from_mpoly(P.substitute(vp.y, MPoly(y0))).with_var(vp.x);
    UPoly w = u + UPoly(v.at(y0));
    auto f = inner_compose_solve(q, w);
    if (!f) return std::nullopt;

    if (!(compose_additive(*f, u, v) == P)) return std::nullopt;
    return AdditiveDecomp{*f, u, v, std::nullopt};
}

std::optional<MultiplicativeDecomp> weak_multiplicative(const MPoly& P) {
    VarPair vp = bivariate_vars(P);
    auto [N, D] = reduce_fraction(P.derivative(vp.x), P.derivative(vp.y));

    auto nsplit = rank1_separate(N, vp.x, vp.y);
    auto dsplit = rank1_separate(D, vp.x, vp.y);
    if (!nsplit || !dsplit) return std::nullopt;
    const auto& [n1, n2] = *nsplit;
    const auto& [d1, d2] = *dsplit;
    if (n1.is_zero() || n2.is_zero() || d1.is_zero() || d2.is_zero()) return std::nullopt;

    const int degx = P.degree_in(vp.x);
    const int degy = P.degree_in(vp.y);
    auto ubase = ratio_base(n1, d1, degx, vp.x);
    if (!ubase) return std::nullopt;
    auto vbase = ratio_base(d2, n2, degy, vp.y);
    if (!vbase) return std::nullopt;

    const int ju_max = degx / ubase->degree();
    const int jv_max = degy / vbase->degree();
    for (int total = 2; total <= ju_max + jv_max; ++total) {
        for (int ju = 1; ju < total; ++ju) {
            int jv = total - ju;
            if (ju > ju_max || jv > jv_max) continue;
            UPoly u = ubase->pow(static_cast<unsigned long>(ju));
            UPoly v = vbase->pow(static_cast<unsigned long>(jv));
            Rat y0 = pick_specialization(P, vp, &v);
            UPoly q = UPoly::from_mpoly(P.substitute(vp.y, MPoly(y0))).with_var(vp.x);
            UPoly w = u.scaled(v.at(y0));
            auto f = inner_compose_solve(q, w);
            if (!f) continue;
            if (compose_multiplicative(*f, u, v) == P)
                return MultiplicativeDecomp{*f, u, v, std::nullopt};
        }
    }
    return std::nullopt;
}

std::optional<StrongAdditive> strengthen_additive(const AdditiveDecomp& dec, const MPoly& P) {
    const UPoly& u = dec.u;
    const UPoly& v = dec.v;
    if (u.degree() != v.degree()) return std::nullopt;
    Rat lambda = v.lc();  // u is monic
    if (!(v.with_var(u.var_name()) == u.scaled(lambda))) return std::nullopt;

    StrongAdditive s{u.with_var("t"), Rat(1), lambda, dec.f};
    MPoly ux = s.u_common.at(MPoly::var(bivariate_vars(P).x));
    MPoly uy = s.u_common.at(MPoly::var(bivariate_vars(P).y));
    MPoly arg = ux * MPoly(s.c1) + uy * MPoly(s.c2);
    if (!(s.f_adjusted.at(arg) == P)) return std::nullopt;
    if (P.degree_in(bivariate_vars(P).x) != P.degree_in(bivariate_vars(P).y))
        throw std::logic_error("strongly additive certificate with unequal partial degrees");
    return s;
}

std::optional<StrongMultiplicative> strengthen_multiplicative(const MultiplicativeDecomp& dec,
                                                              const MPoly& P) {
    const UPoly& u = dec.u;
    const UPoly& v = dec.v;
    const int du = u.degree();
    const int dv = v.degree();
    if (du < 1 || dv < 1) return std::nullopt;
    for (int d = 1; d <= std::min(du, dv); ++d) {
        if (du % d != 0 || dv % d != 0) continue;
        unsigned m = static_cast<unsigned>(du / d);
        unsigned n = static_cast<unsigned>(dv / d);
        auto r1 = poly_kth_root(u, m);
        if (!r1) continue;
        auto r2 = poly_kth_root(v, n);
        if (!r2) continue;
        if (!(r1->with_var("t") == r2->with_var("t"))) continue;
        StrongMultiplicative s{r1->with_var("t"), m, n, dec.f};
        VarPair vp = bivariate_vars(P);
        MPoly arg = s.u0.at(MPoly::var(vp.x)).pow(m) * s.u0.at(MPoly::var(vp.y)).pow(n);
        if (s.f_adjusted.at(arg) == P) return s;
    }
    return std::nullopt;
}

ERVerdict er_classify(const MPoly& P) {
    bivariate_vars(P);  // validates the precondition
    ERVerdict out;
    auto add = weak_additive(P);
    auto mul = weak_multiplicative(P);
    if (add && mul) throw std::logic_error("polynomial certified both additive and multiplicative");
    if (add) {
        add->strong = strengthen_additive(*add, P);
        out.tag = ERTag::Additive;
        out.additive = std::move(add);
    } else if (mul) {
        mul->strong = strengthen_multiplicative(*mul, P);
        out.tag = ERTag::Multiplicative;
        out.multiplicative = std::move(mul);
    }
    return out;
}

std::string er_tag_name(ERTag t) {
    switch (t) {
        case ERTag::Additive: return "Additive";
        case ERTag::Multiplicative: return "Multiplicative";
        case ERTag::Neither: return "Neither";
    }
    return "?";
}

}  // namespace reduct
