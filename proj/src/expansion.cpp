#include "reduct/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reduct {

std::vector<Rat> ap_set(const Rat& start, const Rat& step, long long n) {
    if (step == 0) throw std::invalid_argument("arithmetic progression needs a nonzero step");
    if (n < 1) throw std::invalid_argument("set size must be positive");
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(n));
    Rat cur = start;
    for (long long i = 0; i < n; ++i) {
        out.push_back(cur);
        cur += step;
    }
    return out;
}

std::vector<Rat> gp_set(const Rat& start, const Rat& ratio, long long n) {
    if (start == 0) throw std::invalid_argument("geometric progression needs a nonzero start");
    if (ratio == 0 || ratio == 1 || ratio == -1)
        throw std::invalid_argument("geometric progression needs ratio outside {0, 1, -1}");
    if (n < 1) throw std::invalid_argument("set size must be positive");
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(n));
    Rat cur = start;
    for (long long i = 0; i < n; ++i) {
        out.push_back(cur);
        cur *= ratio;
    }
    return out;
}

namespace {

// Monomial basis of per-variable degree < cap over l generators, addressed
// in mixed radix: index = sum exps[i] * cap^i.
struct MonoBasis {
    int l = 0;
    int cap = 1;
    size_t size() const {
        size_t s = 1;
        for (int i = 0; i < l; ++i) s *= static_cast<size_t>(cap);
        return s;
    }
};

std::vector<int> mono_of_index(const MonoBasis& b, size_t idx) {
    std::vector<int> m(static_cast<size_t>(b.l), 0);
    for (int i = 0; i < b.l; ++i) {
        m[static_cast<size_t>(i)] = static_cast<int>(idx % static_cast<size_t>(b.cap));
        idx /= static_cast<size_t>(b.cap);
    }
    return m;
}

long long index_of_mono(const MonoBasis& b, const std::vector<int>& m) {
    long long idx = 0;
    long long mul = 1;
    for (int i = 0; i < b.l; ++i) {
        if (m[static_cast<size_t>(i)] < 0 || m[static_cast<size_t>(i)] >= b.cap) return -1;
        idx += m[static_cast<size_t>(i)] * mul;
        mul *= b.cap;
    }
    return idx;
}

MPoly mono_to_mpoly(const WitnessParams& p, const std::vector<int>& m) {
    ExpVec e;
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) e[p.generators[i]] = m[i];
    return MPoly::term(Rat(1), e);
}

void validate_params(const WitnessParams& p) {
    if (p.generators.empty()) throw std::invalid_argument("witness set needs at least one generator");
    std::set<std::string> names(p.generators.begin(), p.generators.end());
    if (names.size() != p.generators.size()) throw std::invalid_argument("generator names must be distinct");
    if (p.degree_cap < 1) throw std::invalid_argument("degree cap must be at least 1");
    if (p.coeff_bound < 2) throw std::invalid_argument("coefficient bound must be at least 2");
    if (!p.integer_values.empty()) {
        if (p.integer_values.size() != p.generators.size())
            throw std::invalid_argument("one integer value per generator required");
        std::set<Int> vals(p.integer_values.begin(), p.integer_values.end());
        if (vals.size() != p.integer_values.size() ||
            *std::min_element(p.integer_values.begin(), p.integer_values.end()) < 2)
            throw std::invalid_argument("integer specializations must be distinct and >= 2");
    }
}

unsigned long long combination_count(const WitnessParams& p, long bound, int cap) {
    MonoBasis b{static_cast<int>(p.generators.size()), cap};
    unsigned long long total = 1;
    for (size_t q = 0; q < b.size(); ++q) {
        total *= static_cast<unsigned long long>(bound);
        if (total > kMaxSetElements)
            throw guard_error("witness set would exceed the 10^6 element guard");
    }
    return total;
}

// Odometer over all coefficient vectors in {0..bound-1}^basis.
template <typename F>
void for_each_vector(size_t len, long bound, F&& fn) {
    std::vector<int> a(len, 0);
    for (;;) {
        fn(a);
        size_t i = 0;
        while (i < len && ++a[i] == bound) a[i++] = 0;
        if (i == len) break;
    }
}

}  // namespace

WitnessSet witness_B(const WitnessParams& params) {
    validate_params(params);
    WitnessSet out;
    out.formal = params.formal();
    out.combinations = combination_count(params, params.coeff_bound, params.degree_cap);

    MonoBasis basis{static_cast<int>(params.generators.size()), params.degree_cap};
    const size_t nb = basis.size();

    if (out.formal) {
        std::vector<MPoly> monos;
        monos.reserve(nb);
        for (size_t q = 0; q < nb; ++q) monos.push_back(mono_to_mpoly(params, mono_of_index(basis, q)));
        out.elements.reserve(out.combinations);
        for_each_vector(nb, params.coeff_bound, [&](const std::vector<int>& a) {
            MPoly e;
            for (size_t q = 0; q < nb; ++q)
                if (a[q] != 0) e += monos[q] * MPoly(Rat(a[q]));
            out.elements.push_back(std::move(e));
        });
        return out;
    }

    std::vector<Rat> mono_vals;
    mono_vals.reserve(nb);
    for (size_t q = 0; q < nb; ++q) {
        auto m = mono_of_index(basis, q);
        Rat v(1);
        for (size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) v *= Rat(params.integer_values[i]);
        mono_vals.push_back(v);
    }
    std::set<Rat> vals;
    for_each_vector(nb, params.coeff_bound, [&](const std::vector<int>& a) {
        Rat v(0);
        for (size_t q = 0; q < nb; ++q)
            if (a[q] != 0) v += mono_vals[q] * a[q];
        vals.insert(v);
    });
    out.values.assign(vals.begin(), vals.end());
    out.collisions = out.combinations - out.values.size();
    return out;
}

namespace {

int generator_index(const WitnessParams& p, const std::string& name) {
    if (name == "1") return -1;
    for (size_t i = 0; i < p.generators.size(); ++i)
        if (p.generators[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator: " + name);
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t seed = v.size();
        for (int x : v) seed = seed * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
        return seed;
    }
};

// Map a coefficient vector over the source basis into the target basis,
// scaled by one generator (or left alone for "1").
std::vector<long long> lift_indices(const MonoBasis& src, const MonoBasis& dst, int gen) {
    std::vector<long long> map(src.size());
    for (size_t q = 0; q < src.size(); ++q) {
        auto m = mono_of_index(src, q);
        if (gen >= 0) ++m[static_cast<size_t>(gen)];
        map[q] = index_of_mono(dst, m);
    }
    return map;
}

}  // namespace

namespace {

struct ContainmentSetup {
    int ga, gb;
    MonoBasis src, dst;
    std::vector<long long> la, lb;
    unsigned long long count;
};

ContainmentSetup containment_setup(const std::string& alpha, const std::string& beta,
                                   const WitnessParams& params, int& target_cap, long& target_bound) {
    validate_params(params);
    if (!params.formal()) throw std::invalid_argument("containment check runs in formal mode");
    if (target_cap < 0) target_cap = params.degree_cap + 1;
    if (target_bound < 0) target_bound = 2 * params.coeff_bound;
    ContainmentSetup s{generator_index(params, alpha),
                       generator_index(params, beta),
                       {static_cast<int>(params.generators.size()), params.degree_cap},
                       {static_cast<int>(params.generators.size()), target_cap},
                       {},
                       {},
                       combination_count(params, params.coeff_bound, params.degree_cap)};
    s.la = lift_indices(s.src, s.dst, s.ga);
    s.lb = lift_indices(s.src, s.dst, s.gb);
    return s;
}

MPoly materialize_pair(const WitnessParams& params, const ContainmentSetup& s,
                       const std::vector<int>& a, const std::vector<int>& b) {
    MPoly e;
    MPoly am = s.ga < 0 ? MPoly(Rat(1)) : MPoly::var(params.generators[static_cast<size_t>(s.ga)]);
    MPoly bm = s.gb < 0 ? MPoly(Rat(1)) : MPoly::var(params.generators[static_cast<size_t>(s.gb)]);
    for (size_t q = 0; q < s.src.size(); ++q) {
        MPoly mono = mono_to_mpoly(params, mono_of_index(s.src, q));
        if (a[q] != 0) e += am * mono * MPoly(Rat(a[q]));
        if (b[q] != 0) e += bm * mono * MPoly(Rat(b[q]));
    }
    return e;
}

}  // namespace

ContainmentResult containment_check_structural(const std::string& alpha, const std::string& beta,
                                               const WitnessParams& params, int target_cap,
                                               long target_bound) {
    ContainmentSetup s = containment_setup(alpha, beta, params, target_cap, target_bound);
    ContainmentResult res;
    res.holds = true;

    // Coefficients at distinct source monomials vary independently, so it
    // suffices that each scaled image lands inside the target basis and that
    // the extreme coefficient reachable at each target monomial fits.
    const long top = params.coeff_bound - 1;
    for (size_t q = 0; q < s.src.size(); ++q) {
        if (s.la[q] < 0 || s.lb[q] < 0) {
            std::vector<int> a(s.src.size(), 0);
            a[q] = static_cast<int>(top);
            res.holds = false;
            res.counterexample = materialize_pair(params, s, a, a);
            return res;
        }
    }
    std::vector<long> worst(s.dst.size(), 0);
    for (size_t q = 0; q < s.src.size(); ++q) {
        worst[static_cast<size_t>(s.la[q])] += top;
        worst[static_cast<size_t>(s.lb[q])] += top;
    }
    for (long w : worst) {
        if (w >= target_bound) {
            std::vector<int> a(s.src.size(), static_cast<int>(top));
            res.holds = false;
            res.counterexample = materialize_pair(params, s, a, a);
            return res;
        }
    }
    return res;
}

ContainmentResult containment_check(const std::string& alpha, const std::string& beta,
                                    const WitnessParams& params, int target_cap, long target_bound) {
    ContainmentSetup s = containment_setup(alpha, beta, params, target_cap, target_bound);

    if (s.count * s.count > kMaxEvaluations)
        return containment_check_structural(alpha, beta, params, target_cap, target_bound);

    ContainmentResult res;
    res.holds = true;
    res.exhaustive_pairs = true;
    std::vector<std::vector<int>> all;
    all.reserve(s.count);
    for_each_vector(s.src.size(), params.coeff_bound, [&](const std::vector<int>& a) { all.push_back(a); });
    std::vector<int> z(s.dst.size(), 0);
    for (const auto& a : all) {
        for (const auto& b : all) {
            ++res.pairs_checked;
            bool ok = true;
            std::fill(z.begin(), z.end(), 0);
            for (size_t q = 0; q < s.src.size(); ++q) {
                if (a[q] != 0) {
                    if (s.la[q] < 0) {
                        ok = false;
                        break;
                    }
                    z[static_cast<size_t>(s.la[q])] += a[q];
                }
                if (b[q] != 0) {
                    if (s.lb[q] < 0) {
                        ok = false;
                        break;
                    }
                    z[static_cast<size_t>(s.lb[q])] += b[q];
                }
            }
            if (ok)
                for (int c : z)
                    if (c < 0 || c >= target_bound) {
                        ok = false;
                        break;
                    }
            if (!ok) {
                res.holds = false;
                res.counterexample = materialize_pair(params, s, a, b);
                return res;
            }
        }
    }
    return res;
}

namespace {

template <typename V>
struct CompiledTerm {
    V coeff;
    int ex = 0;
    int ey = 0;
    bool coeff_one = false;
    bool coeff_minus_one = false;
};

template <typename V>
struct Compiled {
    std::vector<CompiledTerm<V>> terms;
    int degx = 0, degy = 0;
};

template <typename V>
Compiled<V> compile_bivariate(const MPoly& P) {
    auto vars = P.support();
    if (vars.size() > 2) throw std::invalid_argument("image size requires at most two variables");
    std::string x = vars.empty() ? "" : *vars.begin();
    std::string y = vars.size() < 2 ? "" : *std::next(vars.begin());
    Compiled<V> c;
    for (const auto& [m, co] : P.terms()) {
        CompiledTerm<V> t;
        t.coeff = co.template convert_to<V>();
        t.coeff_one = co == 1;
        t.coeff_minus_one = co == -1;
        for (const auto& [v, e] : m) {
            if (v == x)
                t.ex = e;
            else
                t.ey = e;
        }
        c.degx = std::max(c.degx, t.ex);
        c.degy = std::max(c.degy, t.ey);
        c.terms.push_back(std::move(t));
    }
    return c;
}

void check_eval_guard(size_t a, size_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("image size over empty sets");
    if (static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b) > kMaxEvaluations)
        throw guard_error("evaluation count would exceed the 10^8 guard");
}

template <typename V>
std::vector<std::vector<V>> power_table(const std::vector<Rat>& xs, int maxdeg) {
    std::vector<std::vector<V>> t;
    t.reserve(xs.size());
    for (const auto& x : xs) {
        std::vector<V> row;
        row.reserve(static_cast<size_t>(maxdeg) + 1);
        row.push_back(V(1));
        V xv = x.convert_to<V>();
        for (int e = 1; e <= maxdeg; ++e) row.push_back(row.back() * xv);
        t.push_back(std::move(row));
    }
    return t;
}

// Accumulate P(a, b) minimizing temporaries; tmp is scratch reused across
// calls from the same thread.
template <typename V>
void eval_terms(const Compiled<V>& c, const std::vector<V>& pa, const std::vector<V>& pb, V& acc,
                V& tmp) {
    acc = 0;
    for (const auto& t : c.terms) {
        tmp = pa[static_cast<size_t>(t.ex)];
        if (t.ey != 0) tmp *= pb[static_cast<size_t>(t.ey)];
        if (!t.coeff_one && !t.coeff_minus_one) tmp *= t.coeff;
        if (t.coeff_minus_one)
            acc -= tmp;
        else
            acc += tmp;
    }
}

template <typename V, typename Hash>
unsigned long long image_size_kernel(const MPoly& P, const std::vector<Rat>& A,
                                     const std::vector<Rat>& B) {
    const Compiled<V> c = compile_bivariate<V>(P);
    const auto pa = power_table<V>(A, c.degx);
    const auto pb = power_table<V>(B, c.degy);

    std::vector<std::unordered_set<V, Hash>> partial;
#ifdef _OPENMP
    partial.resize(static_cast<size_t>(omp_get_max_threads()));
#else
    partial.resize(1);
#endif

#pragma omp parallel
    {
#ifdef _OPENMP
        auto& mine = partial[static_cast<size_t>(omp_get_thread_num())];
#else
        auto& mine = partial[0];
#endif
        V acc, tmp;
#pragma omp for schedule(dynamic, 8)
        for (long long i = 0; i < static_cast<long long>(A.size()); ++i) {
            const auto& prow = pa[static_cast<size_t>(i)];
            for (size_t j = 0; j < B.size(); ++j) {
                eval_terms(c, prow, pb[j], acc, tmp);
                mine.insert(acc);
            }
        }
    }
    std::unordered_set<V, Hash> all;
    for (auto& s : partial) all.merge(s);
    return all.size();
}

bool all_integral(const MPoly& P, const std::vector<Rat>& A, const std::vector<Rat>& B) {
    for (const auto& [m, c] : P.terms())
        if (denominator(c) != 1) return false;
    for (const auto& a : A)
        if (denominator(a) != 1) return false;
    for (const auto& b : B)
        if (denominator(b) != 1) return false;
    return true;
}

}  // namespace

unsigned long long image_size(const MPoly& P, const std::vector<Rat>& A, const std::vector<Rat>& B) {
    check_eval_guard(A.size(), B.size());
    // Integer inputs take the Int lane: same arithmetic, no rational
    // normalization per operation.
    if (all_integral(P, A, B)) return image_size_kernel<Int, IntHash>(P, A, B);
    return image_size_kernel<Rat, RatHash>(P, A, B);
}

unsigned long long image_size_serial(const MPoly& P, const std::vector<Rat>& A,
                                     const std::vector<Rat>& B) {
    check_eval_guard(A.size(), B.size());
    auto vars = P.support();
    if (vars.size() > 2) throw std::invalid_argument("image size requires at most two variables");
    std::string x = vars.empty() ? "x" : *vars.begin();
    std::string y = vars.size() < 2 ? "y" : *std::next(vars.begin());
    std::set<Rat> values;
    for (const auto& a : A)
        for (const auto& b : B) values.insert(P.eval({{x, a}, {y, b}}));
    return values.size();
}

unsigned long long image_size_formal(const MPoly& P, const std::vector<MPoly>& A,
                                     const std::vector<MPoly>& B) {
    check_eval_guard(A.size(), B.size());
    auto vars = P.support();
    if (vars.size() > 2) throw std::invalid_argument("image size requires at most two variables");
    std::string x = vars.empty() ? "x" : *vars.begin();
    std::string y = vars.size() < 2 ? "y" : *std::next(vars.begin());

    std::vector<std::unordered_set<MPoly, MPolyHash, std::equal_to<MPoly>>> partial;
#ifdef _OPENMP
    partial.resize(static_cast<size_t>(omp_get_max_threads()));
#else
    partial.resize(1);
#endif
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(A.size()); ++i) {
#ifdef _OPENMP
        auto& mine = partial[static_cast<size_t>(omp_get_thread_num())];
#else
        auto& mine = partial[0];
#endif
        MPoly px = P.substitute(x, A[static_cast<size_t>(i)]);
        for (const auto& b : B) mine.insert(px.substitute(y, b));
    }
    std::unordered_set<MPoly, MPolyHash, std::equal_to<MPoly>> all;
    for (auto& s : partial) all.merge(s);
    return all.size();
}

unsigned long long image_size_formal_serial(const MPoly& P, const std::vector<MPoly>& A,
                                            const std::vector<MPoly>& B) {
    check_eval_guard(A.size(), B.size());
    auto vars = P.support();
    if (vars.size() > 2) throw std::invalid_argument("image size requires at most two variables");
    std::string x = vars.empty() ? "x" : *vars.begin();
    std::string y = vars.size() < 2 ? "y" : *std::next(vars.begin());
    std::set<MPoly, MPolyLess> values;
    for (const auto& a : A)
        for (const auto& b : B) values.insert(P.substitute(x, a).substitute(y, b));
    return values.size();
}

double round_milli(double x) {
    double scaled = x * 1000.0;
    double fl = std::floor(scaled);
    double frac = scaled - fl;
    double r;
    if (frac > 0.5)
        r = fl + 1.0;
    else if (frac < 0.5)
        r = fl;
    else
        r = (std::fmod(fl, 2.0) == 0.0) ? fl : fl + 1.0;
    return r / 1000.0;
}

std::string format_exponent(double x) {
    double r = round_milli(x);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", r);
    return std::string(buf);
}

std::vector<ExpansionRow> expansion_series(const MPoly& P, Family family,
                                           const std::vector<long long>& sizes,
                                           const WitnessParams* witness_params) {
    if (sizes.empty()) throw std::invalid_argument("no sizes given");
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw std::invalid_argument("sizes must be ascending");

    std::vector<ExpansionRow> rows;
    for (long long n : sizes) {
        ExpansionRow row;
        unsigned long long img = 0;
        long long realized = n;
        if (family == Family::ap) {
            auto A = ap_set(Rat(0), Rat(1), n);
            img = image_size(P, A, A);
        } else if (family == Family::gp) {
            auto A = gp_set(Rat(1), Rat(2), n);
            img = image_size(P, A, A);
        } else {
            if (witness_params == nullptr) throw std::invalid_argument("witness family needs parameters");
            WitnessParams wp = *witness_params;
            wp.coeff_bound = n;  // sizes sweep the coefficient bound
            WitnessSet ws = witness_B(wp);
            if (ws.formal) {
                realized = static_cast<long long>(ws.elements.size());
                img = image_size_formal(P, ws.elements, ws.elements);
            } else {
                realized = static_cast<long long>(ws.values.size());
                img = image_size(P, ws.values, ws.values);
            }
        }
        row.set_size = realized;
        row.image = img;
        row.exponent = realized > 1 ? std::log(static_cast<double>(img)) / std::log(static_cast<double>(realized))
                                    : 0.0;
        rows.push_back(row);
    }
    return rows;
}

double zk_ratio(const WitnessParams& params,
                const std::vector<std::pair<std::string, std::string>>& pairs) {
    validate_params(params);
    if (!params.formal()) throw std::invalid_argument("zk ratio runs in formal mode");
    if (pairs.empty()) throw std::invalid_argument("no generator pairs given");

    const MonoBasis src{static_cast<int>(params.generators.size()), params.degree_cap};
    const MonoBasis dst{static_cast<int>(params.generators.size()), params.degree_cap + 1};
    const unsigned long long count = combination_count(params, params.coeff_bound, params.degree_cap);
    if (count * count * pairs.size() > kMaxEvaluations)
        throw guard_error("pair enumeration would exceed the 10^8 guard");

    std::vector<std::vector<int>> S;
    S.reserve(count);
    for_each_vector(src.size(), params.coeff_bound, [&](const std::vector<int>& a) { S.push_back(a); });

    std::unordered_set<std::vector<int>, VecHash> Z;
    std::vector<int> z(dst.size(), 0);
    for (const auto& [na, nb] : pairs) {
        const auto la = lift_indices(src, dst, generator_index(params, na));
        const auto lb = lift_indices(src, dst, generator_index(params, nb));
        for (const auto& a : S) {
            for (const auto& b : S) {
                std::fill(z.begin(), z.end(), 0);
                for (size_t q = 0; q < src.size(); ++q) {
                    if (a[q] != 0) z[static_cast<size_t>(la[q])] += a[q];
                    if (b[q] != 0) z[static_cast<size_t>(lb[q])] += b[q];
                }
                Z.insert(z);
            }
        }
    }
    return std::log(static_cast<double>(Z.size())) / std::log(static_cast<double>(S.size()));
}

void write_csv(std::ostream& os, const std::vector<ExpansionRow>& rows) {
    os << "N,image_size,exponent\n";
    for (const auto& r : rows)
        os << r.set_size << "," << r.image << "," << format_exponent(r.exponent) << "\n";
}

}  // namespace reduct
