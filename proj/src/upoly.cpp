#include "reduct/upoly.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace reduct {

namespace {

std::string join_var(const UPoly& a, const UPoly& b) {
    if (a.var_name().empty()) return b.var_name();
    if (b.var_name().empty() || a.var_name() == b.var_name()) return a.var_name();
    throw std::logic_error("mixing univariate polynomials in " + a.var_name() + " and " + b.var_name());
}

}  // namespace

UPoly::UPoly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
}

UPoly::UPoly(std::string var, std::vector<Rat> coeffs) : var_(std::move(var)), coeffs_(std::move(coeffs)) {
    trim();
}

UPoly UPoly::var(const std::string& name) { return UPoly(name, {Rat(0), Rat(1)}); }

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() <= 1) var_.clear();
    if (!coeffs_.empty() && coeffs_.size() > 1 && var_.empty())
        throw std::logic_error("nonconstant univariate polynomial without a variable name");
}

UPoly UPoly::from_mpoly(const MPoly& p) {
    auto vars = p.support();
    if (vars.size() > 1) throw std::invalid_argument("polynomial is not univariate: " + p.str());
    std::string v = vars.empty() ? std::string() : *vars.begin();
    std::vector<Rat> cs(static_cast<size_t>(p.degree_in(v)) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) {
        int e = m.empty() ? 0 : m.begin()->second;
        cs[static_cast<size_t>(e)] = c;
    }
    return UPoly(v, std::move(cs));
}

MPoly UPoly::to_mpoly() const {
    MPoly r;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        ExpVec m;
        if (i > 0) m.emplace(var_, static_cast<int>(i));
        r += MPoly::term(coeffs_[i], m);
    }
    return r;
}

Rat UPoly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return Rat(0);
    return coeffs_[static_cast<size_t>(i)];
}

const Rat& UPoly::lc() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat UPoly::at(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

MPoly UPoly::at(const MPoly& arg) const {
    MPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * arg + MPoly(*it);
    return acc;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.var_ = join_var(a, b);
    r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.trim();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    UPoly r;
    r.var_ = join_var(a, b);
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

UPoly UPoly::scaled(const Rat& c) const {
    if (c == 0) return UPoly();
    UPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UPoly UPoly::pow(unsigned long e) const {
    UPoly acc(Rat(1));
    UPoly base = *this;
    while (e != 0) {
        if (e & 1ul) acc = acc * base;
        e >>= 1ul;
        if (e != 0) base = base * base;
    }
    return acc;
}

bool operator==(const UPoly& a, const UPoly& b) {
    // Constants compare equal regardless of the (empty) variable tag.
    return a.coeffs_ == b.coeffs_ && (a.is_constant() || b.is_constant() || a.var_ == b.var_);
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    UPoly r;
    r.var_ = var_;
    r.coeffs_.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_.push_back(coeffs_[i] * static_cast<long>(i));
    r.trim();
    return r;
}

UPoly UPoly::antiderivative(const std::string& var_hint) const {
    if (is_zero()) return UPoly();
    UPoly r;
    r.var_ = !var_.empty() ? var_ : (!var_hint.empty() ? var_hint : "t");
    r.coeffs_.assign(coeffs_.size() + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
    r.trim();
    return r;
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + UPoly(*it);
    return acc;
}

UPoly UPoly::shifted_arg(const Rat& s) const {
    if (is_constant()) return *this;
    return compose(UPoly(var_, {s, Rat(1)}));
}

UPoly UPoly::monic() const {
    if (is_zero()) throw std::logic_error("monic of zero polynomial");
    return scaled(Rat(1) / lc());
}

UPoly UPoly::normalized_primitive() const {
    if (is_zero()) return *this;
    Rat g(0);
    for (const auto& c : coeffs_) g = rat_gcd(g, c);
    if (lc() < 0) g = -g;
    return scaled(Rat(1) / g);
}

UPoly UPoly::with_var(const std::string& v) const {
    UPoly r = *this;
    if (!r.is_constant()) r.var_ = v;
    return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UPoly rem = a;
    UPoly quot;
    quot.var_ = join_var(a, b);
    if (rem.degree() >= b.degree()) quot.coeffs_.assign(static_cast<size_t>(rem.degree() - b.degree()) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int d = rem.degree() - b.degree();
        Rat q = rem.lc() / b.lc();
        quot.coeffs_[static_cast<size_t>(d)] = q;
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            rem.coeffs_[static_cast<size_t>(d) + i] -= q * b.coeffs_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_mpoly().str(); }

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd undefined for two zero polynomials");
    UPoly x = a, y = b;
    if (!x.is_constant() && !y.is_constant()) join_var(x, y);
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (p.is_constant()) return UPoly(Rat(1));
    UPoly g = upoly_gcd(p, p.derivative());
    auto [q, r] = divmod(p, g);
    if (!r.is_zero()) throw std::logic_error("gcd does not divide its argument");
    return q.normalized_primitive();
}

namespace {

bool miller_rabin(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Int pollard_rho(const Int& n) {
    using boost::multiprecision::gcd;
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(0x5eedf00dULL);
    while (true) {
        Int c = Int(rng() % 1000003) + 1;
        Int x = Int(rng() % 1000003) + 2;
        Int y = x;
        Int d = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, int>& out) {
    if (n <= 1) return;
    for (Int p = 2; p * p <= n && p < 100000; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Int> positive_divisors(const Int& n) {
    std::map<Int, int> f;
    factor_into(abs(n), f);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : f) {
        size_t base = divs.size();
        Int pe(1);
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational roots of zero polynomial");
    std::vector<Rat> roots;
    if (p.is_constant()) return roots;

    // Split off the power of the variable itself.
    UPoly q = p;
    int shift = 0;
    while (q.coeff(0) == 0) {
        std::vector<Rat> cs(q.coeffs().begin() + 1, q.coeffs().end());
        q = UPoly(q.var_name(), std::move(cs));
        ++shift;
    }
    if (shift > 0) roots.push_back(Rat(0));
    if (q.is_constant()) return roots;

    UPoly prim = q.normalized_primitive();
    Int a0 = numerator(prim.coeff(0));
    Int ad = numerator(prim.lc());
    if (prim.degree() == 1) {
        roots.push_back(-prim.coeff(0) / prim.lc());
    } else {
        std::set<Rat> found;
        for (const Int& num : positive_divisors(a0)) {
            for (const Int& den : positive_divisors(ad)) {
                Rat cand(num, den);
                if (prim.at(cand) == 0) found.insert(cand);
                if (prim.at(-cand) == 0) found.insert(-cand);
            }
        }
        roots.insert(roots.end(), found.begin(), found.end());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<UPoly> poly_kth_root(const UPoly& p, unsigned k) {
    if (p.is_zero()) throw std::invalid_argument("kth root of zero polynomial");
    if (k < 1) throw std::invalid_argument("kth root requires k >= 1");
    if (p.degree() % static_cast<int>(k) != 0) return std::nullopt;
    const int d = p.degree() / static_cast<int>(k);
    UPoly q = p.monic();
    std::string v = p.is_constant() ? "t" : p.var_name();
    std::vector<Rat> u0(static_cast<size_t>(d) + 1, Rat(0));
    u0.back() = 1;
    UPoly u(v, u0);
    // Each correction b*x^i changes u^k by k*b*x^((k-1)d+i) plus lower terms,
    // so the top mismatch pins the next coefficient.
    for (int iter = 0; iter <= d + 1; ++iter) {
        UPoly r = q - u.pow(k);
        if (r.is_zero()) return u;
        int i = r.degree() - (static_cast<int>(k) - 1) * d;
        if (i < 0 || i >= d) return std::nullopt;
        std::vector<Rat> corr(static_cast<size_t>(i) + 1, Rat(0));
        corr.back() = r.lc() / static_cast<long>(k);
        u = u + UPoly(v, corr);
    }
    return (q - u.pow(k)).is_zero() ? std::optional<UPoly>(u) : std::nullopt;
}

std::optional<UPoly> inner_compose_solve(const UPoly& q, const UPoly& w) {
    if (w.degree() < 1) throw std::invalid_argument("inner polynomial must be nonconstant");
    UPoly rem = q;
    UPoly f;  // built in the outer variable t
    const std::string t = "t";
    while (rem.degree() >= 1) {
        if (rem.degree() % w.degree() != 0) return std::nullopt;
        int e = rem.degree() / w.degree();
        Rat a = rem.lc() / rat_pow(w.lc(), static_cast<unsigned long>(e));
        std::vector<Rat> mono(static_cast<size_t>(e) + 1, Rat(0));
        mono.back() = a;
        f = f + UPoly(t, mono);
        rem = rem - w.pow(static_cast<unsigned long>(e)).scaled(a);
    }
    f = f + UPoly(rem.is_zero() ? Rat(0) : rem.coeff(0));
    return f.with_var(t);
}

RootDescriptor make_root_descriptor(const UPoly& g) {
    if (g.is_zero()) return RootDescriptor{UPoly(), {}};
    UPoly sf = squarefree_part(g);
    std::vector<Rat> roots = sf.is_constant() ? std::vector<Rat>{} : rational_roots(sf);
    return RootDescriptor{sf, std::move(roots)};
}

}  // namespace reduct
