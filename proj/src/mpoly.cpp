#include "reduct/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace reduct {

int expvec_total_degree(const ExpVec& e) {
    int d = 0;
    for (const auto& [v, k] : e) d += k;
    return d;
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    const int da = expvec_total_degree(a);
    const int db = expvec_total_degree(b);
    if (da != db) return da < db;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // The monomial holding the alphabetically earlier variable wins.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ib != b.end();
}

MPoly::MPoly(const Rat& c) {
    if (c != 0) terms_.emplace(ExpVec{}, c);
}

MPoly MPoly::var(const std::string& name) {
    MPoly p;
    p.terms_.emplace(ExpVec{{name, 1}}, Rat(1));
    return p;
}

MPoly MPoly::term(const Rat& coeff, const ExpVec& monomial) {
    MPoly p;
    if (coeff != 0) {
        ExpVec m;
        for (const auto& [v, k] : monomial)
            if (k != 0) m.emplace(v, k);
        p.terms_.emplace(std::move(m), coeff);
    }
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

Rat MPoly::coeff(const ExpVec& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rat(0) : it->second;
}

const std::pair<const ExpVec, Rat>& MPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void MPoly::add_term(const ExpVec& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            ExpVec m = ma;
            for (const auto& [v, k] : mb) {
                auto [it, inserted] = m.emplace(v, k);
                if (!inserted) it->second += k;
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::pow(unsigned long e) const {
    MPoly acc(Rat(1));
    MPoly base = *this;
    while (e != 0) {
        if (e & 1ul) acc *= base;
        e >>= 1ul;
        if (e != 0) base *= base;
    }
    return acc;
}

MPoly MPoly::derivative(const std::string& v) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        if (it == m.end()) continue;
        ExpVec dm = m;
        int k = it->second;
        if (k == 1)
            dm.erase(v);
        else
            dm[v] = k - 1;
        r.add_term(dm, c * k);
    }
    return r;
}

MPoly MPoly::substitute(const std::string& v, const MPoly& replacement) const {
    int maxe = degree_in(v);
    std::vector<MPoly> powers;
    powers.reserve(static_cast<size_t>(maxe) + 1);
    powers.push_back(MPoly(Rat(1)));
    for (int e = 1; e <= maxe; ++e) powers.push_back(powers.back() * replacement);

    MPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        if (it == m.end()) {
            r.add_term(m, c);
            continue;
        }
        ExpVec rest = m;
        rest.erase(v);
        r += MPoly::term(c, rest) * powers[static_cast<size_t>(it->second)];
    }
    return r;
}

int MPoly::degree_in(const std::string& v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, expvec_total_degree(m));
    return d;
}

std::set<std::string> MPoly::support() const {
    std::set<std::string> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, k] : m) s.insert(v);
    return s;
}

Rat MPoly::eval(const std::map<std::string, Rat>& point) const {
    // Powers are cached per variable up to the degree actually used.
    std::map<std::string, std::vector<Rat>> powers;
    for (const auto& v : support()) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("eval: missing value for variable " + v);
        std::vector<Rat> pw;
        pw.reserve(static_cast<size_t>(degree_in(v)) + 1);
        pw.push_back(Rat(1));
        for (int e = 1, de = degree_in(v); e <= de; ++e) pw.push_back(pw.back() * it->second);
        powers.emplace(v, std::move(pw));
    }
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (const auto& [v, k] : m) t *= powers[v][static_cast<size_t>(k)];
        acc += t;
    }
    return acc;
}

Rat MPoly::content() const {
    Rat g(0);
    for (const auto& [m, c] : terms_) g = rat_gcd(g, c);
    return g;
}

MPoly MPoly::normalized_primitive() const {
    if (is_zero()) return *this;
    Rat g = content();
    if (leading().second < 0) g = -g;
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / g);
    return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    MPoly rem = a;
    MPoly quot;
    const auto& [bm, bc] = b.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        // Leading monomial of rem must be divisible by that of b.
        ExpVec qm = rm;
        bool divisible = true;
        for (const auto& [v, k] : bm) {
            auto it = qm.find(v);
            if (it == qm.end() || it->second < k) {
                divisible = false;
                break;
            }
            if (it->second == k)
                qm.erase(it);
            else
                it->second -= k;
        }
        if (!divisible) return std::nullopt;
        MPoly t = MPoly::term(rc / bc, qm);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rat a = abs(c);
        if (m.empty()) {
            os << rat_str(a);
        } else {
            bool star = false;
            if (a != 1) {
                os << rat_str(a);
                star = true;
            }
            for (const auto& [v, k] : m) {
                if (star) os << "*";
                os << v;
                if (k != 1) os << "^" << k;
                star = true;
            }
        }
    }
    return os.str();
}

bool mpoly_less(const MPoly& a, const MPoly& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    GrlexLess less;
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (less(ia->first, ib->first)) return true;
        if (less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ib != eb;
}

std::size_t mpoly_hash(const MPoly& p) {
    std::size_t seed = 0;
    RatHash rh;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, k] : m) {
            boost::hash_combine(seed, v);
            boost::hash_combine(seed, k);
        }
        boost::hash_combine(seed, rh(c));
    }
    return seed;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

std::string fresh_var(const std::string& base, const std::set<std::string>& used) {
    if (!used.count(base)) return base;
    for (int i = 0;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!used.count(cand)) return cand;
    }
}

}  // namespace reduct
