#include "qcl/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qcl {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return q;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

void trim(Mono& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

int VarOrder::index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
    return -1;
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c) {
    Rational q = c;
    q.canonicalize();
    if (q != 0) terms_.emplace(Mono{}, q);
}

Poly Poly::var(int v, unsigned e) {
    Mono m(v + 1, 0);
    m[v] = e;
    trim(m);
    return monomial(std::move(m), 1);
}

Poly Poly::monomial(Mono m, const Rational& c) {
    Poly p;
    trim(m);
    Rational q = c;
    q.canonicalize();
    if (q != 0) p.terms_.emplace(std::move(m), q);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::main_var() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size()) - 1;
}

int Poly::degree(int v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto& [m, c] : terms_)
        if (v < static_cast<int>(m.size())) d = std::max(d, static_cast<int>(m[v]));
    return d;
}

int Poly::total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& [m, c] : terms_) {
        int s = 0;
        for (auto e : m) s += static_cast<int>(e);
        d = std::max(d, s);
    }
    return d;
}

bool Poly::involves(int v) const { return degree(v) > 0; }

Poly Poly::coeff(int v, int k) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        unsigned e = v < static_cast<int>(m.size()) ? m[v] : 0;
        if (static_cast<int>(e) != k) continue;
        Mono mm = m;
        if (v < static_cast<int>(mm.size())) mm[v] = 0;
        trim(mm);
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

std::vector<Poly> Poly::coeffs(int v) const {
    std::vector<Poly> out(std::max(degree(v), 0) + 1);
    if (terms_.empty()) return out;
    for (auto& [m, c] : terms_) {
        unsigned e = v < static_cast<int>(m.size()) ? m[v] : 0;
        Mono mm = m;
        if (v < static_cast<int>(mm.size())) mm[v] = 0;
        trim(mm);
        out[e].terms_.emplace(std::move(mm), c);
    }
    return out;
}

Poly Poly::lc(int v) const { return coeff(v, degree(v)); }

Rational Poly::leading_coeff() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

Mono Poly::leading_mono() const { return terms_.empty() ? Mono{} : terms_.rbegin()->first; }

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    Mono m;
    for (auto& [ma, ca] : a.terms_) {
        for (auto& [mb, cb] : b.terms_) {
            m.assign(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly Poly::derivative(int v) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        if (v >= static_cast<int>(m.size()) || m[v] == 0) continue;
        Mono mm = m;
        Rational cc = c * static_cast<unsigned long>(mm[v]);
        mm[v] -= 1;
        trim(mm);
        r.add_term(mm, cc);
    }
    return r;
}

Poly Poly::subst(int v, const Poly& val) const {
    std::vector<Poly> cs = coeffs(v);
    // Horner in v
    Poly r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * val + cs[k];
    return r;
}

Poly Poly::subst_all(const std::vector<std::optional<Poly>>& subs) const {
    std::map<std::pair<int, unsigned>, Poly> cache;
    auto power = [&](int v, unsigned e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache.emplace(key, subs[v]->pow(e)).first->second;
    };
    Poly r;
    for (auto& [m, c] : terms_) {
        Mono keep(m.size(), 0);
        Poly t(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i < subs.size() && subs[i]) t = t * power(static_cast<int>(i), m[i]);
            else keep[i] = m[i];
        }
        trim(keep);
        r += t * Poly::monomial(keep, 1);
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    Rational s = 0;
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= point.size()) throw std::out_of_range("eval: missing coordinate");
            Rational b;
            mpz_pow_ui(b.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
            mpz_pow_ui(b.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
            t *= b;
        }
        s += t;
    }
    return s;
}

Poly Poly::rename(const std::vector<int>& map) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Mono mm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            int j = map.at(i);
            if (static_cast<int>(mm.size()) <= j) mm.resize(j + 1, 0);
            mm[j] += m[i];
        }
        trim(mm);
        r.add_term(mm, c);
    }
    return r;
}

Poly Poly::shift_vars(int offset) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        if (m.empty()) {
            r.add_term(m, c);
            continue;
        }
        Mono mm(m.size() + offset, 0);
        for (std::size_t i = 0; i < m.size(); ++i) mm[i + offset] = m[i];
        r.add_term(mm, c);
    }
    return r;
}

Poly Poly::mul_var(int v, unsigned e) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Mono mm = m;
        if (static_cast<int>(mm.size()) <= v) mm.resize(v + 1, 0);
        mm[v] += e;
        trim(mm);
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) os << c.get_str();
        else if (c == 1) os << mono;
        else os << c.get_str() << "*" << mono;
    }
    return os.str();
}

std::string Poly::str() const { return str(std::vector<std::string>{}); }

std::pair<Poly, Poly> divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q, r, p = a;
    const Mono lb = b.leading_mono();
    const Rational cb = b.leading_coeff();
    while (!p.is_zero()) {
        // find the largest term of p divisible by lt(b)
        bool found = false;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const Mono& m = it->first;
            if (m.size() < lb.size()) continue;
            bool ok = true;
            for (std::size_t i = 0; i < lb.size() && ok; ++i) ok = m[i] >= lb[i];
            if (!ok) continue;
            Mono d = m;
            for (std::size_t i = 0; i < lb.size(); ++i) d[i] -= lb[i];
            trim(d);
            Poly t = Poly::monomial(d, it->second / cb);
            q += t;
            p -= t * b;
            found = true;
            break;
        }
        if (!found) {
            r += p;
            break;
        }
    }
    return {q, r};
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

PremResult prem(const Poly& p, const Poly& r, int v) {
    const int dr = r.degree(v);
    if (dr <= 0) throw std::domain_error("prem: divisor is constant in the variable");
    const Poly init = r.lc(v);
    PremResult res;
    res.rem = p;
    Poly quo;
    while (!res.rem.is_zero() && res.rem.degree(v) >= dr) {
        const int dp = res.rem.degree(v);
        Poly lcp = res.rem.lc(v);
        auto exact = exact_divide(lcp, init);
        Poly shift = Poly::var(v, dp - dr);
        if (exact) {
            Poly t = *exact * shift;
            res.rem -= t * r;
            quo += t;
        } else {
            Poly t = lcp * shift;
            res.rem = init * res.rem - t * r;
            quo = init * quo + t;
            ++res.k;
        }
    }
    res.quo = quo;
    return res;
}

Poly prem_chain(const Poly& p, const std::vector<Poly>& chain) {
    std::vector<Poly> sorted = chain;
    std::sort(sorted.begin(), sorted.end(),
              [](const Poly& a, const Poly& b) { return a.main_var() > b.main_var(); });
    Poly r = p;
    for (auto& c : sorted) {
        int v = c.main_var();
        if (v < 0) {
            if (c.is_zero()) continue;
            return Poly();  // nonzero constant generates everything
        }
        if (r.degree(v) >= c.degree(v)) r = prem(r, c, v).rem;
    }
    return r;
}

namespace {

// Determinant by fraction-free elimination.
Poly bareiss_det(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(1);
    Poly prev(1);
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < n && m[s][k].is_zero()) ++s;
            if (s == n) return Poly();
            std::swap(m[k], m[s]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw std::logic_error("bareiss: inexact division");
                m[i][j] = *q;
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return neg ? -d : d;
}

}  // namespace

Poly resultant(const Poly& f, const Poly& g, int v) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
    const int m = f.degree(v), n = g.degree(v);
    if (m == 0 && n == 0) throw std::domain_error("resultant: both constant in the variable");
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);
    auto fc = f.coeffs(v), gc = g.coeffs(v);
    const int N = m + n;
    std::vector<std::vector<Poly>> s(N, std::vector<Poly>(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = fc[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = gc[n - j];
    return bareiss_det(std::move(s));
}

Rational rational_content(const Poly& p) {
    Integer num = 0, den = 1;
    for (auto& [m, c] : p.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    if (num == 0) return 0;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Poly normalize_z(const Poly& p) {
    if (p.is_zero()) return p;
    Rational c = rational_content(p);
    if (p.leading_coeff() < 0) c = -c;
    return p * (1 / c);
}

namespace {

Poly poly_content(const Poly& a, int v) {
    Poly g;
    for (auto& c : a.coeffs(v)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_z(b);
    if (b.is_zero()) return normalize_z(a);
    const int v = std::max(a.main_var(), b.main_var());
    if (v < 0) return Poly(1);
    Poly ca = poly_content(a, v), cb = poly_content(b, v);
    Poly c = gcd(ca, cb);
    Poly pa = *exact_divide(a, ca), pb = *exact_divide(b, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree(v) > 0) {
        Poly r = prem(pa, pb, v).rem;
        pa = pb;
        pb = r.is_zero() ? r : *exact_divide(r, poly_content(r, v));
    }
    Poly g = pb.is_zero() ? pa : Poly(1);
    if (g.degree(v) > 0) g = *exact_divide(g, poly_content(g, v));
    return normalize_z(c * g);
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return normalize_z(*exact_divide(a * b, gcd(a, b)));
}

Poly content(const Poly& p, int v) {
    if (p.is_zero()) return Poly();
    Poly g = poly_content(p, v);
    Poly pp = *exact_divide(p, g);
    return g * rational_content(pp);
}

Poly primitive_part(const Poly& p, int v) {
    if (p.is_zero()) return p;
    return *exact_divide(p, content(p, v));
}

Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    return f * (1 / f.leading_coeff());
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree part of zero");
    const int v = f.main_var();
    if (v < 0) return Poly(1);
    Poly g = gcd(f, f.derivative(v));
    return monic(*exact_divide(f, g));
}

}  // namespace qcl
