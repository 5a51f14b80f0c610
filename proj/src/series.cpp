#include "qcl/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcl {

Series Series::exact(std::vector<Poly> c) {
    Series s{std::move(c), kExact};
    s.normalize();
    return s;
}

Series Series::known(std::vector<Poly> c, long acc) {
    Series s{std::move(c), acc};
    s.normalize();
    return s;
}

Series Series::monomial(const Poly& coeff, long e) {
    std::vector<Poly> c(e + 1);
    c[e] = coeff;
    return exact(std::move(c));
}

Poly Series::coef(long k) const {
    if (k >= acc) throw std::out_of_range("series coefficient beyond accuracy");
    return k < static_cast<long>(c.size()) ? c[k] : Poly();
}

long Series::order_bound() const {
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) return static_cast<long>(k);
    return acc;
}

void Series::normalize() {
    if (!is_exact() && static_cast<long>(c.size()) > acc) c.resize(acc);
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::string Series::str(const Tower& t, const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        std::string cs = c[k].str(t.names());
        bool compound = c[k].nterms() > 1;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << (compound ? "(" + cs + ")" : cs);
            continue;
        }
        std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
        if (c[k] == Poly(1)) os << mono;
        else os << (compound ? "(" + cs + ")" : cs) << "*" << mono;
    }
    if (first && is_exact()) os << "0";
    if (!is_exact()) {
        if (!first) os << " + ";
        os << "O(" << var << (acc != 1 ? "^" + std::to_string(acc) : "") << ")";
    }
    return os.str();
}

Series s_add(const Series& a, const Series& b) {
    Series r;
    r.acc = std::min(a.acc, b.acc);
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t k = 0; k < r.c.size(); ++k) {
        if (k < a.c.size()) r.c[k] += a.c[k];
        if (k < b.c.size()) r.c[k] += b.c[k];
    }
    r.normalize();
    return r;
}

Series s_neg(const Series& a) {
    Series r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

Series s_sub(const Series& a, const Series& b) { return s_add(a, s_neg(b)); }

Series s_scale(const Tower& t, const Series& a, const Poly& k) {
    Poly kk = t.reduce(k);
    if (kk.is_zero()) return Series::exact({});
    Series r = a;
    for (auto& x : r.c) x = t.mul(x, kk);
    r.normalize();
    return r;
}

Series s_mul(const Tower& t, const Series& a, const Series& b) {
    const long va = a.order_bound(), vb = b.order_bound();
    if ((a.is_exact() && va >= kExact) || (b.is_exact() && vb >= kExact)) return Series::exact({});
    Series r;
    r.acc = std::min(acc_add(a.acc, vb), acc_add(b.acc, va));
    if (a.c.empty() || b.c.empty()) {
        r.normalize();
        return r;
    }
    long n = static_cast<long>(a.c.size() + b.c.size()) - 1;
    if (!r.is_exact()) n = std::min(n, r.acc);
    r.c.assign(std::max(n, 0L), Poly());
    for (long k = 0; k < n; ++k) {
        Poly s;
        long lo = std::max(0L, k - static_cast<long>(b.c.size()) + 1);
        long hi = std::min(k, static_cast<long>(a.c.size()) - 1);
        for (long i = lo; i <= hi; ++i)
            if (!a.c[i].is_zero() && !b.c[k - i].is_zero()) s += a.c[i] * b.c[k - i];
        r.c[k] = t.reduce(s);
    }
    r.normalize();
    return r;
}

Series s_pow(const Tower& t, const Series& a, unsigned e) {
    Series r = Series::exact({Poly(1)}), b = a;
    while (e) {
        if (e & 1) r = s_mul(t, r, b);
        e >>= 1;
        if (e) b = s_mul(t, b, b);
    }
    return r;
}

Series s_compose_pow(const Series& a, long sigma, long shift) {
    Series r;
    r.acc = acc_add(acc_mul(a.acc, sigma), shift);
    if (!a.c.empty()) r.c.assign((a.c.size() - 1) * sigma + shift + 1, Poly());
    for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k * sigma + shift] = a.c[k];
    r.normalize();
    return r;
}

Series s_shift_down(const Series& a, long k) {
    if (k == 0) return a;
    for (long i = 0; i < k && i < static_cast<long>(a.c.size()); ++i)
        if (!a.c[i].is_zero()) throw std::logic_error("series shift: nonzero low coefficient");
    Series r;
    r.acc = a.is_exact() ? kExact : a.acc - k;
    if (static_cast<long>(a.c.size()) > k) r.c.assign(a.c.begin() + k, a.c.end());
    r.normalize();
    return r;
}

Series s_truncate(const Series& a, long m) {
    Series r = a;
    r.acc = std::min(a.acc, m);
    r.normalize();
    return r;
}

Series s_reduce(const Tower& t, const Series& a) {
    Series r = a;
    for (auto& x : r.c) x = t.reduce(x);
    r.normalize();
    return r;
}

bool SeriesPoly::is_exact() const {
    return std::all_of(a.begin(), a.end(), [](const Series& s) { return s.is_exact(); });
}

SeriesPoly SeriesPoly::from_poly(const Poly& f, int vx, int vy, int gen_offset) {
    SeriesPoly r;
    const int dy = std::max(f.degree(vy), 0);
    std::vector<std::vector<Poly>> cs(dy + 1);
    for (auto& [m, c] : f.terms()) {
        unsigned ex = vx < static_cast<int>(m.size()) ? m[vx] : 0;
        unsigned ey = vy < static_cast<int>(m.size()) ? m[vy] : 0;
        Mono gm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0 || static_cast<int>(i) == vx || static_cast<int>(i) == vy) continue;
            if (gen_offset < 0 || static_cast<int>(i) < gen_offset)
                throw std::invalid_argument("from_poly: unexpected variable");
            std::size_t g = i - gen_offset;
            if (gm.size() <= g) gm.resize(g + 1, 0);
            gm[g] = m[i];
        }
        auto& row = cs[ey];
        if (row.size() <= ex) row.resize(ex + 1);
        row[ex] += Poly::monomial(gm, c);
    }
    for (auto& row : cs) r.a.push_back(Series::exact(row));
    return r;
}

SeriesPoly SeriesPoly::reduced(const Tower& t) const {
    SeriesPoly r;
    for (auto& s : a) r.a.push_back(s_reduce(t, s));
    return r;
}

std::string SeriesPoly::str(const Tower& t, const std::string& x, const std::string& y) const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (a[i].is_exact() && a[i].c.empty()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << a[i].str(t, x) << ")";
        if (i > 0) os << "*" << y << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (first) os << "0";
    return os.str();
}

SeriesPoly approximation(const SeriesPoly& f, long m) {
    SeriesPoly r;
    for (auto& s : f.a) r.a.push_back(s_truncate(s, m));
    return r;
}

}  // namespace qcl
