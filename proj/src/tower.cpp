#include "qcl/tower.hpp"

#include <stdexcept>

#include "qcl/roots.hpp"

namespace qcl {

long Tower::total_degree() const {
    long d = 1;
    for (int j = 0; j < size(); ++j) d *= degree(j);
    return d;
}

Tower Tower::prefix(int j) const {
    return Tower(std::vector<Poly>(mod_.begin(), mod_.begin() + j));
}

Tower Tower::pushed(const Poly& m) const {
    Tower t = *this;
    t.mod_.push_back(m);
    return t;
}

Poly Tower::reduce(const Poly& a) const {
    Poly r = a;
    for (int j = size() - 1; j >= 0; --j) {
        const int d = degree(j);
        if (r.degree(j) < d) continue;
        // modulus is monic in z_j, so plain division in z_j
        const Poly& m = mod_[j];
        Poly tail = m - Poly::var(j, d);
        while (r.degree(j) >= d) {
            const int e = r.degree(j);
            Poly c = r.coeff(j, e);
            r -= c.mul_var(j, e);
            r -= (c * tail).mul_var(j, e - d);
        }
    }
    return r;
}

Poly Tower::pow(const Poly& a, unsigned e) const {
    Poly r(1), b = reduce(a);
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

std::vector<std::string> Tower::gen_names(int k) {
    std::vector<std::string> n;
    for (int j = 0; j < k; ++j) n.push_back(gen_name(j));
    return n;
}

std::vector<std::string> Tower::str_moduli() const {
    std::vector<std::string> out;
    for (auto& m : mod_) out.push_back(m.str(names()));
    return out;
}

std::vector<Tower> split_tower(const Tower& t, const SplitSignal& s) {
    std::vector<Tower> out;
    for (const Poly* f : {&s.g, &s.h}) {
        Tower nt = t.prefix(s.level).pushed(*f);
        for (int i = s.level + 1; i < t.size(); ++i) nt = nt.pushed(nt.reduce(t.modulus(i)));
        out.push_back(std::move(nt));
    }
    return out;
}

UPoly to_upoly(const Poly& p, int v) {
    if (p.is_zero()) return {};
    return p.coeffs(v);
}

Poly from_upoly(const UPoly& u, int v) {
    Poly r;
    for (std::size_t k = 0; k < u.size(); ++k) r += u[k].mul_var(v, static_cast<unsigned>(k));
    return r;
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

bool zero_test(const Tower& t, const Poly& a) {
    Poly r = t.reduce(a);
    if (r.is_zero()) return true;
    const int j = r.main_var();
    if (j < 0) return false;
    if (j >= t.size()) throw std::logic_error("zero_test: element outside the tower");
    Tower sub = t.prefix(j);
    UPoly ra = to_upoly(r, j);
    utrim(sub, ra);
    if (ra.empty()) return true;
    if (udeg(ra) == 0) return zero_test(sub, ra[0]);
    UPoly mj = to_upoly(t.modulus(j), j);
    UPoly g = ugcd(sub, ra, mj);
    if (udeg(g) == 0) return false;
    UPoly h = uquo(sub, mj, g);
    throw SplitSignal{j, from_upoly(g, j), from_upoly(h, j)};
}

namespace {

// Extended Euclid over the tower; returns g monic with s*a + u*b = g.
UPoly uxgcd(const Tower& t, UPoly a, UPoly b, UPoly& s_out) {
    UPoly s0{Poly(1)}, s1{};
    utrim(t, a);
    utrim(t, b);
    auto usub = [&](const UPoly& x, const UPoly& y) {
        UPoly r(std::max(x.size(), y.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            Poly v;
            if (i < x.size()) v += x[i];
            if (i < y.size()) v -= y[i];
            r[i] = t.reduce(v);
        }
        return r;
    };
    while (!b.empty()) {
        UPoly q = uquo(t, a, b);
        UPoly r = urem(t, a, b);
        UPoly s2 = usub(s0, umul(t, q, s1));
        a = std::move(b);
        b = std::move(r);
        utrim(t, b);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (a.empty()) {
        s_out = {};
        return a;
    }
    auto inv = try_inverse(t, a.back());
    for (auto& c : a) c = t.mul(c, *inv);
    for (auto& c : s0) c = t.mul(c, *inv);
    utrim(t, s0);
    s_out = s0;
    return a;
}

}  // namespace

std::optional<Poly> try_inverse(const Tower& t, const Poly& a) {
    Poly r = t.reduce(a);
    if (r.is_zero()) return std::nullopt;
    const int j = r.main_var();
    if (j < 0) return Poly(1 / r.constant_value());
    Tower sub = t.prefix(j);
    UPoly ra = to_upoly(r, j);
    utrim(sub, ra);
    if (ra.empty()) return std::nullopt;
    if (udeg(ra) == 0) return try_inverse(sub, ra[0]);
    UPoly mj = to_upoly(t.modulus(j), j);
    UPoly s;
    UPoly g = uxgcd(sub, ra, mj, s);
    if (udeg(g) > 0) {
        UPoly h = uquo(sub, mj, g);
        throw SplitSignal{j, from_upoly(g, j), from_upoly(h, j)};
    }
    return t.reduce(from_upoly(s, j));
}

void utrim(const Tower& t, UPoly& a) {
    for (auto& c : a) c = t.reduce(c);
    while (!a.empty() && zero_test(t, a.back())) a.pop_back();
}

UPoly umonic(const Tower& t, const UPoly& a) {
    UPoly r = a;
    utrim(t, r);
    if (r.empty()) return r;
    auto inv = try_inverse(t, r.back());
    if (!inv) throw std::logic_error("umonic: zero leading coefficient");
    for (auto& c : r) c = t.mul(c, *inv);
    r.back() = Poly(1);
    return r;
}

namespace {

void udivmod(const Tower& t, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    UPoly bb = b;
    utrim(t, bb);
    if (bb.empty()) throw std::domain_error("udivmod: division by zero");
    auto inv = try_inverse(t, bb.back());
    if (!inv) throw std::logic_error("udivmod: zero leading coefficient");
    r = a;
    utrim(t, r);
    const int db = udeg(bb);
    q.assign(std::max(udeg(r) - db + 1, 0), Poly());
    while (!r.empty() && udeg(r) >= db) {
        const int dr = udeg(r);
        Poly c = t.mul(r.back(), *inv);
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] = t.sub(r[dr - db + i], t.mul(c, bb[i]));
        r.pop_back();
        utrim(t, r);
    }
}

}  // namespace

UPoly urem(const Tower& t, const UPoly& a, const UPoly& b) {
    UPoly q, r;
    udivmod(t, a, b, q, r);
    return r;
}

UPoly uquo(const Tower& t, const UPoly& a, const UPoly& b) {
    UPoly q, r;
    udivmod(t, a, b, q, r);
    return q;
}

UPoly ugcd(const Tower& t, UPoly a, UPoly b) {
    utrim(t, a);
    utrim(t, b);
    while (!b.empty()) {
        UPoly r = urem(t, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(t, a);
}

UPoly uderivative(const UPoly& a) {
    UPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * Rational(static_cast<long>(k)));
    return d;
}

UPoly usquarefree(const Tower& t, const UPoly& a) {
    UPoly f = umonic(t, a);
    if (udeg(f) <= 0) return f;
    UPoly g = ugcd(t, f, uderivative(f));
    if (udeg(g) == 0) return f;
    return umonic(t, uquo(t, f, g));
}

UPoly umul(const Tower& t, const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) c = t.reduce(c);
    return r;
}

SplitResult<Tower> tower_extend(const Tower& t, const UPoly& m) {
    const int k = t.size();
    auto parts = dynamic_eval(t, [&](const Tower& cur) {
        UPoly mm = m;
        utrim(cur, mm);
        if (mm.empty()) throw std::invalid_argument("tower_extend: zero polynomial");
        if (udeg(mm) < 1) throw std::invalid_argument("tower_extend: constant polynomial");
        UPoly s = usquarefree(cur, mm);
        return cur.pushed(from_upoly(s, k));
    });
    SplitResult<Tower> out;
    for (auto& b : parts) out.push_back({b.value, b.value});
    return out;
}

SplitResult<bool> is_zero(const Tower& t, const Poly& a) {
    return dynamic_eval(t, [&](const Tower& cur) { return zero_test(cur, a); });
}

SplitResult<bool> is_zero(const TowerElement& a) { return is_zero(a.tower, a.value); }

SplitResult<std::optional<Poly>> invert(const Tower& t, const Poly& a) {
    return dynamic_eval(t, [&](const Tower& cur) { return try_inverse(cur, a); });
}

SplitResult<std::optional<Poly>> invert(const TowerElement& a) { return invert(a.tower, a.value); }

std::vector<Tower> split_rational_roots(const Tower& t) {
    std::vector<Tower> done{Tower()};
    for (int j = 0; j < t.size(); ++j) {
        std::vector<Tower> next;
        for (auto& base : done) {
            Poly m = base.reduce(t.modulus(j));
            bool rational_coeffs = m.main_var() == j;
            for (auto& c : m.coeffs(j)) rational_coeffs = rational_coeffs && c.is_constant();
            if (!rational_coeffs || m.degree(j) == 1) {
                next.push_back(base.pushed(m));
                continue;
            }
            Poly rest = m;
            for (auto& r : rational_roots(m)) {
                Poly lin = Poly::var(j) - Poly(r);
                next.push_back(base.pushed(lin));
                rest = *exact_divide(rest, lin);
            }
            if (rest.degree(j) > 0) next.push_back(base.pushed(monic(rest)));
        }
        done = std::move(next);
    }
    return done;
}

}  // namespace qcl
