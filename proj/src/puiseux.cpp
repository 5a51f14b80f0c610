#include "qcl/puiseux.hpp"
#include "qcl/roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>

namespace qcl {

namespace {

struct CoeffOrder {
    enum Kind { Known, Unknown, Zero } kind;
    long value;  // order if Known, lower bound if Unknown
};

// Orders of the Y-coefficients of f, which must be reduced over t.
std::vector<CoeffOrder> coefficient_orders(const Tower& t, const SeriesPoly& f) {
    std::vector<CoeffOrder> out;
    for (auto& s : f.a) {
        std::optional<long> k;
        for (std::size_t j = 0; j < s.c.size() && !k; ++j)
            if (!zero_test(t, s.c[j])) k = static_cast<long>(j);
        if (k) out.push_back({CoeffOrder::Known, *k});
        else if (s.is_exact()) out.push_back({CoeffOrder::Zero, 0});
        else out.push_back({CoeffOrder::Unknown, s.acc});
    }
    return out;
}

using Point = std::pair<long, long>;

std::vector<Point> lower_hull(const std::vector<Point>& pts) {
    std::vector<Point> h;
    for (auto& p : pts) {
        while (h.size() >= 2) {
            auto& o = h[h.size() - 2];
            auto& a = h.back();
            long cross = (a.first - o.first) * (p.second - o.second) - (a.second - o.second) * (p.first - o.first);
            if (cross > 0) break;
            h.pop_back();
        }
        h.push_back(p);
    }
    return h;
}

struct PolygonInfo {
    std::vector<NewtonSegment> near;
    bool parent = false;
    bool parent_exact = false;
};

// Segments whose root order is at most cutoff are near. Coefficients known
// only to be zero to some accuracy must not be able to alter any near
// segment, nor the existence of roots beyond the cutoff.
PolygonInfo analyze(const Tower& t, const SeriesPoly& f, int flag, std::optional<Rational> cutoff) {
    auto ord = coefficient_orders(t, f);
    std::vector<Point> known;
    std::vector<std::pair<long, long>> unknown;
    for (std::size_t i = 0; i < ord.size(); ++i) {
        if (ord[i].kind == CoeffOrder::Known) known.push_back({static_cast<long>(i), ord[i].value});
        else if (ord[i].kind == CoeffOrder::Unknown) unknown.push_back({static_cast<long>(i), ord[i].value});
    }
    if (known.empty()) {
        if (unknown.empty()) throw std::invalid_argument("newton polygon of the zero polynomial");
        throw InsufficientAccuracy("all coefficients vanish to the known accuracy");
    }
    auto hull = lower_hull(known);

    // checkpoints for the piecewise-linear test below
    std::vector<Rational> checks{Rational(0)};
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        Rational e(hull[k].second - hull[k + 1].second, hull[k + 1].first - hull[k].first);
        if (e > 0 && (!cutoff || e <= *cutoff)) checks.push_back(e);
    }
    if (cutoff && *cutoff > 0) checks.push_back(*cutoff);
    auto hull_min = [&](const Rational& e) {
        Rational m = known[0].second + e * known[0].first;
        for (auto& p : known) m = std::min(m, Rational(p.second + e * p.first));
        return m;
    };
    for (auto& [i, lb] : unknown) {
        for (auto& e : checks) {
            Rational gap = lb + e * i - hull_min(e);
            bool ok = (e == 0 && flag == 2) ? gap >= 0 : gap > 0;
            if (!ok) throw InsufficientAccuracy("coefficient order undetermined within accuracy");
        }
        if (!cutoff && i < known.front().first)
            throw InsufficientAccuracy("coefficient order undetermined within accuracy");
    }

    PolygonInfo info;
    bool far = false;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        NewtonSegment s{hull[k].first, hull[k].second, hull[k + 1].first, hull[k + 1].second};
        bool relevant = flag == 1 ? s.j1 <= s.j0 : s.j1 < s.j0;
        if (!relevant) continue;
        if (!cutoff || s.order() <= *cutoff) info.near.push_back(s);
        else far = true;
    }
    if (cutoff) {
        info.parent = far || ord[0].kind != CoeffOrder::Known;
        info.parent_exact = !far && ord[0].kind == CoeffOrder::Zero && f.is_exact();
    }
    return info;
}

Rational binomial(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

// Scales of a finite expansion: a = prod q, c_i, and G = gcd(a, c_1..c_N).
struct Scales {
    long a = 1;
    std::vector<long> c;
    long G = 1;
};

Scales expansion_scales(const CExpansion& pi) {
    Scales s;
    for (auto& t : pi) s.a *= t.q;
    long acc = 0, rest = s.a;
    for (auto& t : pi) {
        rest /= t.q;
        acc += t.p * rest;
        s.c.push_back(acc);
    }
    s.G = s.a;
    for (long c : s.c) s.G = std::gcd(s.G, c);
    return s;
}

// Root classes of phi adjoined to t; each yields one C-term.
std::vector<TermChoice> adjoin_roots(const Tower& t, const SeriesPoly& f, const NewtonSegment& seg) {
    SegmentData sd = segment_poly(t, f, seg);
    UPoly s = usquarefree(t, sd.phi);
    Tower t1 = t;
    Poly xi;
    if (udeg(s) == 1) {
        xi = t.reduce(-s[0]);
    } else {
        const int k = t.size();
        t1 = t.pushed(from_upoly(s, k));
        xi = Poly::var(k);
    }
    if (sd.q == 1) return {{t1, {sd.q, sd.p, xi}, sd.l}};
    // all q-th roots of xi give the same branch up to T -> zeta T
    if (xi.is_constant()) {
        auto r = rational_roots(Poly::var(0, static_cast<unsigned>(sd.q)) - xi);
        if (!r.empty()) return {{t1, {sd.q, sd.p, Poly(r.back())}, sd.l}};
    }
    const int k = t1.size();
    Tower t2 = t1.pushed(Poly::var(k, static_cast<unsigned>(sd.q)) - xi);
    return {{t2, {sd.q, sd.p, Poly::var(k)}, sd.l}};
}

}  // namespace

long PuiseuxParam::support_gcd() const {
    long g = sigma;
    for (std::size_t k = 0; k < this->g.size(); ++k)
        if (!this->g[k].is_zero()) g = std::gcd(g, static_cast<long>(k));
    return g;
}

std::string PuiseuxParam::str(const std::string& var) const {
    std::ostringstream os;
    os << "(" << var;
    if (sigma != 1) os << "^" << sigma;
    Series s = Series::exact(g);
    os << ", " << s.str(tower, var) << ")";
    return os.str();
}

GeneralForm make_general(const Tower& t, const SeriesPoly& f0) {
    SeriesPoly f = f0.reduced(t);
    auto ord = coefficient_orders(t, f);
    std::optional<long> k;
    for (auto& o : ord)
        if (o.kind == CoeffOrder::Known) k = k ? std::min(*k, o.value) : o.value;
    if (!k) throw InsufficientAccuracy("all coefficients vanish to the known accuracy");
    for (auto& o : ord)
        if (o.kind == CoeffOrder::Unknown && o.value < *k)
            throw InsufficientAccuracy("least coefficient order undetermined within accuracy");
    GeneralForm g;
    g.shift = *k;
    for (auto& s : f.a) g.f.a.push_back(s_shift_down(s, *k));
    return g;
}

std::vector<NewtonSegment> newton_polygon(const Tower& t, const SeriesPoly& f, int flag) {
    return analyze(t, f.reduced(t), flag, std::nullopt).near;
}

SegmentData segment_poly(const Tower& t, const SeriesPoly& f, const NewtonSegment& s) {
    const long di = s.i1 - s.i0, dj = s.j0 - s.j1;
    if (di <= 0 || dj < 0) throw std::invalid_argument("segment_poly: not a hull segment");
    const long g = std::gcd(di, dj);
    SegmentData d;
    d.q = di / g;
    d.p = dj / g;
    d.l = d.q * s.j0 + d.p * s.i0;
    d.phi.assign(di / d.q + 1, Poly());
    for (long i = s.i0; i <= s.i1; i += d.q) {
        const long j = s.j0 - d.p * (i - s.i0) / d.q;
        const Series& a = f.a.at(i);
        if (j >= a.acc) throw InsufficientAccuracy("segment coefficient beyond accuracy");
        d.phi[(i - s.i0) / d.q] = t.reduce(a.coef(j));
    }
    return d;
}

SeriesPoly new_polynomial(const Tower& t, const SeriesPoly& f, const CTerm& term, long l) {
    const int d = f.degree();
    std::vector<Series> s;
    for (int i = 0; i <= d; ++i) s.push_back(s_compose_pow(f.a[i], term.q, term.p * i));
    std::vector<Poly> bpow{Poly(1)};
    for (int i = 1; i <= d; ++i) bpow.push_back(t.mul(bpow.back(), term.beta));
    SeriesPoly r;
    for (int k = 0; k <= d; ++k) {
        Series acc = Series::exact({});
        for (int i = k; i <= d; ++i) acc = s_add(acc, s_scale(t, s[i], binomial(i, k) * bpow[i - k]));
        Series sh;
        try {
            sh = s_shift_down(s_reduce(t, acc), l);
        } catch (const std::logic_error&) {
            throw std::logic_error("new_polynomial: negative-power residue");
        }
        if (!sh.is_exact()) sh.acc = std::max(sh.acc, 0L);
        r.a.push_back(std::move(sh));
    }
    return r;
}

std::vector<TermChoice> nonzero_term(const Tower& t, const SeriesPoly& f, int flag) {
    auto parts = dynamic_eval(t, [&](const Tower& cur) {
        SeriesPoly fr = f.reduced(cur);
        std::vector<TermChoice> out;
        for (auto& seg : analyze(cur, fr, flag, std::nullopt).near)
            for (auto& c : adjoin_roots(cur, fr, seg)) out.push_back(std::move(c));
        return out;
    });
    std::vector<TermChoice> out;
    for (auto& b : parts)
        for (auto& c : b.value) out.push_back(std::move(c));
    return out;
}

PuiseuxParam construct_parametrization(const CExpansion& pi) {
    PuiseuxParam par;
    if (pi.empty()) return par;
    Scales sc = expansion_scales(pi);
    par.sigma = sc.a / sc.G;
    const long top = sc.c.back() / sc.G;
    par.g.assign(top + 1, Poly());
    for (std::size_t i = 0; i < pi.size(); ++i) par.g[sc.c[i] / sc.G] += pi[i].beta;
    par.accuracy = top + 1;
    par.terms = pi;
    return par;
}

std::vector<PuiseuxParam> newton_puiseux(const Tower& t0, const SeriesPoly& f0, long tau) {
    if (tau < 1) throw std::invalid_argument("newton_puiseux: accuracy must be positive");
    if (f0.degree() < 1) throw std::invalid_argument("newton_puiseux: degree in Y must be positive");
    struct Item {
        Tower t;
        CExpansion pi;
        SeriesPoly f;
    };
    std::vector<PuiseuxParam> out;
    std::deque<Item> work{{t0, {}, f0}};
    while (!work.empty()) {
        Item it = std::move(work.front());
        work.pop_front();
        try {
            PuiseuxParam base = construct_parametrization(it.pi);
            base.tower = it.t;
            if (!it.pi.empty() && base.accuracy >= tau) {
                out.push_back(std::move(base));
                continue;
            }
            SeriesPoly f = it.f.reduced(it.t);
            Scales sc = expansion_scales(it.pi);
            Rational cutoff = Rational(sc.G * (tau - 1)) - (sc.c.empty() ? 0 : sc.c.back());
            auto info = analyze(it.t, f, it.pi.empty() ? 1 : 2, cutoff);
            std::vector<Item> kids;
            for (auto& seg : info.near) {
                for (auto& ch : adjoin_roots(it.t, f, seg)) {
                    CExpansion npi = it.pi;
                    npi.push_back(ch.term);
                    kids.push_back({ch.tower, npi, new_polynomial(ch.tower, f, ch.term, ch.l)});
                }
            }
            if (info.parent) {
                base.accuracy = info.parent_exact ? kExact : tau;
                out.push_back(std::move(base));
            }
            for (auto k = kids.rbegin(); k != kids.rend(); ++k) work.push_front(std::move(*k));
        } catch (const SplitSignal& s) {
            auto parts = split_tower(it.t, s);
            for (auto p = parts.rbegin(); p != parts.rend(); ++p) {
                Item ni{*p, it.pi, it.f.reduced(*p)};
                for (auto& term : ni.pi) term.beta = p->reduce(term.beta);
                work.push_front(std::move(ni));
            }
        }
    }
    return out;
}

Series substitute(const SeriesPoly& f, const PuiseuxParam& par) {
    const Tower& t = par.tower;
    Series gs = Series::known(par.g, par.accuracy);
    Series r = Series::exact({});
    for (int i = f.degree(); i >= 0; --i) {
        r = s_mul(t, r, gs);
        r = s_add(r, s_reduce(t, s_compose_pow(f.a[i], par.sigma)));
    }
    return r;
}

}  // namespace qcl
