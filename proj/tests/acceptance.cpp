// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "qcl/accuracy.hpp"
#include "qcl/closure.hpp"
#include "qcl/numeric.hpp"
#include "qcl/puiseux.hpp"
#include "support.hpp"

using namespace qcl;

namespace {

constexpr double kIntroSeconds = 5.0;
constexpr double kHyperbolaSeconds = 1.0;
constexpr double kRootsSeconds = 60.0;
constexpr long double kCrossTol = 1e-4L;
constexpr long double kSmallestEpsilon = 1e-6L;
constexpr long kRaise = 5;
constexpr int kRootsCases = 50;

const Poly X1 = Poly::var(0), X2 = Poly::var(1), X3 = Poly::var(2);
const Poly X = X1, Y = X2;

RegularChain chain(int s, std::vector<Poly> polys) {
    RegularChain R;
    for (int i = 1; i <= s; ++i) R.order.names.push_back("X" + std::to_string(i));
    R.polys = std::move(polys);
    return R;
}

RegularChain intro() {
    return chain(3, {X1 * X2 * X2 + X2 + 1, (X1 + 2) * X1 * X3 * X3 + (X2 + 1) * (X3 + 1)});
}
RegularChain hyperbola() { return chain(2, {X1 * X2 - 1}); }

SeriesPoly sp(const Poly& f) { return SeriesPoly::from_poly(f, 0, 1); }

// Every limit point produced here, with its chain, for the invariant gate.
std::vector<std::pair<RegularChain, LimitPoint>> emitted;

std::vector<LimitPoint> record(const RegularChain& R, std::vector<LimitPoint> pts) {
    for (auto& p : pts) emitted.emplace_back(R, p);
    return pts;
}

double seconds(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::set<std::vector<Rational>> rational_set(const std::vector<LimitPoint>& pts, bool& ok) {
    std::set<std::vector<Rational>> out;
    for (auto& p : pts) {
        if (p.tower.size() != 0) ok = false;
        std::vector<Rational> v;
        for (auto& c : p.coords) {
            if (!c.is_constant()) ok = false;
            v.push_back(c.constant_value());
        }
        out.insert(v);
    }
    return out;
}

std::vector<std::string> keys(const std::vector<LimitPoint>& pts) {
    std::vector<std::string> k;
    for (auto& p : pts) k.push_back(p.key());
    return k;
}

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("criterion %d %s: %s (%s)\n", n, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
    std::fflush(stdout);
}

template <class F>
void guarded(int n, const std::string& what, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        report(n, false, what, std::string("exception: ") + e.what());
    }
}

// --- 1 ---
void intro_exact() {
    std::vector<LimitPoint> pts;
    double t = seconds([&] { pts = record(intro(), limit_points(intro())); });
    bool ok = true;
    auto got = rational_set(pts, ok);
    const std::set<std::vector<Rational>> want{
        {0, -1, 1}, {0, -1, Rational(-1, 2)}, {-2, 1, -1}, {-2, Rational(-1, 2), -1}};
    ok = ok && pts.size() == 4 && got == want && t <= kIntroSeconds;
    report(1, ok, "worked example limit points exact", std::to_string(pts.size()) + " points, " +
                                                          std::to_string(t) + " s of " + std::to_string(kIntroSeconds));
}

// --- 2 ---
void hyperbola_empty() {
    std::vector<LimitPoint> pts;
    double t = seconds([&] { pts = record(hyperbola(), limit_points(hyperbola())); });
    report(2, pts.empty() && t <= kHyperbolaSeconds, "X1*X2 - 1 has no limit points",
           std::to_string(pts.size()) + " points, " + std::to_string(t) + " s of " + std::to_string(kHyperbolaSeconds));
}

// --- 3 ---
// Parametrizations with the tower split at rational roots.
std::vector<std::pair<long, std::vector<Poly>>> split_params(const std::vector<PuiseuxParam>& ps, long upto) {
    std::vector<std::pair<long, std::vector<Poly>>> out;
    for (auto& p : ps)
        for (auto& t : split_rational_roots(p.tower)) {
            if (t.total_degree() != 1) continue;
            std::vector<Poly> g;
            for (long k = 0; k < upto; ++k) {
                Poly c = t.reduce(p.coef(k));
                for (int j = t.size() - 1; j >= 0; --j) c = c.subst(j, -(t.modulus(j) - Poly::var(j)));
                g.push_back(c);
            }
            out.emplace_back(p.sigma, g);
        }
    auto text = [](const std::pair<long, std::vector<Poly>>& p) {
        std::string s = std::to_string(p.first);
        for (auto& c : p.second) s += "," + c.str();
        return s;
    };
    std::sort(out.begin(), out.end(), [&](auto& a, auto& b) { return text(a) < text(b); });
    return out;
}

bool classics(long raise, std::string& detail) {
    bool ok = true;
    auto cusp = newton_puiseux(Tower(), sp(Y * Y - X.pow(3)), 4 + raise);
    auto c = split_params(cusp, 4);
    bool cusp_ok = c.size() == 1 && c[0].first == 2 && c[0].second == std::vector<Poly>{0, 0, 0, 1};
    auto node = newton_puiseux(Tower(), sp(Y * Y - X * X), 2 + raise);
    auto n = split_params(node, 2);
    std::set<std::string> slopes;
    for (auto& [s, g] : n) slopes.insert(g[1].str());
    bool node_ok = n.size() == 2 && n[0].first == 1 && n[1].first == 1 && n[0].second[0].is_zero() &&
                   n[1].second[0].is_zero() && slopes == std::set<std::string>{"1", "-1"};
    auto r1 = newton_puiseux(Tower(), sp(X * Y * Y + Y + 1), 2 + raise);
    auto r = split_params(r1, 2);
    bool r1_ok = r.size() == 1 && r[0].first == 1 && r[0].second == std::vector<Poly>{-1, -1};
    if (raise == 0) r1_ok = r1_ok && r1.size() == 1 && r1[0].accuracy == 2 && cusp.size() == 1 && cusp[0].accuracy == 4;
    ok = cusp_ok && node_ok && r1_ok;
    detail = std::string("cusp ") + (cusp_ok ? "ok" : "bad") + ", node " + (node_ok ? "ok" : "bad") + ", r1 " +
             (r1_ok ? "ok" : "bad");
    return ok;
}

void puiseux_classics() {
    std::string d;
    bool ok = classics(0, d);
    report(3, ok, "cusp (T^2, T^3) at tau 4, node slopes +-1, r1 (T, -1 - T) at tau 2", d);
}

// --- 4 ---
void constant_terms() {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-4, 4), deg(1, 4);
    int tested = 0, passed = 0;
    double t = seconds([&] {
        while (tested < kRootsCases) {
            Poly f;
            int dy = deg(rng), dx = deg(rng);
            for (int i = 0; i <= dy; ++i)
                for (int j = 0; j <= dx; ++j)
                    if (rng() % 2) f += coef(rng) * X.pow(j) * Y.pow(i);
            if (f.degree(1) < 1) continue;
            auto gen = make_general(Tower(), sp(f));
            Poly fg;
            for (int i = 0; i <= gen.f.degree(); ++i)
                for (std::size_t j = 0; j < gen.f.a[i].c.size(); ++j) fg += gen.f.a[i].c[j] * X.pow(j) * Y.pow(i);
            Poly f0 = fg.subst(0, Poly());
            if (f0.degree(1) < 1) continue;
            ++tested;
            Poly sqf = squarefree_part(f0.rename({0, 0}));
            auto ps = newton_puiseux(Tower(), gen.f, 1);
            // route 1: norms of Y - g_i(0) over each tower
            Poly prod(1);
            for (auto& p : ps) {
                const int k = p.tower.size();
                Poly n = test::norm(p.tower, Poly::var(k) - p.coef(0)).rename(std::vector<int>(k + 1, 0));
                prod = lcm(prod, squarefree_part(n));
            }
            bool norm_ok = monic(prod) == sqf;
            // route 2: gcd over the tower of Y - g_i(0) with the square-free part of f(0, Y)
            bool gcd_ok = true;
            long count = 0;
            for (auto& p : ps) {
                const int k = p.tower.size();
                UPoly s = to_upoly(sqf.rename({k}), k);
                UPoly lin{-p.coef(0), Poly(1)};
                for (auto& b : dynamic_eval(p.tower, [&](const Tower& cur) { return udeg(ugcd(cur, lin, s)); })) {
                    gcd_ok = gcd_ok && b.value == 1;
                    count += b.tower.total_degree();
                }
            }
            gcd_ok = gcd_ok && count == sqf.degree(0);
            if (norm_ok && gcd_ok) ++passed;
        }
    });
    report(4, passed == tested && t <= kRootsSeconds, "constant terms equal the roots of f(0, Y)",
           std::to_string(passed) + "/" + std::to_string(tested) + " pass, " + std::to_string(t) + " s of " +
               std::to_string(kRootsSeconds));
}

// --- 5 ---
void numeric_cross() {
    NumericOptions opt;
    bool ladder = opt.epsilons.back() <= kSmallestEpsilon;
    std::string d;
    bool ok = ladder;
    for (long alpha : {0L, -2L}) {
        auto sym = record(intro(), limit_points_at(intro(), Tower(), Poly(alpha)));
        auto rep = cross_check(sym, numeric_branch_limits(intro(), cplx(alpha), opt).points, kCrossTol);
        ok = ok && rep.full() && !sym.empty();
        d += "alpha " + std::to_string(alpha) + ": " + rep.str() + "; ";
    }
    d += "tol 1e-4, smallest epsilon " + std::to_string(static_cast<double>(opt.epsilons.back()));
    report(5, ok, "numeric cross-check of the worked example", d);
}

// --- 6 ---
void stability() {
    LimitOptions up;
    up.offset = kRaise;
    bool a = keys(limit_points(intro())) == keys(record(intro(), limit_points(intro(), up)));
    bool b = record(hyperbola(), limit_points(hyperbola(), up)).empty();
    std::string d3;
    bool c = classics(kRaise, d3);
    report(6, a && b && c, "criteria 1-3 unchanged with every accuracy raised by 5",
           std::string("intro ") + (a ? "same" : "differs") + ", hyperbola " + (b ? "empty" : "nonempty") + ", " + d3);
}

// --- 7 ---
std::optional<RegularChain> point_chain(const LimitPoint& p, int s) {
    std::vector<Poly> polys;
    if (p.tower.size() > 1) return std::nullopt;
    if (p.tower.size() == 1) {
        if (p.coords[0] != X1) return std::nullopt;
        polys.push_back(p.tower.modulus(0));
    } else {
        polys.push_back(X1 - p.coords[0]);
    }
    for (int k = 1; k < s; ++k) polys.push_back(Poly::var(k) - p.coords[k]);
    return chain(s, polys);
}

void redundancy() {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> c(-3, 3);
    int suites = 0, clean = 0, planted = 0;
    while (suites < 10) {
        const int root = c(rng);
        Poly h = (X1 - root) * (rng() % 2 ? Poly(1) : X1 - c(rng));
        Poly r1 = h * X2 * X2 + (c(rng) + c(rng) * X1) * X2 + c(rng) + c(rng) * X1;
        if (r1.degree(1) < 2 || gcd(r1, r1.derivative(1)).degree(1) > 0) continue;
        auto R = chain(2, {r1});
        auto lim = record(R, limit_points(R));
        std::vector<RegularChain> in{R};
        std::vector<std::size_t> want;
        for (auto& p : lim)
            if (auto pc = point_chain(p, 2)) {
                want.push_back(in.size());
                in.push_back(*pc);
            }
        for (int a = 5; a < 8; ++a) {
            if (h.eval({a}) == 0) continue;
            want.push_back(in.size());
            in.push_back(chain(2, {X1 - a, r1.subst(0, Poly(a))}));
            break;
        }
        // foreign points, distinct from each other
        Rational b = 13;
        for (Rational a : {Rational(root), Rational(c(rng))}) {
            b += 1;
            if (r1.eval({a, b}) != 0) in.push_back(chain(2, {X1 - a, X2 - b}));
        }
        planted += static_cast<int>(in.size()) - 1;
        auto res = remove_redundant(in);
        if (res.removed == want) ++clean;
        else if (std::getenv("QCL_DEBUG")) {
            for (auto& ch : in) std::fprintf(stderr, "  %s\n", ch.str().c_str());
            for (auto i : res.removed) std::fprintf(stderr, "  removed %zu\n", i);
            for (auto i : want) std::fprintf(stderr, "  want %zu\n", i);
        }
        ++suites;
    }
    // three redundant points of the worked example, one foreign point
    Poly r2 = intro().polys[1];
    std::vector<RegularChain> f{intro(), chain(3, {X1, X2 + 1, X3 - 1}), chain(3, {X1 + 2, X2 - 1, X3 + 1}),
                                chain(3, {4 * X1 + 3, X2 - 2, r2.subst(0, Poly(Rational(-3, 4))).subst(1, Poly(2))}),
                                chain(3, {X1 + 2, X2 - 1, X3 - 1})};
    auto res = remove_redundant(f);
    bool three = res.removed == std::vector<std::size_t>{1, 2, 3} && res.kept.size() == 2;
    report(7, clean == suites && three, "planted redundant components removed, others kept",
           std::to_string(clean) + "/" + std::to_string(suites) + " suites clean over " + std::to_string(planted) +
               " plants; synthetic case removed " + std::to_string(res.removed.size()) + " of 3");
}

// --- 8 ---
void prime_chain() {
    int pass = 0, total = 0;
    for (int d = 1; d <= 3; ++d)
        for (int tau = 1; tau <= 3; ++tau) {
            ++total;
            if (prime_chain_check(d, tau)) ++pass;
        }
    report(8, pass == total, "prime chain structure for d, tau <= 3",
           std::to_string(pass) + "/" + std::to_string(total));
}

// --- 9 ---
void invariant_gate() {
    // further chains beyond those exercised above
    std::vector<RegularChain> extra{chain(2, {X1 * X2 * X2 + X2 + 1}), chain(2, {(X1 * X1 - 2) * X2 * X2 + X2 - X1}),
                                    chain(3, {X1 * X2 * X2 + X2 + 1, (X1 + 3) * X3 * X3 - X2 * X3 - 1}),
                                    chain(3, {X1 * X2 * X2 - X1 * X1 - X1 * X1 * X1, X3 * X3 * X1 - X2 * X2 + X1 * X3})};
    for (auto mode : {AccuracyMode::Iterative, AccuracyMode::Generic}) record(intro(), limit_points(intro(), {mode, 0}));
    for (auto& R : extra) record(R, limit_points(R));
    int bad = 0;
    for (auto& [R, p] : emitted)
        if (!check_membership(R, p)) ++bad;
    report(9, bad == 0 && !emitted.empty(), "every emitted limit point satisfies r_i = 0 and h_R = 0",
           std::to_string(emitted.size()) + " points, " + std::to_string(bad) + " violations");
}

}  // namespace

int main() {
    guarded(1, "worked example limit points exact", intro_exact);
    guarded(2, "X1*X2 - 1 has no limit points", hyperbola_empty);
    guarded(3, "Newton-Puiseux classics", puiseux_classics);
    guarded(4, "constant terms equal the roots of f(0, Y)", constant_terms);
    guarded(5, "numeric cross-check of the worked example", numeric_cross);
    guarded(6, "accuracy stability", stability);
    guarded(7, "redundancy removal", redundancy);
    guarded(8, "prime chain structure", prime_chain);
    guarded(9, "membership invariant", invariant_gate);
    std::printf("%s\n", failures ? "acceptance: FAIL" : "acceptance: PASS");
    return failures ? 1 : 0;
}
