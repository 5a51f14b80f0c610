#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcl/numeric.hpp"

using namespace qcl;

namespace {

const Poly X1 = Poly::var(0), X2 = Poly::var(1), X3 = Poly::var(2);

RegularChain chain(int s, std::vector<Poly> polys) {
    RegularChain R;
    for (int i = 1; i <= s; ++i) R.order.names.push_back("X" + std::to_string(i));
    R.polys = std::move(polys);
    return R;
}

RegularChain intro() {
    return chain(3, {X1 * X2 * X2 + X2 + 1, (X1 + 2) * X1 * X3 * X3 + (X2 + 1) * (X3 + 1)});
}

bool near(const std::vector<cplx>& a, std::vector<long double> b, long double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (std::abs(a[k] - cplx(b[k])) > tol) return false;
    return true;
}

bool has(const NumericResult& r, std::vector<long double> b) {
    for (auto& p : r.points)
        if (near(p.coords, b, 1e-4L)) return true;
    return false;
}

}  // namespace

TEST_CASE("numeric branch limits of the worked example") {
    auto r0 = numeric_branch_limits(intro(), 0);
    CHECK(r0.points.size() == 2);
    CHECK(has(r0, {0, -1, 1}));
    CHECK(has(r0, {0, -1, -0.5L}));
    CHECK(r0.unconverged == 0);
    auto r2 = numeric_branch_limits(intro(), -2);
    CHECK(r2.points.size() == 2);
    CHECK(has(r2, {-2, 1, -1}));
    CHECK(has(r2, {-2, -0.5L, -1}));
    for (auto& p : r2.points) CHECK(p.epsilon == doctest::Approx(1e-6));
}

TEST_CASE("hyperbola branches escape") {
    CHECK(numeric_branch_limits(chain(2, {X1 * X2 - 1}), 0).points.empty());
    // at 1e-3 the single branch is still below the divergence bound
    CHECK(numeric_branches(chain(2, {X1 * X2 - 1}), 1e-3L).size() == 1);
}

TEST_CASE("cross check examples") {
    auto R = intro();
    auto sym = limit_points_at_zero(R);
    auto num = numeric_branch_limits(R, 0).points;
    auto rep = cross_check(sym, num, 1e-4L);
    CHECK(rep.full());
    CHECK(rep.matched.size() == 2);
    CHECK(cross_check({}, {}, 1e-4L).full());
    auto bad = sym;
    bad[0].coords[2] += Poly(Rational(1, 1000));
    auto rb = cross_check(bad, num, 1e-4L);
    CHECK_FALSE(rb.full());
    CHECK(rb.unmatched_symbolic.size() == 1);
    CHECK(rb.unmatched_numeric.size() == 1);
    CHECK(rb.str().find("unmatched symbolic 1") != std::string::npos);
}

TEST_CASE("algebraic symbolic points expand to all conjugates") {
    auto R = chain(2, {(X1 * X1 - 2) * X2 * X2 + X2 - X1});
    auto sym = limit_points(R);
    REQUIRE(sym.size() == 1);
    CHECK(numeric_points(sym[0]).size() == 2);
    auto rep = cross_check(sym, numeric_limits(R).points, 1e-4L);
    CHECK(rep.full());
    CHECK(rep.matched.size() == 2);
}

TEST_CASE("distance to rational limit points shrinks along the ladder") {
    std::vector<RegularChain> suite{intro(), chain(2, {X1 * X2 * X2 + X2 + 1}),
                                    chain(3, {X1 * X2 * X2 + X2 + 1, (X1 + 3) * X3 * X3 - X2 * X3 - 1})};
    NumericOptions opt;
    for (auto& R : suite) {
        for (auto& p : limit_points(R)) {
            if (p.tower.size() != 0) continue;
            std::vector<cplx> target;
            for (auto& c : p.coords) target.push_back(cplx(static_cast<long double>(c.constant_value().get_d())));
            long double last = -1;
            for (auto eps : opt.epsilons) {
                long double best = 1e300L;
                for (auto& b : numeric_branches(R, target[0] + eps)) {
                    long double d = 0;
                    for (std::size_t k = 0; k < b.size(); ++k) d = std::max(d, std::abs(b[k] - target[k]));
                    best = std::min(best, d);
                }
                if (last >= 0) CHECK(best <= 10 * last + 1e-15L);
                last = best;
            }
            CHECK(last < 1e-4L);
        }
    }
}

TEST_CASE("every numeric cluster has a symbolic match") {
    std::vector<RegularChain> suite{intro(), chain(2, {X1 * X2 - 1}), chain(2, {X1 * X2 * X2 + X2 + 1}),
                                    chain(2, {(X1 * X1 - 2) * X2 * X2 + X2 - X1}),
                                    chain(3, {X1 * X2 * X2 + X2 + 1, (X1 + 3) * X3 * X3 - X2 * X3 - 1})};
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> c(-2, 2);
    while (suite.size() < 12) {
        Poly h = (X1 - c(rng)) * (rng() % 2 ? Poly(1) : X1 - c(rng));
        Poly r1 = h * X2 * X2 + (c(rng) + c(rng) * X1) * X2 + c(rng) + c(rng) * X1;
        if (r1.degree(1) < 2 || gcd(r1, r1.derivative(1)).degree(1) > 0) continue;
        auto R = chain(2, {r1});
        suite.push_back(R);
    }
    for (auto& R : suite) {
        auto sym = limit_points(R);
        auto num = numeric_limits(R).points;
        // ramified branches converge like epsilon^(1/2), hence the looser tolerance
        auto rep = cross_check(sym, num, 1e-2L);
        INFO(R.str());
        INFO(rep.str());
        CHECK(rep.unmatched_numeric.empty());
        CHECK(rep.unmatched_symbolic.empty());
    }
}
