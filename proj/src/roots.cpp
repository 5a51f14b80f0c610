#include "qcl/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcl {

cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx r = 0;
    for (std::size_t k = c.size(); k-- > 0;) r = r * z + c[k];
    return r;
}

std::vector<cplx> complex_roots(std::vector<cplx> c) {
    while (!c.empty() && c.back() == cplx(0)) c.pop_back();
    std::vector<cplx> roots;
    if (c.size() <= 1) return roots;
    // roots at the origin
    std::size_t z0 = 0;
    while (z0 < c.size() && c[z0] == cplx(0)) ++z0;
    roots.assign(z0, cplx(0));
    c.erase(c.begin(), c.begin() + z0);
    const std::size_t n = c.size() - 1;
    if (n == 0) return roots;
    const cplx lead = c.back();
    for (auto& x : c) x /= lead;
    if (n == 1) {
        roots.push_back(-c[0]);
        return roots;
    }
    std::vector<cplx> dc(n);
    for (std::size_t k = 1; k <= n; ++k) dc[k - 1] = c[k] * static_cast<long double>(k);

    long double radius = std::pow(std::abs(c[0]), 1.0L / n);
    if (!(radius > 0) || !std::isfinite(radius)) radius = 1;
    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[k] = std::polar(radius, ang);
    }
    for (int it = 0; it < 2000; ++it) {
        long double worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx p = horner(c, z[i]);
            if (p == cplx(0)) continue;
            cplx dp = horner(dc, z[i]);
            cplx ratio = p / dp;
            cplx s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s += cplx(1) / (z[i] - z[j]);
            cplx w = ratio / (cplx(1) - ratio * s);
            if (!std::isfinite(std::abs(w))) continue;
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[i])));
        }
        if (worst < 1e-18L) break;
    }
    for (auto& r : z) {
        for (int k = 0; k < 3; ++k) {
            cplx dp = horner(dc, r);
            if (dp == cplx(0)) break;
            cplx step = horner(c, r) / dp;
            if (!std::isfinite(std::abs(step))) break;
            r -= step;
        }
        roots.push_back(r);
    }
    return roots;
}

std::vector<cplx> to_complex_coeffs(const Poly& f, int v) {
    auto cs = f.coeffs(v);
    std::vector<cplx> out;
    for (auto& c : cs) {
        if (!c.is_constant()) throw std::invalid_argument("to_complex_coeffs: not univariate");
        out.emplace_back(static_cast<long double>(c.constant_value().get_d()), 0.0L);
    }
    return out;
}

namespace {

long double to_ld(const Rational& q) {
    // exact enough for well-scaled values; mpf would be overkill here
    return static_cast<long double>(mpz_get_d(q.get_num_mpz_t())) /
           static_cast<long double>(mpz_get_d(q.get_den_mpz_t()));
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& f) {
    std::vector<Rational> out;
    if (f.is_zero()) return out;
    const int v = f.main_var();
    if (v < 0) return out;
    Poly g = squarefree_part(f);
    auto cs = g.coeffs(v);
    std::vector<cplx> cc;
    for (auto& c : cs) cc.emplace_back(to_ld(c.constant_value()), 0.0L);
    // integer multiple of the denominator-free leading coefficient
    Poly gz = normalize_z(g);
    Integer lead = gz.leading_coeff().get_num();
    for (auto& r : complex_roots(cc)) {
        if (std::abs(r.imag()) > 1e-6L * (1 + std::abs(r))) continue;
        long double scaled = r.real() * static_cast<long double>(lead.get_d());
        if (!std::isfinite(scaled) || std::abs(scaled) > 1e17L) continue;
        for (long d : {0L, -1L, 1L}) {
            Integer num = static_cast<long>(std::llround(scaled)) + d;
            Rational x(num, lead);
            x.canonicalize();
            if (g.eval(std::vector<Rational>(v + 1, x)) == 0) {
                if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qcl
