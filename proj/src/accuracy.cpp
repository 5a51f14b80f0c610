#include "qcl/accuracy.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcl {

AccuracyMode parse_accuracy_mode(const std::string& s) {
    if (s == "degree") return AccuracyMode::Degree;
    if (s == "iterative") return AccuracyMode::Iterative;
    if (s == "generic") return AccuracyMode::Generic;
    throw std::invalid_argument("unknown accuracy mode: " + s);
}

std::string to_string(AccuracyMode m) {
    switch (m) {
        case AccuracyMode::Degree: return "degree";
        case AccuracyMode::Iterative: return "iterative";
        case AccuracyMode::Generic: return "generic";
    }
    return "";
}

long lift_accuracy(long m1, long q, long l) {
    if (m1 < 1 || q < 1 || l < 0) throw std::invalid_argument("lift_accuracy: bad arguments");
    // ceiling: q * m - l >= m1 must hold for the lowest coefficient
    return std::max(1L, (m1 + l + q - 1) / q);
}

bool same_parametrizations(const std::vector<PuiseuxParam>& a, const std::vector<PuiseuxParam>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].tower == b[i].tower) || a[i].sigma != b[i].sigma || a[i].accuracy != b[i].accuracy) return false;
        if (Series::exact(a[i].g).c != Series::exact(b[i].g).c) return false;
    }
    return true;
}

long accuracy_estimate(const Tower& t, const SeriesPoly& f, long tau, long ceiling) {
    if (tau < 1) throw std::invalid_argument("accuracy_estimate: accuracy must be positive");
    if (ceiling <= 0) ceiling = 64 * tau;
    long known = kExact;
    for (auto& s : f.a) known = std::min(known, s.acc);
    for (long m = tau; m <= ceiling; ++m) {
        if (m + 1 > known) throw InsufficientAccuracy("accuracy estimate needs more terms of f");
        try {
            auto lo = newton_puiseux(t, approximation(f, m), tau);
            auto hi = newton_puiseux(t, approximation(f, m + 1), tau);
            if (same_parametrizations(lo, hi)) return m;
        } catch (const InsufficientAccuracy&) {
        }
    }
    throw std::runtime_error("estimate exceeded ceiling");
}

long generic_accuracy(long tau, long delta) { return tau + delta; }

AccuracyPlan chain_accuracies(const std::vector<long>& d, const std::vector<long>& delta, AccuracyMode mode) {
    const long n = static_cast<long>(d.size());  // number of levels, s - 1
    if (n == 0 || static_cast<long>(delta.size()) != n) throw std::invalid_argument("chain_accuracies: size mismatch");
    AccuracyPlan plan;
    plan.taus.assign(n, 1);
    plan.source.assign(n, BoundSource::Final);
    if (n == 1) return plan;
    // 1-based views: tau(i), dd(k), del(k); P(j) = d_1 ... d_j
    auto tau = [&](long i) -> long& { return plan.taus[i - 1]; };
    auto del = [&](long k) { return delta[k - 1]; };
    auto P = [&](long j) {
        long r = 1;
        for (long k = 1; k <= j; ++k) r *= d[k - 1];
        return r;
    };
    const BoundSource src = mode == AccuracyMode::Generic     ? BoundSource::Generic
                            : mode == AccuracyMode::Iterative ? BoundSource::Iterative
                                                              : BoundSource::Degree;
    tau(n - 1) = P(n - 1) * del(n) + 1;
    plan.source[n - 2] = src;
    if (mode == AccuracyMode::Generic) {
        long sum = 0;
        for (long k = 2; k <= n; ++k) sum += del(k);
        for (long i = 1; i <= n - 2; ++i) {
            tau(i) = P(n - 1) * sum + 1;
            plan.source[i - 1] = src;
        }
        return plan;
    }
    for (long i = n - 1; i >= 2; --i) {
        const long theta = mode == AccuracyMode::Degree ? generic_accuracy(tau(i), P(i - 1) * del(i)) : tau(i);
        tau(i - 1) = std::max(theta, P(i - 1) * del(n) + 1);
        plan.source[i - 2] = src;
    }
    return plan;
}

bool prime_chain_check(int d, int tau) {
    if (d < 1 || tau < 1) throw std::invalid_argument("prime_chain_check: bad arguments");
    const int na = (d + 1) * tau;
    auto a = [&](int i, int j) { return Poly::var(i * tau + j); };
    auto b = [&](int k) { return Poly::var(na + k); };
    const int xv = na + tau;
    const Poly X = Poly::var(xv);
    Poly g;
    for (int k = 0; k < tau; ++k) g += b(k) * X.pow(k);
    Poly p, gp(1);
    for (int i = 0; i <= d; ++i) {
        Poly ai;
        for (int j = 0; j < tau; ++j) ai += a(i, j) * X.pow(j);
        p += ai * gp;
        gp *= g;
    }
    Poly F0 = p.coeff(xv, 0);
    Poly expect0;
    for (int i = 0; i <= d; ++i) expect0 += a(i, 0) * b(0).pow(i);
    if (F0 != expect0 || F0.main_var() != na || F0.degree(na) != d) return false;
    Poly init;
    for (int i = 1; i <= d; ++i) init += Poly(i) * a(i, 0) * b(0).pow(i - 1);
    for (int k = 1; k < tau; ++k) {
        Poly Fk = p.coeff(xv, k);
        if (Fk.main_var() != na + k || Fk.degree(na + k) != 1) return false;
        if (Fk.lc(na + k) != init) return false;
    }
    // regular: the common initial is coprime with F0
    return tau == 1 || !resultant(F0, init, na).is_zero();
}

}  // namespace qcl
