#include "qcl/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace qcl {

namespace {

long double to_ld(const Rational& q) {
    return static_cast<long double>(q.get_d());
}

long double dist(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    long double d = 0;
    for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

long double coeff_scale(const Poly& f, const std::vector<cplx>& x) {
    long double s = 0;
    for (auto& [m, c] : f.terms()) {
        long double v = std::abs(to_ld(c));
        for (std::size_t i = 0; i < m.size(); ++i) v *= std::pow(std::abs(x.at(i)), static_cast<long double>(m[i]));
        s = std::max(s, v);
    }
    return s;
}

std::string fmt(cplx z) {
    std::ostringstream os;
    os.precision(8);
    os << z.real();
    if (std::abs(z.imag()) > 1e-12L) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

}  // namespace

cplx eval_complex(const Poly& f, const std::vector<cplx>& x) {
    cplx s = 0;
    for (auto& [m, c] : f.terms()) {
        cplx v(to_ld(c), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) v *= x.at(i);
        s += v;
    }
    return s;
}

std::vector<std::vector<cplx>> numeric_branches(const RegularChain& R, cplx x1, const NumericOptions& opt,
                                                int* unconverged) {
    std::vector<std::vector<cplx>> pts{{x1}};
    for (int i = 1; i <= static_cast<int>(R.polys.size()); ++i) {
        const Poly& r = R.polys[i - 1];
        const int v = R.main_var(i);
        std::vector<std::vector<cplx>> next;
        for (auto& pt : pts) {
            std::vector<cplx> cs;
            for (auto& c : r.coeffs(v)) cs.push_back(eval_complex(c, pt));
            for (auto& z : complex_roots(cs)) {
                if (!std::isfinite(std::abs(z)) || std::abs(z) > opt.divergence) continue;
                auto q = pt;
                q.push_back(z);
                long double scale = coeff_scale(r, q);
                if (std::abs(eval_complex(r, q)) > 1e-8L * std::max<long double>(scale, 1) && unconverged) ++*unconverged;
                next.push_back(std::move(q));
            }
        }
        pts = std::move(next);
    }
    return pts;
}

NumericResult numeric_branch_limits(const RegularChain& R, cplx alpha, const NumericOptions& opt) {
    NumericResult res;
    if (opt.epsilons.empty()) return res;
    std::vector<std::vector<cplx>> prev, cur;
    for (std::size_t k = 0; k < opt.epsilons.size(); ++k) {
        prev = std::move(cur);
        cur = numeric_branches(R, alpha + opt.epsilons[k], opt, k + 1 == opt.epsilons.size() ? &res.unconverged : nullptr);
    }
    const long double eps = opt.epsilons.back();
    std::vector<std::vector<cplx>> stable;
    for (auto& p : cur) {
        bool ok = opt.epsilons.size() == 1;
        for (auto& q : prev) ok = ok || dist(p, q) <= opt.stability;
        if (ok) stable.push_back(p);
    }
    // greedy clustering, representative = mean
    std::vector<std::vector<std::vector<cplx>>> clusters;
    for (auto& p : stable) {
        bool placed = false;
        for (auto& c : clusters)
            if (dist(c.front(), p) <= opt.cluster) {
                c.push_back(p);
                placed = true;
                break;
            }
        if (!placed) clusters.push_back({p});
    }
    for (auto& c : clusters) {
        NumericPoint np{std::vector<cplx>(c.front().size()), eps};
        for (auto& p : c)
            for (std::size_t k = 0; k < p.size(); ++k) np.coords[k] += p[k];
        for (auto& x : np.coords) x /= static_cast<long double>(c.size());
        np.coords[0] = alpha;
        res.points.push_back(std::move(np));
    }
    return res;
}

NumericResult numeric_limits(const RegularChain& R, const NumericOptions& opt) {
    NumericResult res;
    Poly h = R.h_R();
    if (h.main_var() < 0) return res;
    for (auto& a : complex_roots(to_complex_coeffs(squarefree_part(h), 0))) {
        auto r = numeric_branch_limits(R, a, opt);
        res.unconverged += r.unconverged;
        res.points.insert(res.points.end(), r.points.begin(), r.points.end());
    }
    return res;
}

std::vector<std::vector<cplx>> numeric_points(const LimitPoint& p) {
    const Tower& t = p.tower;
    std::vector<std::vector<cplx>> gens{{}};
    for (int j = 0; j < t.size(); ++j) {
        std::vector<std::vector<cplx>> next;
        for (auto& g : gens) {
            std::vector<cplx> cs;
            for (auto& c : t.modulus(j).coeffs(j)) cs.push_back(eval_complex(c, g));
            for (auto& z : complex_roots(cs)) {
                auto q = g;
                q.push_back(z);
                next.push_back(std::move(q));
            }
        }
        gens = std::move(next);
    }
    std::vector<std::vector<cplx>> out;
    for (auto& g : gens) {
        std::vector<cplx> x;
        for (auto& c : p.coords) x.push_back(eval_complex(c, g));
        out.push_back(std::move(x));
    }
    return out;
}

std::string CrossCheckReport::str() const {
    std::ostringstream os;
    os << "matched " << matched.size() << ", unmatched symbolic " << unmatched_symbolic.size()
       << ", unmatched numeric " << unmatched_numeric.size();
    auto list = [&](const char* what, const std::vector<std::size_t>& idx,
                    const std::vector<std::vector<cplx>>& pts) {
        for (auto i : idx) {
            os << "\n  " << what << " (";
            for (std::size_t k = 0; k < pts[i].size(); ++k) os << (k ? ", " : "") << fmt(pts[i][k]);
            os << ")";
        }
    };
    list("symbolic", unmatched_symbolic, symbolic);
    list("numeric", unmatched_numeric, numeric);
    return os.str();
}

CrossCheckReport cross_check(const std::vector<LimitPoint>& symbolic, const std::vector<NumericPoint>& numeric,
                             long double tol) {
    CrossCheckReport rep;
    for (auto& p : symbolic)
        for (auto& x : numeric_points(p)) rep.symbolic.push_back(std::move(x));
    for (auto& p : numeric) rep.numeric.push_back(p.coords);
    const std::size_t ns = rep.symbolic.size(), nn = rep.numeric.size();
    std::vector<std::vector<std::size_t>> adj(ns);
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            if (dist(rep.symbolic[i], rep.numeric[j]) <= tol) adj[i].push_back(j);
    // Kuhn's augmenting paths
    std::vector<long> owner(nn, -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
        for (auto j : adj[i]) {
            if (seen[j]) continue;
            seen[j] = true;
            if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
                owner[j] = static_cast<long>(i);
                return true;
            }
        }
        return false;
    };
    std::vector<bool> hit(ns, false);
    for (std::size_t i = 0; i < ns; ++i) {
        std::vector<bool> seen(nn, false);
        augment(i, seen);
    }
    for (std::size_t j = 0; j < nn; ++j) {
        if (owner[j] < 0) {
            rep.unmatched_numeric.push_back(j);
            continue;
        }
        hit[owner[j]] = true;
        rep.matched.emplace_back(owner[j], j);
    }
    std::sort(rep.matched.begin(), rep.matched.end());
    for (std::size_t i = 0; i < ns; ++i)
        if (!hit[i]) rep.unmatched_symbolic.push_back(i);
    return rep;
}

}  // namespace qcl
