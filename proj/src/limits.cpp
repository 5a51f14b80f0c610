#include "qcl/limits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

namespace qcl {

namespace {

struct LevelInsufficient {
    int level;
};

// Level-i polynomials seen during a run, for the iterative plan refinement.
struct LevelPoly {
    int level;
    Tower tower;
    SeriesPoly f;
};

struct Item {
    Tower t;
    ParamVector phi;
};

ParamVector reduce_param(const ParamVector& p, const Tower& t) {
    ParamVector r{t, {}, p.sigmas};
    for (auto& s : p.coords) r.coords.push_back(s_reduce(t, s));
    return r;
}

// One pass of the level loop for a fixed plan.
std::vector<LimitPoint> run_levels(const RegularChain& R, const Tower& t0, const Poly& alpha,
                                   const std::vector<long>& taus, std::vector<LevelPoly>* seen) {
    const int n = R.s() - 1;
    ParamVector start{t0, {Series::exact({t0.reduce(alpha), Poly(1)})}, {}};
    std::vector<Item> items{{t0, start}};
    for (int i = 1; i <= n; ++i) {
        std::vector<Item> next;
        std::deque<Item> work(items.begin(), items.end());
        while (!work.empty()) {
            Item it = std::move(work.front());
            work.pop_front();
            try {
                SeriesPoly f = substitute_param(R.polys[i - 1], it.phi);
                if (i > 1) f = make_general(it.t, f).f;
                if (seen) seen->push_back({i, it.t, f});
                for (auto& par : newton_puiseux(it.t, f, taus[i - 1])) {
                    ParamVector np{par.tower, {}, it.phi.sigmas};
                    for (auto& s : it.phi.coords) np.coords.push_back(s_reduce(par.tower, s_compose_pow(s, par.sigma)));
                    np.coords.push_back(Series::known(par.g, par.accuracy));
                    np.sigmas.push_back(par.sigma);
                    next.push_back({par.tower, std::move(np)});
                }
            } catch (const SplitSignal& s) {
                auto parts = split_tower(it.t, s);
                for (auto p = parts.rbegin(); p != parts.rend(); ++p) work.push_front({*p, reduce_param(it.phi, *p)});
            } catch (const InsufficientAccuracy&) {
                throw LevelInsufficient{i};
            }
        }
        items = std::move(next);
    }
    std::vector<LimitPoint> out;
    for (auto& it : items) {
        LimitPoint p{it.t, {}};
        for (auto& s : it.phi.coords) p.coords.push_back(it.t.reduce(s.coef(0)));
        out.push_back(std::move(p));
    }
    return out;
}

// Order at alpha of a univariate polynomial in X_1.
long order_at(const Tower& t, const Poly& h, const Poly& alpha) {
    Series x = Series::exact({t.reduce(alpha), Poly(1)});
    Series v = Series::exact({});
    auto cs = h.coeffs(0);
    for (auto c = cs.rbegin(); c != cs.rend(); ++c) v = s_add(s_mul(t, v, x), Series::exact(std::vector<Poly>{*c}));
    for (std::size_t k = 0; k < v.c.size(); ++k)
        if (!zero_test(t, v.c[k])) return static_cast<long>(k);
    throw std::invalid_argument("order_at: zero polynomial");
}

struct BranchSetup {
    bool root = false;
    std::vector<long> delta;
};

std::vector<LimitPoint> solve_branch(const RegularChain& R, const Tower& t, const Poly& alpha,
                                     const std::vector<long>& delta, const LimitOptions& opt,
                                     LimitStats* stats) {
    const int n = R.s() - 1;
    std::vector<long> d;
    for (int i = 1; i <= n; ++i) d.push_back(R.main_degree(i));
    AccuracyPlan plan = chain_accuracies(d, delta, opt.mode);
    for (long& tau : plan.taus) tau += opt.offset;
    std::vector<long> cap;
    for (long tau : plan.taus) {
        cap.push_back(opt.ceiling > 0 ? opt.ceiling : 64 * tau);
        if (tau > cap.back()) throw AccuracyCeilingExceeded("initial accuracy plan exceeds the ceiling");
    }
    while (true) {
        try {
            std::vector<LevelPoly> seen;
            auto pts = run_levels(R, t, alpha, plan.taus, opt.mode == AccuracyMode::Iterative ? &seen : nullptr);
            if (opt.mode == AccuracyMode::Iterative) {
                // theta(f_i, tau_i) from the level polynomials of this run
                bool raised = false;
                for (auto& lp : seen) {
                    if (lp.level < 2) continue;
                    long theta;
                    try {
                        theta = accuracy_estimate(lp.tower, lp.f, plan.taus[lp.level - 1], cap[lp.level - 2]);
                    } catch (const InsufficientAccuracy&) {
                        theta = 2 * plan.taus[lp.level - 2];
                    } catch (const SplitSignal&) {
                        continue;
                    } catch (const std::runtime_error&) {
                        throw AccuracyCeilingExceeded("accuracy ceiling exceeded at level " + std::to_string(lp.level));
                    }
                    if (theta > plan.taus[lp.level - 2]) {
                        if (theta > cap[lp.level - 2])
                            throw AccuracyCeilingExceeded("accuracy ceiling exceeded at level " +
                                                          std::to_string(lp.level));
                        plan.taus[lp.level - 2] = theta;
                        raised = true;
                    }
                }
                if (raised) {
                    if (stats) ++stats->escalations;
                    continue;
                }
            }
            if (stats) stats->plans.push_back(plan);
            return pts;
        } catch (const LevelInsufficient& e) {
            if (e.level < 2) throw std::logic_error("insufficient accuracy on exact input");
            for (int j = 0; j < e.level - 1; ++j) {
                plan.taus[j] *= 2;
                if (plan.taus[j] > cap[j])
                    throw AccuracyCeilingExceeded("accuracy ceiling exceeded at level " + std::to_string(e.level));
            }
            if (stats) ++stats->escalations;
        }
    }
}

// Substitute linear generators, drop generators no coordinate depends on.
LimitPoint simplify(const LimitPoint& p) {
    const int K = p.tower.size();
    std::vector<Poly> mods = p.tower.moduli();
    std::vector<Poly> coords = p.coords;
    std::vector<bool> gone(K, false);
    for (int j = 0; j < K; ++j) {
        if (mods[j].degree(j) != 1) continue;
        Poly v = -(mods[j] - Poly::var(j));
        gone[j] = true;
        for (int k = j + 1; k < K; ++k) mods[k] = mods[k].subst(j, v);
        for (auto& c : coords) c = c.subst(j, v);
    }
    std::vector<bool> need(K, false);
    for (auto& c : coords)
        for (int j = 0; j < K; ++j)
            if (c.involves(j)) need[j] = true;
    for (int j = K - 1; j >= 0; --j)
        if (need[j])
            for (int k = 0; k < j; ++k)
                if (mods[j].involves(k)) need[k] = true;
    std::vector<int> map(K, 0);
    int next = 0;
    for (int j = 0; j < K; ++j)
        if (need[j] && !gone[j]) map[j] = next++;
    Tower nt;
    for (int j = 0; j < K; ++j)
        if (need[j] && !gone[j]) nt = nt.pushed(nt.reduce(mods[j].rename(map)));
    LimitPoint r{nt, {}};
    for (auto& c : coords) r.coords.push_back(nt.reduce(c.rename(map)));
    return r;
}

}  // namespace

std::string LimitPoint::key() const {
    std::string k = "[";
    for (auto& m : tower.str_moduli()) k += m + ";";
    k += "](";
    for (std::size_t i = 0; i < coords.size(); ++i) k += (i ? ", " : "") + tower.str(coords[i]);
    return k + ")";
}

SeriesPoly substitute_param(const Poly& r, const ParamVector& phi) {
    const int v = r.main_var();
    if (v < 0) throw std::invalid_argument("substitute_param: constant polynomial");
    if (static_cast<int>(phi.coords.size()) < v) throw std::invalid_argument("substitute_param: missing coordinates");
    const Tower& t = phi.tower;
    std::map<std::pair<int, unsigned>, Series> cache;
    auto power = [&](int k, unsigned e) -> const Series& {
        auto key = std::make_pair(k, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache.emplace(key, s_pow(t, phi.coords[k], e)).first->second;
    };
    SeriesPoly out;
    out.a.assign(r.degree(v) + 1, Series::exact({}));
    for (auto& [m, c] : r.terms()) {
        Series term = Series::exact({Poly(c)});
        for (int k = 0; k < v && k < static_cast<int>(m.size()); ++k)
            if (m[k]) term = s_mul(t, term, power(k, m[k]));
        const unsigned e = v < static_cast<int>(m.size()) ? m[v] : 0;
        out.a[e] = s_add(out.a[e], term);
    }
    return out;
}

RegularChain shift_chain(const RegularChain& R, const Poly& alpha) {
    RegularChain r = R;
    const Poly x1 = Poly::var(0) + alpha.shift_vars(R.s());
    for (auto& p : r.polys) p = p.subst(0, x1);
    return r;
}

std::vector<LimitPoint> limit_points_raw(const RegularChain& R, const Tower& t, const Poly& alpha,
                                         const LimitOptions& opt, LimitStats* stats) {
    auto diag = validate_chain(R);
    if (!diag.valid()) throw std::invalid_argument("not a strongly normalized one-dimensional chain");
    const int n = R.s() - 1;
    const Poly hR = R.h_R();
    auto setups = dynamic_eval(t, [&](const Tower& cur) {
        BranchSetup b;
        Poly a = cur.reduce(alpha);
        Poly v;
        auto cs = hR.coeffs(0);
        for (auto c = cs.rbegin(); c != cs.rend(); ++c) v = cur.add(cur.mul(v, a), *c);
        b.root = zero_test(cur, v);
        if (!b.root) return b;
        for (int i = 1; i <= n; ++i) b.delta.push_back(order_at(cur, R.init(i), a));
        return b;
    });
    std::vector<LimitPoint> out;
    for (auto& br : setups) {
        if (!br.value.root) continue;
        for (auto& p : solve_branch(R, br.tower, alpha, br.value.delta, opt, stats)) out.push_back(std::move(p));
    }
    return out;
}

std::vector<LimitPoint> limit_points_at(const RegularChain& R, const Tower& t, const Poly& alpha,
                                        const LimitOptions& opt, LimitStats* stats) {
    return canonicalize(limit_points_raw(R, t, alpha, opt, stats));
}

std::vector<LimitPoint> limit_points_at_zero(const RegularChain& R, const LimitOptions& opt) {
    return limit_points_at(R, Tower(), Poly(), opt);
}

std::vector<LimitPoint> limit_points(const RegularChain& R, const LimitOptions& opt, LimitStats* stats) {
    auto diag = validate_chain(R);
    if (!diag.valid()) throw std::invalid_argument("not a strongly normalized one-dimensional chain");
    Poly h = R.h_R();
    if (h.main_var() < 0) return {};
    h = squarefree_part(h);
    Tower t = Tower().pushed(h);
    return limit_points_at(R, t, Poly::var(0), opt, stats);
}

std::vector<LimitPoint> canonicalize(const std::vector<LimitPoint>& pts) {
    std::map<std::string, LimitPoint> uniq;
    for (auto& p : pts) {
        for (auto& t : split_rational_roots(p.tower)) {
            LimitPoint q{t, {}};
            for (auto& c : p.coords) q.coords.push_back(t.reduce(c));
            q = simplify(q);
            uniq.emplace(q.key(), q);
        }
    }
    std::vector<LimitPoint> out;
    for (auto& [k, p] : uniq) out.push_back(p);
    return out;
}

Poly eval_at(const Poly& f, const LimitPoint& p) {
    const int K = p.tower.size();
    std::vector<std::optional<Poly>> subs(K + p.coords.size());
    for (std::size_t k = 0; k < p.coords.size(); ++k) subs[K + k] = p.coords[k];
    return p.tower.reduce(f.shift_vars(K).subst_all(subs));
}

bool check_membership(const RegularChain& R, const LimitPoint& p) {
    auto zero = [&](const Poly& f) {
        for (auto& b : is_zero(p.tower, eval_at(f, p)))
            if (!b.value) return false;
        return true;
    };
    for (auto& r : R.polys)
        if (!zero(r)) return false;
    return zero(R.h_R());
}

}  // namespace qcl
