#include "qcl/closure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace qcl {

namespace {

void require_same_order(const RegularChain& a, const RegularChain& b) {
    if (a.order.names != b.order.names) throw std::invalid_argument("incompatible variable orders");
}

void require_valid(const RegularChain& R, const std::string& what) {
    auto d = validate_component(R);
    if (d.valid()) return;
    std::string msg = what + ": invalid chain";
    for (auto& i : d.issues) msg += "; " + i;
    throw std::invalid_argument(msg);
}

struct Partial {
    Tower t;
    std::vector<Poly> coords;
};

// Does every generator of cur satisfy the moduli of c (same level count)?
bool inside(const Tower& cur, const Tower& c) {
    for (int j = 0; j < c.size(); ++j)
        if (!zero_test(cur, c.modulus(j))) return false;
    return true;
}

bool all_true(const SplitResult<bool>& r) {
    return std::all_of(r.begin(), r.end(), [](const Branch<bool>& b) { return b.value; });
}

}  // namespace

ClosureDescription closure(const RegularChain& R, const LimitOptions& opt) {
    require_valid(R, "closure");
    if (R.dimension() == 0) return {R, {}};
    return {R, limit_points(R, opt)};
}

SplitResult<bool> point_in_quasi_component(const LimitPoint& z, const RegularChain& R) {
    if (static_cast<int>(z.coords.size()) != R.s()) throw std::invalid_argument("point and chain dimensions differ");
    return dynamic_eval(z.tower, [&](const Tower& cur) {
        LimitPoint p{cur, z.coords};
        for (auto& r : R.polys)
            if (!zero_test(cur, eval_at(r, p))) return false;
        return !zero_test(cur, eval_at(R.h_R(), p));
    });
}

bool in_quasi_component(const LimitPoint& z, const RegularChain& R) {
    return all_true(point_in_quasi_component(z, R));
}

std::vector<LimitPoint> chain_points(const RegularChain& C) {
    if (C.dimension() != 0) throw std::invalid_argument("chain_points: chain is not zero-dimensional");
    require_valid(C, "chain_points");
    std::vector<Partial> items{{Tower(), {}}};
    for (int i = 1; i <= C.s(); ++i) {
        const int v = C.main_var(i);
        const int d = static_cast<int>(C.main_degree(i));
        std::vector<Partial> next;
        for (auto& it : items) {
            auto res = dynamic_eval(it.t, [&](const Tower& cur) -> std::optional<Partial> {
                const int K = cur.size();
                std::vector<std::optional<Poly>> subs(K + C.s());
                for (std::size_t k = 0; k < it.coords.size(); ++k) subs[K + k] = it.coords[k];
                UPoly u = to_upoly(C.polys[i - 1].shift_vars(K).subst_all(subs), K + v);
                for (auto& c : u) c = cur.reduce(c);
                if (udeg(u) < d || zero_test(cur, u[d])) return std::nullopt;
                UPoly s = usquarefree(cur, u);
                Partial p{cur, {}};
                for (auto& c : it.coords) p.coords.push_back(cur.reduce(c));
                if (udeg(s) == 1) {
                    p.coords.push_back(cur.reduce(-s[0]));
                } else {
                    p.t = cur.pushed(from_upoly(s, K));
                    p.coords.push_back(Poly::var(K));
                }
                return p;
            });
            for (auto& b : res)
                if (b.value) next.push_back(std::move(*b.value));
        }
        items = std::move(next);
    }
    std::vector<LimitPoint> out;
    for (auto& it : items) out.push_back({it.t, it.coords});
    return canonicalize(out);
}

bool point_in_closure(const LimitPoint& z, const RegularChain& D, const LimitOptions& opt) {
    require_valid(D, "point_in_closure");
    const int K = z.tower.size();
    std::vector<Tower> covers;
    for (auto& b : point_in_quasi_component(z, D)) {
        if (b.value) {
            covers.push_back(b.tower);
            continue;
        }
        if (D.dimension() == 0) continue;
        for (auto& q : limit_points_raw(D, b.tower, z.coords[0], opt)) {
            auto eq = dynamic_eval(q.tower, [&](const Tower& cur) {
                for (std::size_t k = 0; k < z.coords.size(); ++k)
                    if (!zero_test(cur, cur.reduce(z.coords[k] - q.coords[k]))) return false;
                return true;
            });
            for (auto& e : eq)
                if (e.value) covers.push_back(e.tower.prefix(K));
        }
    }
    return all_true(dynamic_eval(z.tower, [&](const Tower& cur) {
        return std::any_of(covers.begin(), covers.end(), [&](const Tower& c) { return inside(cur, c); });
    }));
}

bool chain_inclusion(const RegularChain& A, const RegularChain& B) {
    require_same_order(A, B);
    return std::all_of(B.polys.begin(), B.polys.end(),
                       [&](const Poly& b) { return prem_chain(b, A.polys).is_zero(); });
}

RedundancyResult remove_redundant(const std::vector<RegularChain>& chains, const RedundancyOptions& opt) {
    const std::size_t n = chains.size();
    for (std::size_t i = 0; i < n; ++i) {
        require_valid(chains[i], "chain " + std::to_string(i + 1));
        require_same_order(chains[0], chains[i]);
    }
    std::map<std::size_t, std::vector<LimitPoint>> points;
    for (std::size_t i = 0; i < n; ++i)
        if (chains[i].dimension() == 0) points[i] = chain_points(chains[i]);
    RedundancyResult res;
    bool noted = false;
    std::map<std::pair<std::size_t, std::size_t>, bool> memo;
    // closure of chain c inside closure of chain d
    auto covered = [&](std::size_t c, std::size_t d) {
        auto key = std::make_pair(c, d);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const RegularChain &C = chains[c], &D = chains[d];
        bool r = false;
        if (C.dimension() == 0) {
            r = std::all_of(points[c].begin(), points[c].end(),
                            [&](const LimitPoint& p) { return point_in_closure(p, D, opt.limits); });
        } else if (D.dimension() == 1) {
            if (opt.radical) {
                r = chain_inclusion(C, D);
            } else if (!noted) {
                res.notes.push_back(
                    "equal-dimension inclusion not certified without the radical flag; such chains are kept");
                noted = true;
            }
        }
        return memo[key] = r;
    };
    std::vector<bool> removed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n && !removed[i]; ++j) {
            if (j == i || removed[j]) continue;
            if (!covered(i, j)) continue;
            // equal components: the earlier one stays
            if (j < i || !covered(j, i)) removed[i] = true;
        }
        if (removed[i]) res.removed.push_back(i);
        else res.kept.push_back(chains[i]);
    }
    return res;
}

}  // namespace qcl
