#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcl/accuracy.hpp"
#include "qcl/chain.hpp"

namespace qcl {

struct AccuracyCeilingExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point of lim(W(R)): coordinates X_1..X_s as elements of the tower.
struct LimitPoint {
    Tower tower;
    std::vector<Poly> coords;

    std::string key() const;
};

// Series for X_1..X_k in a common parameter T, over a tower. sigmas records
// the ramification ladder T_{i-1} = T_i^sigma_i.
struct ParamVector {
    Tower tower;
    std::vector<Series> coords;
    std::vector<long> sigmas;
};

struct LimitOptions {
    AccuracyMode mode = AccuracyMode::Degree;
    // Absolute cap on every tau; 0 means 64 times the initial plan entry.
    long ceiling = 0;
    // Added to every entry of the initial plan.
    long offset = 0;
};

struct LimitStats {
    std::vector<AccuracyPlan> plans;  // final plan used on each alpha branch
    int escalations = 0;
};

// r(X_1 = Phi_1, ..., X_v = Phi_v, X_{v+1}) with v the main variable index of r.
SeriesPoly substitute_param(const Poly& r, const ParamVector& phi);

// R(X_1 = X_1 + alpha); generators of alpha are placed after the s chain
// variables in the result.
RegularChain shift_chain(const RegularChain& R, const Poly& alpha);

// Limit points of W(R) with X_1 = alpha, alpha an element of t.
std::vector<LimitPoint> limit_points_at(const RegularChain& R, const Tower& t, const Poly& alpha,
                                        const LimitOptions& opt = {}, LimitStats* stats = nullptr);
// As limit_points_at without canonicalize: each point's tower is a branch
// of t with further generators appended.
std::vector<LimitPoint> limit_points_raw(const RegularChain& R, const Tower& t, const Poly& alpha,
                                         const LimitOptions& opt = {}, LimitStats* stats = nullptr);
std::vector<LimitPoint> limit_points_at_zero(const RegularChain& R, const LimitOptions& opt = {});
std::vector<LimitPoint> limit_points(const RegularChain& R, const LimitOptions& opt = {},
                                     LimitStats* stats = nullptr);

// Split rational roots off the moduli, eliminate linear generators, drop
// unused ones, then deduplicate and sort by key.
std::vector<LimitPoint> canonicalize(const std::vector<LimitPoint>& pts);

// Every r_i and h_R vanish at the point.
bool check_membership(const RegularChain& R, const LimitPoint& p);

// Value of a polynomial in the chain variables at a point (over its tower).
Poly eval_at(const Poly& f, const LimitPoint& p);

}  // namespace qcl
