#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcl/chain.hpp"
#include "qcl/limits.hpp"

namespace qcl {

struct ClosureDescription {
    RegularChain chain;
    std::vector<LimitPoint> limit_set;
};

// closure(W(R)) = W(R) together with its limit points; empty limit set for
// dimension zero.
ClosureDescription closure(const RegularChain& R, const LimitOptions& opt = {});

// All r_i vanish at z and h_R does not, per branch of z's tower.
SplitResult<bool> point_in_quasi_component(const LimitPoint& z, const RegularChain& R);
bool in_quasi_component(const LimitPoint& z, const RegularChain& R);

// Points of W(C) for a zero-dimensional C, canonicalized.
std::vector<LimitPoint> chain_points(const RegularChain& C);

// Every conjugate of z lies in W(D) or in lim(W(D)).
bool point_in_closure(const LimitPoint& z, const RegularChain& D, const LimitOptions& opt = {});

// Every polynomial of B pseudo-reduces to zero modulo A. Decides
// closure(W(A)) within closure(W(B)) when sat(A) is radical.
bool chain_inclusion(const RegularChain& A, const RegularChain& B);

struct RedundancyOptions {
    // Caller asserts radical saturated ideals; needed for equal-dimension
    // inclusion of one-dimensional chains.
    bool radical = false;
    LimitOptions limits;
};

struct RedundancyResult {
    std::vector<RegularChain> kept;
    std::vector<std::size_t> removed;  // input indices
    std::vector<std::string> notes;
};

// Drop chains whose closure lies in the closure of another kept chain; the
// first of two equal components is kept.
RedundancyResult remove_redundant(const std::vector<RegularChain>& chains, const RedundancyOptions& opt = {});

}  // namespace qcl
