#pragma once

#include <string>
#include <vector>

#include "qcl/poly.hpp"

namespace qcl {

// Triangular set in X_1 < ... < X_s; variable index k is X_{k+1}. With
// s-1 polynomials (dimension one) r_i has main variable X_{i+1}; with s
// polynomials (dimension zero) r_i has main variable X_i.
struct RegularChain {
    VarOrder order;
    std::vector<Poly> polys;

    int s() const { return static_cast<int>(order.size()); }
    int dimension() const { return s() - static_cast<int>(polys.size()); }
    // Variable index of the main variable of r_i (1-based).
    int main_var(int i) const { return i - 1 + dimension(); }
    Poly init(int i) const { return polys.at(i - 1).lc(main_var(i)); }
    long main_degree(int i) const { return polys.at(i - 1).degree(main_var(i)); }
    Poly h_R() const;
    std::string str() const;
};

struct ChainDiagnostics {
    bool triangular = true;
    bool strongly_normalized = true;
    bool dimension_one = true;
    std::vector<std::string> issues;

    bool valid() const { return triangular && strongly_normalized && dimension_one; }
};

ChainDiagnostics validate_chain(const RegularChain& R);

// Triangular shape for dimension zero or one; dimension one also needs
// strong normalization.
ChainDiagnostics validate_component(const RegularChain& R);

}  // namespace qcl
