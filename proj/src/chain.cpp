#include "qcl/chain.hpp"

#include <sstream>

namespace qcl {

Poly RegularChain::h_R() const {
    Poly h(1);
    for (int i = 1; i <= static_cast<int>(polys.size()); ++i) h *= init(i);
    return h;
}

std::string RegularChain::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < polys.size(); ++i) os << (i ? ", " : "") << polys[i].str(order);
    os << "}";
    return os.str();
}

ChainDiagnostics validate_chain(const RegularChain& R) {
    ChainDiagnostics d;
    const int s = R.s();
    if (s < 2) {
        d.dimension_one = false;
        d.issues.push_back("need at least two variables");
    }
    if (static_cast<int>(R.polys.size()) != s - 1) {
        d.dimension_one = false;
        d.issues.push_back("expected " + std::to_string(std::max(s - 1, 0)) + " polynomials for " +
                           std::to_string(s) + " variables, got " + std::to_string(R.polys.size()));
    }
    for (std::size_t k = 0; k < R.polys.size(); ++k) {
        const Poly& r = R.polys[k];
        const int i = static_cast<int>(k) + 1;
        const std::string name = "r" + std::to_string(i);
        if (r.main_var() != i) {
            d.triangular = false;
            std::string want = i < s ? R.order.names[i] : "X" + std::to_string(i + 1);
            d.issues.push_back(name + ": main variable must be " + want);
            continue;
        }
        Poly h = r.lc(i);
        if (h.main_var() > 0) {
            d.strongly_normalized = false;
            d.issues.push_back(name + ": initial " + h.str(R.order) + " is not univariate in " + R.order.names[0]);
        }
    }
    return d;
}

ChainDiagnostics validate_component(const RegularChain& R) {
    if (R.dimension() != 0) return validate_chain(R);
    ChainDiagnostics d;
    if (R.s() < 1) {
        d.triangular = false;
        d.issues.push_back("no variables");
    }
    for (int i = 1; i <= static_cast<int>(R.polys.size()); ++i)
        if (R.polys[i - 1].main_var() != R.main_var(i)) {
            d.triangular = false;
            d.issues.push_back("r" + std::to_string(i) + ": main variable must be " + R.order.names[i - 1]);
        }
    return d;
}

}  // namespace qcl
