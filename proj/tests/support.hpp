#pragma once

// Independent helpers for tests: norms via resultants and numeric points of
// towers. None of this is used by the library.

#include <complex>
#include <vector>

#include "qcl/poly.hpp"
#include "qcl/roots.hpp"
#include "qcl/tower.hpp"

namespace qcl::test {

// Norm of the polynomial p (in generators z1..zk and further variables) over
// the tower: successive resultants with the moduli, top generator first.
inline Poly norm(const Tower& t, const Poly& p) {
    Poly r = p;
    for (int j = t.size() - 1; j >= 0; --j)
        if (r.involves(j)) r = resultant(r, t.modulus(j), j);
        else r = r.pow(static_cast<unsigned>(t.degree(j)));
    return r;
}

inline cplx eval_c(const Poly& p, const std::vector<cplx>& pt) {
    cplx s = 0;
    for (auto& [m, c] : p.terms()) {
        cplx v(static_cast<long double>(c.get_d()), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) v *= pt.at(i);
        s += v;
    }
    return s;
}

// All complex points (z1..zk) of a tower, solving level by level.
inline std::vector<std::vector<cplx>> tower_points(const Tower& t) {
    std::vector<std::vector<cplx>> pts{{}};
    for (int j = 0; j < t.size(); ++j) {
        std::vector<std::vector<cplx>> next;
        for (auto& pt : pts) {
            std::vector<cplx> cs;
            for (auto& c : t.modulus(j).coeffs(j)) cs.push_back(eval_c(c, pt));
            for (auto& r : complex_roots(cs)) {
                auto q = pt;
                q.push_back(r);
                next.push_back(q);
            }
        }
        pts = std::move(next);
    }
    return pts;
}

}  // namespace qcl::test
