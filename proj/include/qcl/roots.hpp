#pragma once

#include <complex>
#include <vector>

#include "qcl/poly.hpp"

namespace qcl {

using cplx = std::complex<long double>;

cplx horner(const std::vector<cplx>& c, cplx z);
// All complex roots of c[0] + c[1] z + ... + c[n] z^n (Aberth iteration),
// with multiplicity. Leading zeros are ignored.
std::vector<cplx> complex_roots(std::vector<cplx> c);

// Coefficients of a univariate polynomial in variable v, as complex numbers.
std::vector<cplx> to_complex_coeffs(const Poly& f, int v);

// Exact rational roots of a univariate polynomial (distinct, ascending).
std::vector<Rational> rational_roots(const Poly& f);

}  // namespace qcl
