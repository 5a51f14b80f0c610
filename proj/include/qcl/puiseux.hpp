#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcl/series.hpp"

namespace qcl {

// Raised when a decision depends on series coefficients beyond the known
// accuracy. Accuracy control catches it and retries with more terms.
struct InsufficientAccuracy : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CTerm {
    long q = 1;
    long p = 0;
    Poly beta;
};
using CExpansion = std::vector<CTerm>;

struct NewtonSegment {
    long i0 = 0, j0 = 0, i1 = 0, j1 = 0;
    // Order of the roots this segment accounts for: (j0 - j1) / (i1 - i0).
    Rational order() const { return Rational(j0 - j1, i1 - i0); }
};

struct SegmentData {
    long q = 1, p = 0, l = 0;
    UPoly phi;
};

// (T^sigma, g(T)) over a tower, g known modulo T^accuracy.
struct PuiseuxParam {
    Tower tower;
    long sigma = 1;
    std::vector<Poly> g;
    long accuracy = 0;
    CExpansion terms;

    Poly coef(long k) const { return k < static_cast<long>(g.size()) ? g[k] : Poly(); }
    bool is_exact() const { return accuracy >= kExact; }
    // gcd of sigma with the exponents of the nonzero terms of g
    long support_gcd() const;
    std::string str(const std::string& var = "T") const;
};

struct GeneralForm {
    SeriesPoly f;
    long shift = 0;
};

// Divide f by X^k, k the least coefficient order. Throws SplitSignal when an
// order depends on a zero divisor of the tower.
GeneralForm make_general(const Tower& t, const SeriesPoly& f);

// Lower hull segments of the points (i, ord a_i). flag 1 keeps slopes <= 0,
// flag 2 keeps slopes < 0.
std::vector<NewtonSegment> newton_polygon(const Tower& t, const SeriesPoly& f, int flag);

SegmentData segment_poly(const Tower& t, const SeriesPoly& f, const NewtonSegment& s);

// X^-l f(X^q, X^p (beta + Y)).
SeriesPoly new_polynomial(const Tower& t, const SeriesPoly& f, const CTerm& term, long l);

struct TermChoice {
    Tower tower;  // extension of the input tower holding beta
    CTerm term;
    long l = 0;
};

// One entry per segment and adjoined root class.
std::vector<TermChoice> nonzero_term(const Tower& t, const SeriesPoly& f, int flag);

// Parametrization of a finite expansion; accuracy is one past the last
// term's exponent (exact when the expansion is empty it is (T, 0)).
PuiseuxParam construct_parametrization(const CExpansion& pi);

// All parametrizations of f of accuracy tau for the branches of
// non-negative order.
std::vector<PuiseuxParam> newton_puiseux(const Tower& t, const SeriesPoly& f, long tau);

// f(T^sigma, g(T)) as a series in T, over the parametrization's tower.
Series substitute(const SeriesPoly& f, const PuiseuxParam& par);

}  // namespace qcl
