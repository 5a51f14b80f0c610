#pragma once

#include <string>
#include <vector>

#include "qcl/puiseux.hpp"

namespace qcl {

enum class AccuracyMode { Degree, Iterative, Generic };
enum class BoundSource { Degree, Iterative, Generic, Final };

AccuracyMode parse_accuracy_mode(const std::string& s);
std::string to_string(AccuracyMode m);

// taus[i] is the accuracy for the parametrizations of level i + 1.
struct AccuracyPlan {
    std::vector<long> taus;
    std::vector<BoundSource> source;
};

// Accuracy of f needed for m1 known coefficients after one substitution
// step with ramification q and line value l.
long lift_accuracy(long m1, long q, long l);

// Smallest m >= tau for which Newton-Puiseux on the approximation of f of
// accuracy m succeeds and agrees with accuracy m + 1. Throws
// InsufficientAccuracy if f is not known far enough, and
// std::runtime_error("estimate exceeded ceiling") past ceiling
// (default 64 tau).
long accuracy_estimate(const Tower& t, const SeriesPoly& f, long tau, long ceiling = 0);

long generic_accuracy(long tau, long delta);

// Plan from the main degrees d_1..d_{s-1} and initial orders
// delta_1..delta_{s-1}. Iterative mode starts from the degree plan with
// theta(f_i, tau_i) = tau_i and is refined at run time.
AccuracyPlan chain_accuracies(const std::vector<long>& d, const std::vector<long>& delta, AccuracyMode mode);

// Symbolic check of the structure of the coefficient system obtained by
// substituting a generic truncated series into a generic polynomial.
bool prime_chain_check(int d, int tau);

bool same_parametrizations(const std::vector<PuiseuxParam>& a, const std::vector<PuiseuxParam>& b);

}  // namespace qcl
