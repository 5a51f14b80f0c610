#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "qcl/poly.hpp"

namespace qcl {

// Tower of simple extensions Q[z1]/(m1)[z2]/(m2)...; generator zi is the
// polynomial variable i-1. Each modulus is monic in its own generator and
// square-free over every branch of the sub-tower below it.
class Tower {
public:
    Tower() = default;
    explicit Tower(std::vector<Poly> moduli) : mod_(std::move(moduli)) {}

    int size() const { return static_cast<int>(mod_.size()); }
    const std::vector<Poly>& moduli() const { return mod_; }
    const Poly& modulus(int j) const { return mod_.at(j); }
    int degree(int j) const { return mod_.at(j).degree(j); }
    // Product of the generator degrees.
    long total_degree() const;

    Tower prefix(int j) const;
    // Append a modulus that is already monic and reduced; no checks.
    Tower pushed(const Poly& m) const;

    Poly reduce(const Poly& a) const;
    Poly add(const Poly& a, const Poly& b) const { return reduce(a + b); }
    Poly sub(const Poly& a, const Poly& b) const { return reduce(a - b); }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
    Poly pow(const Poly& a, unsigned e) const;

    static std::string gen_name(int j) { return "z" + std::to_string(j + 1); }
    static std::vector<std::string> gen_names(int k);
    std::vector<std::string> names() const { return gen_names(size()); }
    std::vector<std::string> str_moduli() const;
    std::string str(const Poly& a) const { return a.str(names()); }

    friend bool operator==(const Tower& a, const Tower& b) { return a.mod_ == b.mod_; }

private:
    std::vector<Poly> mod_;
};

struct TowerElement {
    Tower tower;
    Poly value;
};

// Raised when a gcd reveals a zero divisor at generator `level`:
// modulus(level) = g * h up to a unit, both monic, g the gcd part.
struct SplitSignal {
    int level;
    Poly g;
    Poly h;
};

template <class A>
struct Branch {
    Tower tower;
    A value;
};

template <class A>
using SplitResult = std::vector<Branch<A>>;

std::vector<Tower> split_tower(const Tower& t, const SplitSignal& s);

// Run f on t; whenever it raises a SplitSignal the tower is split and f is
// rerun on each branch. f must derive all tower data from its argument.
template <class F>
auto dynamic_eval(const Tower& t, F&& f) -> SplitResult<decltype(f(t))> {
    SplitResult<decltype(f(t))> out;
    std::deque<Tower> work{t};
    while (!work.empty()) {
        Tower cur = std::move(work.front());
        work.pop_front();
        try {
            auto v = f(cur);
            out.push_back({std::move(cur), std::move(v)});
        } catch (const SplitSignal& s) {
            auto parts = split_tower(cur, s);
            for (auto it = parts.rbegin(); it != parts.rend(); ++it) work.push_front(*it);
        }
    }
    return out;
}

// Dense univariate polynomials over a tower.
using UPoly = std::vector<Poly>;

UPoly to_upoly(const Poly& p, int v);
Poly from_upoly(const UPoly& u, int v);
int udeg(const UPoly& u);

// Primitive operations that throw SplitSignal instead of branching.
bool zero_test(const Tower& t, const Poly& a);
std::optional<Poly> try_inverse(const Tower& t, const Poly& a);
void utrim(const Tower& t, UPoly& a);
UPoly umonic(const Tower& t, const UPoly& a);
UPoly urem(const Tower& t, const UPoly& a, const UPoly& b);
UPoly uquo(const Tower& t, const UPoly& a, const UPoly& b);
UPoly ugcd(const Tower& t, UPoly a, UPoly b);
UPoly uderivative(const UPoly& a);
UPoly usquarefree(const Tower& t, const UPoly& a);
UPoly umul(const Tower& t, const UPoly& a, const UPoly& b);

// Branching interfaces.
SplitResult<Tower> tower_extend(const Tower& t, const UPoly& m);
SplitResult<bool> is_zero(const Tower& t, const Poly& a);
SplitResult<bool> is_zero(const TowerElement& a);
// nullopt marks a branch on which a is zero.
SplitResult<std::optional<Poly>> invert(const Tower& t, const Poly& a);
SplitResult<std::optional<Poly>> invert(const TowerElement& a);

// Split off rational roots of every modulus whose coefficients become
// rational once lower linear generators are substituted.
std::vector<Tower> split_rational_roots(const Tower& t);

}  // namespace qcl
