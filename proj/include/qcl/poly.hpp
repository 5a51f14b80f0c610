#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcl {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Exponent vector; trailing zeros are always trimmed so that the
// length is one past the highest variable that occurs.
using Mono = std::vector<unsigned>;

// Lex order, the variable with the largest index is the most significant.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

void trim(Mono& m);

// Ascending list of variable names; variable i has index i.
struct VarOrder {
    std::vector<std::string> names;

    int index_of(const std::string& n) const;
    std::size_t size() const { return names.size(); }
};

class Poly {
public:
    using Terms = std::map<Mono, Rational, MonoLess>;

    Poly() = default;
    Poly(long c);
    Poly(const Rational& c);

    static Poly var(int v, unsigned e = 1);
    static Poly monomial(Mono m, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // value of the constant term
    std::size_t nterms() const { return terms_.size(); }

    // Highest variable with a positive exponent, -1 for constants.
    int main_var() const;
    // -1 for the zero polynomial.
    int degree(int v) const;
    int total_degree() const;
    bool involves(int v) const;

    Poly coeff(int v, int k) const;
    std::vector<Poly> coeffs(int v) const;  // dense, index = power of v
    Poly lc(int v) const;                   // leading coefficient in v
    Rational leading_coeff() const;         // coefficient of the lex-largest term
    Mono leading_mono() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(Poly a, long c) { return a *= Rational(c); }
    friend Poly operator*(long c, Poly a) { return a *= Rational(c); }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;
    Poly derivative(int v) const;
    // Substitute variable v by val.
    Poly subst(int v, const Poly& val) const;
    // Substitute several variables at once; subs[i] empty means keep X_i.
    Poly subst_all(const std::vector<std::optional<Poly>>& subs) const;
    Rational eval(const std::vector<Rational>& point) const;
    // Rename variable i to map[i].
    Poly rename(const std::vector<int>& map) const;
    Poly shift_vars(int offset) const;
    // Multiply every monomial by v^e.
    Poly mul_var(int v, unsigned e) const;

    void add_term(const Mono& m, const Rational& c);

    std::string str(const std::vector<std::string>& names) const;
    std::string str(const VarOrder& o) const { return str(o.names); }
    // Names default to x0, x1, ...
    std::string str() const;

private:
    Terms terms_;
};

// Multivariate division by lex leading terms: a = q*b + r.
std::pair<Poly, Poly> divide(const Poly& a, const Poly& b);
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

struct PremResult {
    Poly rem;
    int k = 0;  // power of init(r)
    Poly quo;
};

// Lazy pseudo-division: the multiplier init(r) is applied only when the
// leading coefficient is not already divisible by it.
PremResult prem(const Poly& p, const Poly& r, int v);
// Iterated pseudo-remainder of p by a triangular set.
Poly prem_chain(const Poly& p, const std::vector<Poly>& chain);

Poly resultant(const Poly& f, const Poly& g, int v);

// Rational content (positive) and the Z-primitive, positive-leading normal form.
Rational rational_content(const Poly& p);
Poly normalize_z(const Poly& p);
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
// Content w.r.t. v including the integer content.
Poly content(const Poly& p, int v);
Poly primitive_part(const Poly& p, int v);

// Univariate helpers; the polynomial may only involve its main variable.
Poly monic(const Poly& f);
Poly squarefree_part(const Poly& f);

}  // namespace qcl
