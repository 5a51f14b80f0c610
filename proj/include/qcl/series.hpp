#pragma once

#include <limits>
#include <string>
#include <vector>

#include "qcl/tower.hpp"

namespace qcl {

// Accuracy value used for series that are known exactly.
inline constexpr long kExact = std::numeric_limits<long>::max() / 4;

inline long acc_add(long a, long b) { return (a >= kExact || b >= kExact) ? kExact : a + b; }
inline long acc_mul(long a, long q) { return a >= kExact ? kExact : a * q; }

// Truncated power series over a tower: coefficients c[0..] of T^k, known
// modulo T^acc. Missing coefficients below acc are zero; nothing is known
// at or beyond acc.
struct Series {
    std::vector<Poly> c;
    long acc = kExact;

    static Series exact(std::vector<Poly> c);
    static Series known(std::vector<Poly> c, long acc);
    static Series monomial(const Poly& coeff, long e);

    bool is_exact() const { return acc >= kExact; }
    Poly coef(long k) const;
    // Index of the first stored nonzero coefficient, else acc. A lower bound
    // on the order since nonzero reduced elements may still be zero divisors.
    long order_bound() const;
    bool known_zero() const { return order_bound() >= acc; }
    void normalize();

    std::string str(const Tower& t, const std::string& var = "T") const;
};

Series s_add(const Series& a, const Series& b);
Series s_sub(const Series& a, const Series& b);
Series s_neg(const Series& a);
Series s_scale(const Tower& t, const Series& a, const Poly& k);
Series s_mul(const Tower& t, const Series& a, const Series& b);
Series s_pow(const Tower& t, const Series& a, unsigned e);
// a(T^sigma) * T^shift
Series s_compose_pow(const Series& a, long sigma, long shift = 0);
// a / T^k; the low coefficients must be zero.
Series s_shift_down(const Series& a, long k);
Series s_truncate(const Series& a, long m);
Series s_reduce(const Tower& t, const Series& a);

// Polynomial in Y with series coefficients: f = sum a[i](X) Y^i.
struct SeriesPoly {
    std::vector<Series> a;

    int degree() const { return static_cast<int>(a.size()) - 1; }
    bool is_exact() const;
    // Exact series coefficients from a polynomial in x (index vx) and y (index vy)
    // whose other variables are tower generators shifted by gen_offset.
    static SeriesPoly from_poly(const Poly& f, int vx, int vy, int gen_offset = -1);
    SeriesPoly reduced(const Tower& t) const;
    std::string str(const Tower& t, const std::string& x = "X", const std::string& y = "Y") const;
};

// Approximation of f of accuracy m: every coefficient truncated mod X^m.
SeriesPoly approximation(const SeriesPoly& f, long m);

}  // namespace qcl
