#pragma once

#include <string>
#include <vector>

#include "dt/rational.hpp"

namespace dt {

/// Dense polynomial over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b);
/// Exact division; throws if the remainder is nonzero.
Poly poly_divexact(const Poly& a, const Poly& b);
/// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

int euler_totient(int m);

/// The m-th cyclotomic polynomial, computed by recursive exact division
/// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d. Supported range 1 <= m <= 120.
Poly cyclotomic_poly(int m);

/// Element of Q(zeta_m), stored as a polynomial in zeta_m of degree
/// < phi(m), reduced mod Phi_m. Order 1 doubles as plain Q; arithmetic
/// promotes order-1 operands to the other operand's order.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1, Rational::zero()) {}
    explicit Cyclotomic(const Rational& r) : order_(1), c_(1, r) {}
    Cyclotomic(int order, std::vector<Rational> coeffs);

    /// zeta_m^k.
    static Cyclotomic zeta(int m, long k = 1);
    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(Rational::one()); }
    static Cyclotomic from_rational(const Rational& r) { return Cyclotomic(r); }

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;  // throws unless is_rational()

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic operator-() const;
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const;

private:
    int order_;
    std::vector<Rational> c_;  // length euler_totient(order_)

    /// Lift to order m (only from order 1, or m == order_).
    Cyclotomic promoted(int m) const;
};

inline Cyclotomic scale(const Cyclotomic& x, const Rational& c) { return x * Cyclotomic(c); }

}  // namespace dt
