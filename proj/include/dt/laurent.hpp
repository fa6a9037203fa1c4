#pragma once

#include <map>
#include <string>

#include "dt/rational.hpp"

namespace dt {

/// Laurent polynomial in one formal variable with exponents in (1/2)Z.
/// Keys are doubled exponents (the stored integer is twice the true
/// exponent), matching the doubled-exponent convention used for torus
/// characters. No zero coefficients are stored.
class LaurentHalf {
public:
    LaurentHalf() = default;
    explicit LaurentHalf(const Rational& r) {
        if (!r.is_zero()) c_[0] = r;
    }

    /// c * x^(doubled/2).
    static LaurentHalf term(const Rational& c, long doubled_exp) {
        LaurentHalf r;
        if (!c.is_zero()) r.c_[doubled_exp] = c;
        return r;
    }
    static LaurentHalf zero() { return LaurentHalf(); }
    static LaurentHalf one() { return LaurentHalf(Rational::one()); }
    static LaurentHalf from_rational(const Rational& r) { return LaurentHalf(r); }

    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    const std::map<long, Rational>& terms() const { return c_; }

    /// Defined for monomials only.
    LaurentHalf inverse() const;

    /// Multiply by x^(doubled_shift/2). Used for the variable shifts
    /// q -> q L^a on series coefficients.
    LaurentHalf shifted(long doubled_shift) const;

    friend LaurentHalf operator+(const LaurentHalf& a, const LaurentHalf& b);
    friend LaurentHalf operator-(const LaurentHalf& a, const LaurentHalf& b);
    friend LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b);
    friend LaurentHalf operator/(const LaurentHalf& a, const LaurentHalf& b) { return a * b.inverse(); }
    LaurentHalf operator-() const;
    friend bool operator==(const LaurentHalf& a, const LaurentHalf& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentHalf& a, const LaurentHalf& b) { return !(a == b); }

    /// e.g. "3/2*L^(5/2) - L^(-1)" with L the formal variable.
    std::string str(const std::string& var = "L") const;

private:
    std::map<long, Rational> c_;
};

inline LaurentHalf scale(const LaurentHalf& x, const Rational& c) { return x * LaurentHalf(c); }

}  // namespace dt
