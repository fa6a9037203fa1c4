#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "dt/characters.hpp"
#include "dt/cyclotomic.hpp"
#include "dt/rational.hpp"
#include "dt/series.hpp"

namespace dt {

struct MeasureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// A denominator bracket factor vanishes at the chosen point.
struct NonGenericPoint : MeasureError {
    using MeasureError::MeasureError;
};
/// A weight evaluates to the zero linear form.
struct ZeroWeightValue : MeasureError {
    using MeasureError::MeasureError;
};
/// An operation requiring integer exponents met a genuine half-power.
struct HalfExponent : MeasureError {
    using MeasureError::MeasureError;
};
/// The character has a fixed (constant) part, on which the measure vanishes
/// identically instead of being a unit.
struct ConstantTerm : MeasureError {
    using MeasureError::MeasureError;
};

template <class R>
R ring_pow(R base, long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    R acc = R::one();
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

/// Values assigned to the half-variables t_i^{1/2} and w_j^{1/2}; the scalar
/// field R is Rational or Cyclotomic. Doubled exponents then evaluate without
/// ever choosing a square-root branch.
template <class R>
struct EvalPoint {
    std::array<R, 3> thalf;
    std::vector<R> whalf;

    /// The monomial's value: product of half-variable values raised to the
    /// doubled exponents.
    R value(const Monomial& m) const {
        check_width(m);
        R v = R::one();
        for (int i = 0; i < 3; ++i) v = v * ring_pow(thalf[static_cast<std::size_t>(i)], m.texp[static_cast<std::size_t>(i)]);
        for (std::size_t j = 0; j < m.wexp.size(); ++j) v = v * ring_pow(whalf[j], m.wexp[j]);
        return v;
    }

    /// The square root of the monomial's value, defined only for integer
    /// (even doubled) exponents.
    R sqrt_value(const Monomial& m) const {
        if (m.has_half_exponent()) throw HalfExponent("sqrt_value: monomial has a half-integer exponent");
        check_width(m);
        R v = R::one();
        for (int i = 0; i < 3; ++i) v = v * ring_pow(thalf[static_cast<std::size_t>(i)], m.texp[static_cast<std::size_t>(i)] / 2);
        for (std::size_t j = 0; j < m.wexp.size(); ++j) v = v * ring_pow(whalf[j], m.wexp[j] / 2);
        return v;
    }

private:
    void check_width(const Monomial& m) const {
        if (m.wexp.size() > whalf.size()) throw std::invalid_argument("EvalPoint: monomial uses more framing weights than the point provides");
    }
};

/// Rational values of the Chern roots s_i = c1(t_i), v_j = c1(w_j).
struct LinearPoint {
    std::array<Rational, 3> s;
    std::vector<Rational> v;
};

/// The K-theoretic bracket measure [V] = prod [t^mu]^mult with
/// [t^mu] = t^{mu/2} - t^{-mu/2}, for rank-0 V without constant term.
template <class R>
R bracket(const VirtualCharacter& V, const EvalPoint<R>& pt) {
    if (V.rank() != 0) throw std::invalid_argument("bracket: character must have rank 0");
    R num = R::one();
    R den = R::one();
    for (const auto& [m, mult] : V.terms()) {
        if (m.is_constant()) throw ConstantTerm("bracket: character has a constant term");
        const R s = pt.sqrt_value(m);
        const R f = s - s.inverse();
        if (mult > 0) {
            num = num * ring_pow(f, mult);
        } else {
            if (f.is_zero()) throw NonGenericPoint("bracket: denominator factor vanishes at the point");
            den = den * ring_pow(f, -mult);
        }
    }
    return num * den.inverse();
}

/// The value of the weight as a linear form a s1 + b s2 + c s3 + sum d_j v_j.
Rational linear_form(const Monomial& m, const LinearPoint& pt);

/// Equivariant Euler class e^T(V) = prod of weight linear forms to their
/// multiplicities, for rank-0 V with integer exponents.
Rational euler(const VirtualCharacter& V, const LinearPoint& pt);

/// The elliptic theta measure: prod over terms of
///   theta_hat(p; y)^mult,  theta_hat(p; y) = (y^{1/2} - y^{-1/2})
///                                            * prod_{n=1}^{p_order} (1 - y p^n)(1 - y^{-1} p^n),
/// as a truncated p-series over R. The constant term in p is bracket(V, pt).
template <class R>
TruncatedSeries<R> elliptic(const VirtualCharacter& V, const EvalPoint<R>& pt, int p_order) {
    if (V.rank() != 0) throw std::invalid_argument("elliptic: character must have rank 0");
    using S = TruncatedSeries<R>;
    S num = S::constant('p', p_order, R::one());
    S den = num;
    for (const auto& [m, mult] : V.terms()) {
        if (m.is_constant()) throw ConstantTerm("elliptic: character has a constant term");
        const R y = pt.value(m);
        const R ys = pt.sqrt_value(m);
        S f = S::constant('p', p_order, ys - ys.inverse());
        for (int n = 1; n <= p_order; ++n) {
            S g1('p', p_order), g2('p', p_order);
            g1.at(0) = R::one();
            g1.at(n) = R{} - y;
            g2.at(0) = R::one();
            g2.at(n) = R{} - y.inverse();
            f = f * g1 * g2;
        }
        if (mult > 0) {
            for (long k = 0; k < mult; ++k) num = num * f;
        } else {
            if (f[0].is_zero()) throw NonGenericPoint("elliptic: denominator theta factor vanishes at the point");
            for (long k = 0; k < -mult; ++k) den = den * f;
        }
    }
    return num * series_inv(den);
}

/// The bracket after the substitution t_i^{1/2} -> exp((b/2) s_i),
/// w_j^{1/2} -> exp((b/2) v_j), as a truncated b-series over Q. Each factor
/// [t^mu] = 2 sinh(b l(mu)/2) = b l(mu) * (regular series); at rank 0 the
/// powers of b cancel and the constant term is euler(V, pt).
QSeries bracket_bseries(const VirtualCharacter& V, const LinearPoint& pt, int b_order);

}  // namespace dt
