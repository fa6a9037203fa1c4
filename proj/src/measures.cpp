#include "dt/measures.hpp"

namespace dt {

Rational linear_form(const Monomial& m, const LinearPoint& pt) {
    if (m.has_half_exponent()) throw HalfExponent("linear_form: monomial has a half-integer exponent");
    if (m.wexp.size() > pt.v.size()) throw std::invalid_argument("linear_form: monomial uses more framing weights than the point provides");
    Rational l = Rational::zero();
    for (int i = 0; i < 3; ++i) l += Rational(m.texp[static_cast<std::size_t>(i)] / 2) * pt.s[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < m.wexp.size(); ++j) l += Rational(m.wexp[j] / 2) * pt.v[j];
    return l;
}

Rational euler(const VirtualCharacter& V, const LinearPoint& pt) {
    if (V.rank() != 0) throw std::invalid_argument("euler: character must have rank 0");
    Rational num = Rational::one();
    Rational den = Rational::one();
    for (const auto& [m, mult] : V.terms()) {
        const Rational l = linear_form(m, pt);
        if (l.is_zero()) throw ZeroWeightValue("euler: weight evaluates to zero at the point");
        if (mult > 0)
            num *= l.pow(mult);
        else
            den *= l.pow(-mult);
    }
    return num / den;
}

QSeries bracket_bseries(const VirtualCharacter& V, const LinearPoint& pt, int b_order) {
    if (V.rank() != 0) throw std::invalid_argument("bracket_bseries: character must have rank 0");
    // Per factor, [t^mu] = 2 sinh(b l/2) = b l * g(b l) with
    // g(x) = sum_k (x/2)^{2k} / (2k+1)!. The prefactors b l are accumulated
    // as a plain scalar product (the b powers cancel at rank 0).
    Rational scalar = Rational::one();
    QSeries num = QSeries::constant('b', b_order, Rational::one());
    QSeries den = num;
    for (const auto& [m, mult] : V.terms()) {
        const Rational l = linear_form(m, pt);
        if (l.is_zero()) throw ZeroWeightValue("bracket_bseries: weight evaluates to zero at the point");
        QSeries g('b', b_order);
        Rational term = Rational::one();  // (l/2)^{2k} / (2k+1)!
        g.at(0) = term;
        for (int k = 1; 2 * k <= b_order; ++k) {
            term *= (l * l) / Rational(4L * (2 * k) * (2 * k + 1));
            g.at(2 * k) = term;
        }
        if (mult > 0) {
            scalar *= l.pow(mult);
            for (long i = 0; i < mult; ++i) num = num * g;
        } else {
            scalar *= l.pow(mult);
            for (long i = 0; i < -mult; ++i) den = den * g;
        }
    }
    return (num * series_inv(den)).scaled(scalar);
}

}  // namespace dt
