#include "dt/closed_forms.hpp"

#include <numeric>

namespace dt {

QSeries macmahon(const Rational& c, int sign_rank, int order) {
    if (order > 32) throw std::domain_error("macmahon: order capped at 32");
    QSeries M = QSeries::constant('q', order, Rational::one());
    for (int m = 1; m <= order; ++m) {
        // (1 - q^m)^{-m}, truncated
        QSeries f('q', order);
        f.at(0) = Rational::one();
        f.at(m) = Rational(-1);
        M = M * series_pow_scalar(f, Rational(-m));
    }
    if (sign_rank % 2) M = M.rescaled(Rational(-1));
    return series_pow_scalar(M, c);
}

Rational phi_factor(const LinearPoint& pt) {
    const Rational &s1 = pt.s[0], &s2 = pt.s[1], &s3 = pt.s[2];
    if (s1.is_zero() || s2.is_zero() || s3.is_zero()) throw ZeroWeightValue("phi_factor: s_i = 0");
    return ((s1 + s2) * (s1 + s3) * (s2 + s3)) / (s1 * s2 * s3);
}

QSeries dtcoh_closed(int r, const LinearPoint& pt, int order) {
    return macmahon(Rational(-r) * phi_factor(pt), r, order);
}

QSeries dtell_closed(int r, int k, int order) {
    const int g = std::gcd(k == 0 ? r : k, r);
    const int stride = r / g;
    // Argument of M is eps * q^{r/g} with eps = (-1)^{kr} * (-1)^{r^2/g}
    // (the sign (-1)^r raised to the power r/g).
    const long eps = ((static_cast<long>(k) * r) % 2 + (static_cast<long>(r) * stride) % 2) % 2 ? -1 : 1;
    QSeries Mg = macmahon(Rational(g), 0, order);
    QSeries out('q', order);
    Rational epspow = Rational::one();
    for (int j = 0; j * stride <= order; ++j) {
        out.at(j * stride) = Mg[j] * epspow;
        epspow *= Rational(eps);
    }
    return out;
}

TruncatedSeries<LaurentHalf> dtmot_closed(int r, int order) {
    using S = TruncatedSeries<LaurentHalf>;
    S out = S::constant('q', order, LaurentHalf::one());
    for (int m = 1; m <= order; ++m)
        for (int k = 0; k < r * m; ++k) {
            // (1 - L^{2+k-rm/2} q^m)^{-1} = sum_j L^{j(2+k-rm/2)} q^{jm}
            const long de = 2L * (2 + k) - static_cast<long>(r) * m;  // doubled exponent of L
            S f('q', order);
            for (int j = 0; j * m <= order; ++j) f.at(j * m) = LaurentHalf::term(Rational(1), de * j);
            out = out * f;
        }
    return out;
}

}  // namespace dt
