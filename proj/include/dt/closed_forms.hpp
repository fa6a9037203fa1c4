#pragma once

#include <functional>

#include "dt/laurent.hpp"
#include "dt/measures.hpp"
#include "dt/series.hpp"

namespace dt {

/// Level generator for the plethystic exponential: level n must return the
/// n-th Adams twist of a fixed expression, i.e. all arguments raised to the
/// n-th power and q -> q^n, truncated at the ambient order.
template <class R>
using AdamsFamily = std::function<TruncatedSeries<R>(int)>;

/// Exp(f) = exp(sum_{n>=1} (1/n) * level_n). Each level-n series may only
/// contribute in q-degrees >= n (throws otherwise), so the sum is finite
/// order by order.
template <class R>
TruncatedSeries<R> pleth_exp(const AdamsFamily<R>& F, int order) {
    TruncatedSeries<R> acc('q', order);
    for (int n = 1; n <= order; ++n) {
        TruncatedSeries<R> f = F(n).truncated(order);
        for (int j = 0; j < n && j <= order; ++j)
            if (!f[j].is_zero()) throw std::domain_error("pleth_exp: level " + std::to_string(n) + " contributes below degree " + std::to_string(n));
        acc = acc + f.scaled(Rational(1, n));
    }
    return series_exp(acc);
}

/// M((-1)^sign_rank q)^c, truncated. M is the MacMahon function
/// prod_m (1 - q^m)^{-m}.
QSeries macmahon(const Rational& c, int sign_rank, int order);

template <class R>
EvalPoint<R> powered_point(const EvalPoint<R>& pt, int n) {
    EvalPoint<R> out;
    for (int i = 0; i < 3; ++i) out.thalf[static_cast<std::size_t>(i)] = ring_pow(pt.thalf[static_cast<std::size_t>(i)], static_cast<long>(n));
    out.whalf.reserve(pt.whalf.size());
    for (const auto& w : pt.whalf) out.whalf.push_back(ring_pow(w, static_cast<long>(n)));
    return out;
}

/// The single-particle series
///   F_r = ([t^r] / ([t][t^{r/2} q][t^{r/2} q^{-1}])) * ([t1t2][t1t3][t2t3] / ([t1][t2][t3]))
/// with t = t1t2t3, expanded in non-negative q-powers through the exact
/// kernel identity 1/([aq][aq^{-1}]) = -q/((1-aq)(1-a^{-1}q)), a = t^{r/2}.
template <class R>
TruncatedSeries<R> f_r_series(int r, const EvalPoint<R>& pt, int order) {
    const R th = pt.thalf[0] * pt.thalf[1] * pt.thalf[2];  // t^{1/2}
    auto brk = [](const R& half) {  // [x] from the value of x^{1/2}
        return half - half.inverse();
    };
    const R t_r = brk(ring_pow(th, static_cast<long>(r)));  // [t^r], half-value t^{r/2} = th^r
    const R t_1 = brk(th);                                  // [t], half-value t^{1/2} = th
    if (t_1.is_zero()) throw NonGenericPoint("f_r_series: [t1t2t3] vanishes at the point");
    R bnum = R::one(), bden = R::one();
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) bnum = bnum * brk(pt.thalf[static_cast<std::size_t>(i)] * pt.thalf[static_cast<std::size_t>(j)]);
        const R d = brk(pt.thalf[static_cast<std::size_t>(i)]);
        if (d.is_zero()) throw NonGenericPoint("f_r_series: [t_i] vanishes at the point");
        bden = bden * d;
    }
    const R C = t_r * bnum * (t_1 * bden).inverse();
    const R a = ring_pow(th, static_cast<long>(r));  // value of t^{r/2}

    // -q/((1-aq)(1-a^{-1}q)) = -sum_{i,j>=0} a^{i-j} q^{1+i+j}
    TruncatedSeries<R> K('q', order);
    for (int d = 1; d <= order; ++d) {
        R coeff{};
        for (int i = 0; i <= d - 1; ++i) coeff = coeff + ring_pow(a, 2L * i - (d - 1));
        K.at(d) = R{} - coeff;
    }
    return K * TruncatedSeries<R>::constant('q', order, C);
}

/// Closed-form rank-r K-theoretic DT series at the point:
/// DT_r^K(q) = Exp(F_r)|_{q -> (-1)^r q}.
template <class R>
TruncatedSeries<R> dtk_closed(int r, const EvalPoint<R>& pt, int order) {
    AdamsFamily<R> fam = [&](int n) { return f_r_series(r, powered_point(pt, n), order).stretched(n); };
    TruncatedSeries<R> E = pleth_exp(fam, order);
    if (r % 2) E = E.rescaled(R{} - R::one());
    return E;
}

/// Phi(s) = (s1+s2)(s1+s3)(s2+s3) / (s1 s2 s3).
Rational phi_factor(const LinearPoint& pt);

/// Closed-form cohomological series M((-1)^r q)^{-r Phi(s)}.
QSeries dtcoh_closed(int r, const LinearPoint& pt, int order);

/// Closed-form elliptic series at the restriction t^{1/2} = e^{pi i k / r}:
/// M((-1)^{kr} ((-1)^r q)^{r/g})^g with g = gcd(k, r).
QSeries dtell_closed(int r, int k, int order);

/// Closed-form motivic series: prod_{m>=1} prod_{k=0}^{rm-1}
/// (1 - L^{2+k-rm/2} q^m)^{-1}, coefficients Laurent in L^{1/2}.
TruncatedSeries<LaurentHalf> dtmot_closed(int r, int order);

}  // namespace dt
