#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dt/closed_forms.hpp"
#include "dt/measures.hpp"
#include "dt/partitions.hpp"

namespace dt {

/// Outcome of one exact polynomial-identity check at one evaluation point.
struct TrialRecord {
    std::string point;               // human-readable description of the point
    std::vector<std::string> lhs;    // coefficient table, left side
    std::vector<std::string> rhs;    // coefficient table, right side
    std::vector<std::string> delta;  // lhs - rhs, all "0" on success
    bool pass = false;
};

struct VerificationReport {
    std::string identity;
    unsigned long seed = 0;
    int trials = 0;
    std::vector<TrialRecord> records;
    bool pass = false;
    std::string note;

    void finalize() {
        pass = !records.empty();
        for (const auto& t : records) pass = pass && t.pass;
    }
};

/// K-theoretic localization series: [q^n] = sum over r-colored partitions of
/// size n of bracket(-T^vir).
template <class R>
TruncatedSeries<R> dtk_localization(int r, int order, const EvalPoint<R>& pt) {
    TruncatedSeries<R> S('q', order);
    S.at(0) = R::one();
    for (int n = 1; n <= order; ++n) {
        R acc{};
        enumerate_colored(r, n, [&](const ColoredPartition& P) { acc = acc + bracket(-tvir(P), pt); });
        S.at(n) = acc;
    }
    return S;
}

/// Cohomological localization series via euler(-T^vir), with an optional
/// lambda twist (one integer t-monomial per color).
QSeries dtcoh_localization(int r, int order, const LinearPoint& pt,
                           const std::optional<std::vector<Monomial>>& lambda = std::nullopt);

/// Elliptic localization: q-coefficients are truncated p-series.
template <class R>
std::vector<TruncatedSeries<R>> dtell_localization(int r, int order, int p_order, const EvalPoint<R>& pt) {
    std::vector<TruncatedSeries<R>> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    out.push_back(TruncatedSeries<R>::constant('p', p_order, R::one()));
    for (int n = 1; n <= order; ++n) {
        TruncatedSeries<R> acc('p', p_order);
        enumerate_colored(r, n, [&](const ColoredPartition& P) { acc = acc + elliptic(-tvir(P), pt, p_order); });
        out.push_back(acc);
    }
    return out;
}

/// Random exact scalar +-num/den with num, den in [2, 97].
Rational random_rational(std::mt19937_64& rng);

EvalPoint<Rational> random_eval_point(std::mt19937_64& rng, int r);
LinearPoint random_linear_point(std::mt19937_64& rng, int r);

/// Evaluation point for the elliptic restriction t^{1/2} = zeta_{2r}^k:
/// thalf_1, thalf_2 are random rationals, thalf_3 = zeta_{2r}^k/(thalf_1 thalf_2),
/// w_j^{1/2} = zeta_{2r}^j (so w_j = zeta_r^j), in Q(zeta_lcm(2r,4)).
EvalPoint<Cyclotomic> elliptic_restriction_point(int r, int k, std::mt19937_64& rng);

std::string point_str(const EvalPoint<Rational>& pt);
std::string point_str(const EvalPoint<Cyclotomic>& pt);
std::string point_str(const LinearPoint& pt);

inline constexpr int kResampleCap = 50;

VerificationReport verify_framing_independence(int r, int order, int trials, unsigned long seed);
VerificationReport verify_product_formula(int r, int order, int trials, unsigned long seed);
VerificationReport verify_kth_closed(int r, int order, int trials, unsigned long seed);
VerificationReport verify_coh_closed(int r, int order, int trials, unsigned long seed);
VerificationReport verify_cy_specialization(int r, int order);
VerificationReport verify_lambda_independence(int r, int order, int trials, unsigned long seed);
VerificationReport verify_elliptic_restriction(int r, int k, int order, int p_order);
VerificationReport verify_motivic_factorization(int r, int order);

}  // namespace dt
