#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dt/localization.hpp"

namespace dt {

/// Fixed-point chart of a smooth projective toric 3-fold under a rank-d
/// torus: three tangent weights in the character lattice Z^d, plus optional
/// framing weight vectors lambda for the r summands of the sheaf.
struct ToricChart {
    std::array<std::vector<long>, 3> weights;
    std::optional<std::vector<std::vector<long>>> lambda;
};

struct ToricData {
    int torus_rank = 0;
    std::vector<ToricChart> charts;
};

/// Parse the JSON description
///   { "torus_rank": d, "charts": [ { "weights": [[d ints] x3],
///                                    "lambda": optional [[d ints] x r] } ] }.
ToricData load_toric(const std::string& path);
ToricData parse_toric(const std::string& json_text);

/// Atiyah-Bott localization of int_X c3(T_X (x) K_X) at the one-parameter
/// subgroup sigma: the sum of -Phi(s^alpha) with s_i^alpha = m_{alpha,i} . sigma.
Rational chern_integral(const ToricData& data, const std::vector<Rational>& sigma);

/// chern_integral at two independent random sigma draws; throws unless the
/// draws agree and the common value is an integer.
Rational chern_integral_checked(const ToricData& data, std::mt19937_64& rng);

/// Global series DT_F(q) = M((-1)^r q)^{r * int c3(T (x) K)}.
QSeries global_dt(const ToricData& data, int r, int order);

/// Check that the product over charts of the local (localization-computed)
/// cohomological DT series equals the global closed form, at `trials`
/// random sigma/framing draws.
VerificationReport verify_gluing(const ToricData& data, int r, int order, int trials, unsigned long seed);

}  // namespace dt
