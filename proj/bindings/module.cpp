// Python bindings for the quotdt core. Scalars cross the boundary as exact
// fraction strings so no precision is lost.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <stdexcept>

#include "dt/localization.hpp"
#include "dt/toric.hpp"

namespace py = pybind11;
using namespace dt;

namespace {

EvalPoint<Rational> make_eval_point(const std::vector<std::string>& thalf,
                                    const std::vector<std::string>& whalf) {
    if (thalf.size() != 3) throw std::invalid_argument("thalf must have exactly 3 entries");
    EvalPoint<Rational> pt;
    for (int i = 0; i < 3; ++i) pt.thalf[static_cast<std::size_t>(i)] = Rational::parse(thalf[static_cast<std::size_t>(i)]);
    for (const auto& w : whalf) pt.whalf.push_back(Rational::parse(w));
    return pt;
}

LinearPoint make_linear_point(const std::vector<std::string>& s, const std::vector<std::string>& v) {
    if (s.size() != 3) throw std::invalid_argument("s must have exactly 3 entries");
    LinearPoint pt;
    for (int i = 0; i < 3; ++i) pt.s[static_cast<std::size_t>(i)] = Rational::parse(s[static_cast<std::size_t>(i)]);
    for (const auto& x : v) pt.v.push_back(Rational::parse(x));
    return pt;
}

std::vector<std::string> series_strings(const QSeries& f) {
    std::vector<std::string> out;
    for (int n = 0; n <= f.order(); ++n) out.push_back(f[n].str());
    return out;
}

py::dict report_dict(const VerificationReport& rep) {
    py::dict d;
    d["identity"] = rep.identity;
    d["seed"] = rep.seed;
    d["trials"] = rep.trials;
    d["pass"] = rep.pass;
    d["note"] = rep.note;
    py::list records;
    for (const auto& t : rep.records) {
        py::dict r;
        r["point"] = t.point;
        r["lhs"] = t.lhs;
        r["rhs"] = t.rhs;
        r["delta"] = t.delta;
        r["pass"] = t.pass;
        records.append(r);
    }
    d["records"] = records;
    return d;
}

}  // namespace

PYBIND11_MODULE(_quotdt, m) {
    m.doc() = "Exact equivariant Donaldson-Thomas partition functions of affine 3-space";

    m.def("count_colored_partitions", [](int r, int n) {
        long count = 0;
        enumerate_colored(r, n, [&](const ColoredPartition&) { ++count; });
        return count;
    }, py::arg("r"), py::arg("n"),
       "Number of r-colored plane partitions of total size n.");

    m.def("dtk", [](int r, int order, const std::vector<std::string>& thalf,
                    const std::vector<std::string>& whalf) {
        return series_strings(dtk_localization(r, order, make_eval_point(thalf, whalf)));
    }, py::arg("r"), py::arg("order"), py::arg("thalf"), py::arg("whalf"),
       "K-theoretic DT series by localization; thalf/whalf are fraction strings for the half-variables.");

    m.def("dtk_closed", [](int r, int order, const std::vector<std::string>& thalf,
                           const std::vector<std::string>& whalf) {
        auto pt = make_eval_point(thalf, whalf);
        (void)pt.whalf;  // the closed form only uses thalf
        return series_strings(dtk_closed(r, pt, order));
    }, py::arg("r"), py::arg("order"), py::arg("thalf"), py::arg("whalf"),
       "Closed-form K-theoretic DT series Exp(F_r)|_{q -> (-1)^r q}.");

    m.def("dtcoh", [](int r, int order, const std::vector<std::string>& s,
                      const std::vector<std::string>& v) {
        return series_strings(dtcoh_localization(r, order, make_linear_point(s, v)));
    }, py::arg("r"), py::arg("order"), py::arg("s"), py::arg("v"),
       "Cohomological DT series by localization at equivariant parameters s, framing parameters v.");

    m.def("dtcoh_closed", [](int r, int order, const std::vector<std::string>& s) {
        return series_strings(dtcoh_closed(r, make_linear_point(s, {}), order));
    }, py::arg("r"), py::arg("order"), py::arg("s"),
       "Closed-form cohomological DT series M((-1)^r q)^{-r Phi(s)}.");

    m.def("dtell_closed", [](int r, int k, int order) {
        return series_strings(dtell_closed(r, k, order));
    }, py::arg("r"), py::arg("k"), py::arg("order"),
       "Closed-form elliptic DT series at the restriction t^{1/2} = zeta_{2r}^k.");

    m.def("dtmot", [](int r, int order) {
        auto f = dtmot_closed(r, order);
        std::vector<std::string> out;
        for (int n = 0; n <= f.order(); ++n) out.push_back(f[n].str());
        return out;
    }, py::arg("r"), py::arg("order"),
       "Motivic DT series; coefficients are Laurent polynomials in L^{1/2}.");

    m.def("chern_integral", [](const std::string& path, unsigned long seed) {
        auto data = load_toric(path);
        std::mt19937_64 rng(seed);
        return chern_integral_checked(data, rng).str();
    }, py::arg("path"), py::arg("seed") = 7UL,
       "int_X c3(T_X (x) K_X) for the toric 3-fold described by the JSON file.");

    m.def("global_dt", [](const std::string& path, int r, int order) {
        return series_strings(global_dt(load_toric(path), r, order));
    }, py::arg("path"), py::arg("r"), py::arg("order"),
       "Global cohomological DT series M((-1)^r q)^{r int c3(T (x) K)} of a toric 3-fold.");

    m.def("verify_framing_independence", [](int r, int order, int trials, unsigned long seed) {
        return report_dict(verify_framing_independence(r, order, trials, seed));
    }, py::arg("r"), py::arg("order") = 4, py::arg("trials") = 3, py::arg("seed") = 7UL);

    m.def("verify_product_formula", [](int r, int order, int trials, unsigned long seed) {
        return report_dict(verify_product_formula(r, order, trials, seed));
    }, py::arg("r"), py::arg("order") = 4, py::arg("trials") = 3, py::arg("seed") = 7UL);

    m.def("verify_kth_closed", [](int r, int order, int trials, unsigned long seed) {
        return report_dict(verify_kth_closed(r, order, trials, seed));
    }, py::arg("r"), py::arg("order") = 4, py::arg("trials") = 3, py::arg("seed") = 7UL);

    m.def("verify_coh_closed", [](int r, int order, int trials, unsigned long seed) {
        return report_dict(verify_coh_closed(r, order, trials, seed));
    }, py::arg("r"), py::arg("order") = 4, py::arg("trials") = 3, py::arg("seed") = 7UL);

    m.def("verify_cy_specialization", [](int r, int order) {
        return report_dict(verify_cy_specialization(r, order));
    }, py::arg("r"), py::arg("order") = 4);

    m.def("verify_lambda_independence", [](int r, int order, int trials, unsigned long seed) {
        return report_dict(verify_lambda_independence(r, order, trials, seed));
    }, py::arg("r"), py::arg("order") = 4, py::arg("trials") = 3, py::arg("seed") = 7UL);

    m.def("verify_elliptic_restriction", [](int r, int k, int order, int p_order) {
        return report_dict(verify_elliptic_restriction(r, k, order, p_order));
    }, py::arg("r"), py::arg("k"), py::arg("order") = 3, py::arg("p_order") = 6);

    m.def("verify_motivic_factorization", [](int r, int order) {
        return report_dict(verify_motivic_factorization(r, order));
    }, py::arg("r"), py::arg("order") = 4);

    m.def("verify_gluing", [](const std::string& path, int r, int order, int trials, unsigned long seed) {
        return report_dict(verify_gluing(load_toric(path), r, order, trials, seed));
    }, py::arg("path"), py::arg("r"), py::arg("order") = 3, py::arg("trials") = 2, py::arg("seed") = 7UL);
}
