#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dt/localization.hpp"
#include "dt/toric.hpp"

using nlohmann::json;

namespace {

dt::Rational parse_fraction(const std::string& s) { return dt::Rational::parse(s); }

std::array<dt::Rational, 3> parse_triple(const std::string& csv) {
    std::array<dt::Rational, 3> out;
    std::stringstream ss(csv);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 3) throw CLI::ValidationError("expected exactly three comma-separated values");
        out[static_cast<std::size_t>(i++)] = parse_fraction(item);
    }
    if (i != 3) throw CLI::ValidationError("expected exactly three comma-separated values");
    return out;
}

std::vector<dt::Rational> parse_list(const std::string& csv) {
    std::vector<dt::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_fraction(item));
    return out;
}

dt::Cyclotomic parse_scalar(const json& j, int cyc_order) {
    if (j.is_string()) return dt::Cyclotomic(parse_fraction(j.get<std::string>()));
    if (j.is_number_integer()) return dt::Cyclotomic(dt::Rational(j.get<long>()));
    if (j.is_array()) {
        std::vector<dt::Rational> c;
        for (const auto& x : j) c.push_back(x.is_string() ? parse_fraction(x.get<std::string>()) : dt::Rational(x.get<long>()));
        return dt::Cyclotomic(cyc_order, std::move(c));
    }
    throw std::runtime_error("point file: scalar must be a fraction string, integer, or coefficient array");
}

dt::EvalPoint<dt::Cyclotomic> load_eval_point(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point file " + path);
    json j = json::parse(in);
    const int cyc_order = j.value("cyc_order", 1);
    dt::EvalPoint<dt::Cyclotomic> pt;
    const auto& th = j.at("thalf");
    if (th.size() != 3) throw std::runtime_error("point file: thalf needs 3 entries");
    for (int i = 0; i < 3; ++i) pt.thalf[static_cast<std::size_t>(i)] = parse_scalar(th[static_cast<std::size_t>(i)], cyc_order);
    for (const auto& w : j.at("whalf")) pt.whalf.push_back(parse_scalar(w, cyc_order));
    return pt;
}

json report_json(const dt::VerificationReport& rep) {
    json out;
    out["identity"] = rep.identity;
    out["seed"] = rep.seed;
    out["trials"] = rep.trials;
    out["pass"] = rep.pass;
    if (!rep.note.empty()) out["note"] = rep.note;
    out["records"] = json::array();
    for (const auto& t : rep.records) {
        json jt;
        jt["point"] = t.point;
        jt["lhs"] = t.lhs;
        jt["rhs"] = t.rhs;
        jt["delta"] = t.delta;
        jt["pass"] = t.pass;
        out["records"].push_back(jt);
    }
    return out;
}

void emit(const json& out, const std::string& format) {
    if (format == "csv") {
        if (out.contains("coefficients")) {
            int n = 0;
            for (const auto& c : out["coefficients"]) std::cout << n++ << "," << (c.is_string() ? c.get<std::string>() : c.dump()) << "\n";
        } else {
            std::cout << out.dump(2) << "\n";
        }
        return;
    }
    std::cout << out.dump(2) << "\n";
}

json partition_json(const dt::ColoredPartition& P) {
    json jp = json::array();
    for (const auto& part : P.parts) {
        json boxes = json::array();
        for (const auto& b : part.boxes()) boxes.push_back({b[0], b[1], b[2]});
        jp.push_back(boxes);
    }
    return jp;
}

json character_json(const dt::VirtualCharacter& V) {
    json out = json::array();
    for (const auto& [m, mult] : V.terms()) {
        json jt;
        jt["texp"] = {m.texp[0], m.texp[1], m.texp[2]};
        jt["wexp"] = m.wexp;
        jt["mult"] = mult;
        out.push_back(jt);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant Donaldson-Thomas partition functions of affine 3-space for higher-rank framing"};
    app.require_subcommand(1);

    int r = 1, n = 0, order = 4, p_order = 6, b_order = 4, trials = 3, k = 0;
    unsigned long seed = 7;
    std::string point_file, s_csv, v_csv, input_file, format = "json", what = "all";
    bool count_only = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* c_enum = app.add_subcommand("enumerate", "Enumerate r-colored plane partitions of size n");
    c_enum->add_option("--r", r, "Number of colors");
    c_enum->add_option("--n", n, "Total number of boxes");
    c_enum->add_flag("--count-only", count_only, "Print only the count");
    add_common(c_enum);

    auto* c_tvir = app.add_subcommand("tvir", "Virtual tangent characters of all fixed points of size n");
    c_tvir->add_option("--r", r, "Number of colors");
    c_tvir->add_option("--n", n, "Total number of boxes");
    add_common(c_tvir);

    auto* c_dtk = app.add_subcommand("dtk", "K-theoretic DT series by localization at an evaluation point");
    c_dtk->add_option("--r", r, "Rank");
    c_dtk->add_option("--order", order, "q-truncation order");
    c_dtk->add_option("--point", point_file, "JSON file with thalf/whalf values");
    c_dtk->add_option("--seed", seed, "Seed for a random evaluation point");
    add_common(c_dtk);

    auto* c_dtcoh = app.add_subcommand("dtcoh", "Cohomological DT series by localization");
    c_dtcoh->add_option("--r", r, "Rank");
    c_dtcoh->add_option("--order", order, "q-truncation order");
    c_dtcoh->add_option("--s", s_csv, "Values s1,s2,s3 as fractions");
    c_dtcoh->add_option("--v", v_csv, "Framing values v1,...,vr as fractions");
    c_dtcoh->add_option("--seed", seed, "Seed for random values not given explicitly");
    add_common(c_dtcoh);

    auto* c_dtell = app.add_subcommand("dtell", "Elliptic DT series at the restriction t^{1/2} = zeta_{2r}^k");
    c_dtell->add_option("--r", r, "Rank");
    c_dtell->add_option("--k", k, "Restriction exponent");
    int ell_order = 3;
    c_dtell->add_option("--order", ell_order, "q-truncation order");
    c_dtell->add_option("--p-order", p_order, "p-truncation order");
    c_dtell->add_option("--seed", seed, "Seed for the generic part of the point");
    add_common(c_dtell);

    auto* c_dtmot = app.add_subcommand("dtmot", "Motivic DT series, coefficients Laurent in L^{1/2}");
    c_dtmot->add_option("--r", r, "Rank");
    c_dtmot->add_option("--order", order, "q-truncation order");
    add_common(c_dtmot);

    auto* c_toric = app.add_subcommand("toric", "Global DT series of a toric 3-fold from fixed-point data");
    c_toric->add_option("--input", input_file, "Toric data JSON file")->required();
    c_toric->add_option("--r", r, "Rank");
    c_toric->add_option("--order", order, "q-truncation order");
    add_common(c_toric);

    auto* c_verify = app.add_subcommand("verify", "Run identity verification reports");
    c_verify->add_option("what", what,
                         "Which identity: all, framing, product, kth, coh, cy, lambda, elliptic, motivic, gluing");
    c_verify->add_option("--r", r, "Rank (single-identity mode)");
    c_verify->add_option("--k", k, "Elliptic restriction exponent");
    c_verify->add_option("--order,--q-order", order, "q-truncation order");
    c_verify->add_option("--p-order", p_order, "p-truncation order");
    c_verify->add_option("--b-order", b_order, "b-truncation order");
    c_verify->add_option("--trials", trials, "Evaluation points per identity");
    c_verify->add_option("--seed", seed, "Master RNG seed");
    c_verify->add_option("--input", input_file, "Toric data file for the gluing check");
    add_common(c_verify);

    CLI11_PARSE(app, argc, argv);

    try {
        json out;
        out["params"] = json::object();
        bool all_pass = true;

        if (app.got_subcommand(c_enum)) {
            out["command"] = "enumerate";
            out["params"] = {{"r", r}, {"n", n}};
            auto list = dt::enumerate_colored_list(r, n);
            out["count"] = list.size();
            if (count_only) {
                std::cout << list.size() << "\n";
                return 0;
            }
            out["partitions"] = json::array();
            for (const auto& P : list) out["partitions"].push_back(partition_json(P));
            emit(out, format);
        } else if (app.got_subcommand(c_tvir)) {
            out["command"] = "tvir";
            out["params"] = {{"r", r}, {"n", n}};
            out["fixed_points"] = json::array();
            dt::enumerate_colored(r, n, [&](const dt::ColoredPartition& P) {
                json jp;
                jp["partition"] = partition_json(P);
                jp["tvir"] = character_json(dt::tvir(P));
                out["fixed_points"].push_back(jp);
            });
            emit(out, format);
        } else if (app.got_subcommand(c_dtk)) {
            out["command"] = "dtk";
            out["params"] = {{"r", r}, {"order", order}, {"seed", seed}};
            json coeffs = json::array();
            if (!point_file.empty()) {
                out["params"]["point"] = point_file;
                auto pt = load_eval_point(point_file);
                auto S = dt::dtk_localization(r, order, pt);
                for (int i = 0; i <= order; ++i) coeffs.push_back(S[i].str());
            } else {
                std::mt19937_64 rng(seed);
                auto pt = dt::random_eval_point(rng, r);
                out["params"]["point"] = dt::point_str(pt);
                auto S = dt::dtk_localization(r, order, pt);
                for (int i = 0; i <= order; ++i) coeffs.push_back(S[i].str());
            }
            out["coefficients"] = coeffs;
            emit(out, format);
        } else if (app.got_subcommand(c_dtcoh)) {
            out["command"] = "dtcoh";
            std::mt19937_64 rng(seed);
            dt::LinearPoint pt = dt::random_linear_point(rng, r);
            if (!s_csv.empty()) pt.s = parse_triple(s_csv);
            if (!v_csv.empty()) {
                pt.v = parse_list(v_csv);
                if (static_cast<int>(pt.v.size()) != r) throw std::runtime_error("--v needs exactly r values");
            }
            out["params"] = {{"r", r}, {"order", order}, {"point", dt::point_str(pt)}};
            auto S = dt::dtcoh_localization(r, order, pt);
            json coeffs = json::array();
            for (int i = 0; i <= order; ++i) coeffs.push_back(S[i].str());
            out["coefficients"] = coeffs;
            emit(out, format);
        } else if (app.got_subcommand(c_dtell)) {
            out["command"] = "dtell";
            std::mt19937_64 rng(seed);
            auto pt = dt::elliptic_restriction_point(r, k, rng);
            out["params"] = {{"r", r}, {"k", k}, {"order", ell_order}, {"p_order", p_order}, {"point", dt::point_str(pt)}};
            auto S = dt::dtell_localization(r, ell_order, p_order, pt);
            json coeffs = json::array();
            for (const auto& ps : S) coeffs.push_back(ps.str());
            out["coefficients"] = coeffs;
            emit(out, format);
        } else if (app.got_subcommand(c_dtmot)) {
            out["command"] = "dtmot";
            out["params"] = {{"r", r}, {"order", order}};
            auto S = dt::dtmot_closed(r, order);
            json coeffs = json::array();
            for (int i = 0; i <= order; ++i) coeffs.push_back(S[i].str());
            out["coefficients"] = coeffs;
            emit(out, format);
        } else if (app.got_subcommand(c_toric)) {
            out["command"] = "toric";
            out["params"] = {{"r", r}, {"order", order}, {"input", input_file}};
            auto data = dt::load_toric(input_file);
            std::mt19937_64 rng(seed);
            out["chern_integral"] = dt::chern_integral_checked(data, rng).str();
            auto S = dt::global_dt(data, r, order);
            json coeffs = json::array();
            for (int i = 0; i <= order; ++i) coeffs.push_back(S[i].str());
            out["coefficients"] = coeffs;
            emit(out, format);
        } else if (app.got_subcommand(c_verify)) {
            out["command"] = "verify";
            out["params"] = {{"what", what}, {"order", order}, {"p_order", p_order}, {"b_order", b_order},
                             {"trials", trials}, {"seed", seed}};
            std::vector<dt::VerificationReport> reports;
            const int ell_q = std::min(order, 3);
            if (what == "all") {
                for (int rr = 2; rr <= 3; ++rr) reports.push_back(dt::verify_framing_independence(rr, order, trials, seed));
                for (int rr = 2; rr <= 3; ++rr) reports.push_back(dt::verify_product_formula(rr, order, trials, seed));
                for (int rr = 1; rr <= 3; ++rr) reports.push_back(dt::verify_kth_closed(rr, order, trials, seed));
                for (int rr = 1; rr <= 3; ++rr) reports.push_back(dt::verify_coh_closed(rr, order, trials, seed));
                for (int rr = 1; rr <= 3; ++rr) reports.push_back(dt::verify_cy_specialization(rr, order));
                for (int rr = 1; rr <= 2; ++rr) reports.push_back(dt::verify_lambda_independence(rr, order, trials, seed));
                reports.push_back(dt::verify_elliptic_restriction(2, 1, ell_q, p_order));
                reports.push_back(dt::verify_elliptic_restriction(2, 2, ell_q, p_order));
                reports.push_back(dt::verify_elliptic_restriction(3, 3, ell_q, p_order));
                for (int rr = 1; rr <= 3; ++rr) reports.push_back(dt::verify_motivic_factorization(rr, order));
                if (input_file.empty()) {
                    for (const char* f : {"data/p3.json", "data/p1cubed.json"}) {
                        auto data = dt::load_toric(f);
                        reports.push_back(dt::verify_gluing(data, 1, std::min(order, 3), trials, seed));
                    }
                    reports.push_back(dt::verify_gluing(dt::load_toric("data/p3_lambda_r2.json"), 2, std::min(order, 2), trials, seed));
                } else {
                    reports.push_back(dt::verify_gluing(dt::load_toric(input_file), r, std::min(order, 3), trials, seed));
                }
            } else if (what == "framing") {
                reports.push_back(dt::verify_framing_independence(r, order, trials, seed));
            } else if (what == "product") {
                reports.push_back(dt::verify_product_formula(r, order, trials, seed));
            } else if (what == "kth") {
                reports.push_back(dt::verify_kth_closed(r, order, trials, seed));
            } else if (what == "coh") {
                reports.push_back(dt::verify_coh_closed(r, order, trials, seed));
            } else if (what == "cy") {
                reports.push_back(dt::verify_cy_specialization(r, order));
            } else if (what == "lambda") {
                reports.push_back(dt::verify_lambda_independence(r, order, trials, seed));
            } else if (what == "elliptic") {
                reports.push_back(dt::verify_elliptic_restriction(r, k, ell_q, p_order));
            } else if (what == "motivic") {
                reports.push_back(dt::verify_motivic_factorization(r, order));
            } else if (what == "gluing") {
                if (input_file.empty()) throw std::runtime_error("verify gluing requires --input");
                reports.push_back(dt::verify_gluing(dt::load_toric(input_file), r, order, trials, seed));
            } else {
                throw std::runtime_error("unknown verify target: " + what);
            }
            out["report"] = json::array();
            for (const auto& rep : reports) {
                out["report"].push_back(report_json(rep));
                all_pass = all_pass && rep.pass;
            }
            out["pass"] = all_pass;
            emit(out, format);
            return all_pass ? 0 : 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
