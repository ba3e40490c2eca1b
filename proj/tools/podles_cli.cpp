#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "podles/bundles.hpp"
#include "podles/errors.hpp"
#include "podles/pairing.hpp"
#include "podles/params.hpp"
#include "podles/report.hpp"
#include "podles/sphere.hpp"
#include "podles/suq2.hpp"

namespace {

struct RunConfig {
    std::string q_text;
    std::string s_text;
    int n_max = 3;
    long trunc = 256;
    double tol = 1e-6;
    std::string format = "csv";
    std::string suites = "symbolic,operator,bundles,index";
    std::string out;
};

podles::Params make_params(const RunConfig& cfg) {
    bool conv_q = false;
    bool conv_s = false;
    podles::Rational q = podles::parse_param_value(cfg.q_text, conv_q);
    podles::Rational s = podles::parse_param_value(cfg.s_text, conv_s);
    if (conv_q)
        std::cerr << "note: --q " << cfg.q_text << " taken as the rational "
                  << podles::format_rational(q) << "\n";
    if (conv_s)
        std::cerr << "note: --s " << cfg.s_text << " taken as the rational "
                  << podles::format_rational(s) << "\n";
    return podles::Params(q, s);
}

std::vector<std::string> split_suites(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    for (const auto& name : out)
        if (name != "symbolic" && name != "operator" && name != "bundles" && name != "index")
            throw podles::InvalidParamsError("unknown suite '" + name + "'");
    if (out.empty())
        throw podles::InvalidParamsError("--suites selects nothing");
    return out;
}

void write_report(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f)
        throw podles::InvalidParamsError("cannot open --out path " + cfg.out);
    f << text;
}

/* --- verify ------------------------------------------------------- */

struct CheckRow {
    std::string suite;
    std::string check;
    bool has_residual = false;
    double residual = 0.0;
    bool pass = false;
};

std::string emit_verify_csv(const std::vector<CheckRow>& rows) {
    std::string out = "suite,check,residual,pass\n";
    for (const auto& r : rows) {
        out += r.suite + "," + r.check + ",";
        if (r.has_residual)
            out += podles::fmt_g12(r.residual);
        out += ",";
        out += r.pass ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string emit_verify_json(const podles::Params& par, const std::vector<CheckRow>& rows) {
    std::string out = "{\"q\":\"" + podles::format_rational(par.q) + "\",\"s\":\"" +
                      podles::format_rational(par.s) + "\",\"checks\":[";
    bool first = true;
    for (const auto& r : rows) {
        if (!first)
            out += ",";
        first = false;
        out += "{\"suite\":\"" + r.suite + "\",\"check\":\"" + r.check + "\",\"residual\":";
        out += r.has_residual ? podles::fmt_g12(r.residual) : std::string("null");
        out += ",\"pass\":";
        out += r.pass ? "true" : "false";
        out += "}";
    }
    out += "]}\n";
    return out;
}

int cmd_verify(const RunConfig& cfg) {
    podles::Params par = make_params(cfg);
    std::vector<std::string> suites = split_suites(cfg.suites);
    std::vector<CheckRow> rows;

    for (const auto& suite : suites) {
        if (suite == "symbolic") {
            for (int n = 1; n <= cfg.n_max; ++n) {
                podles::IdentityReport rep = podles::verify_weight_identities(n, par);
                for (const auto& c : rep.identities)
                    rows.push_back({suite, "n=" + std::to_string(n) + ":" + c.name,
                                    false, 0.0, c.pass});
            }
        } else if (suite == "operator") {
            for (const podles::DiscReport& rep :
                 {podles::verify_generator_relations(par), podles::quantum_disc_check(par)})
                for (const auto& c : rep.checks)
                    rows.push_back({suite, c.name, true, c.residual, c.pass});
        } else if (suite == "bundles") {
            for (int N = -cfg.n_max; N <= cfg.n_max; ++N) {
                podles::BundleReport rep = podles::verify_bundle_identities(N, par);
                for (const auto& c : rep.checks)
                    rows.push_back({suite, "N=" + std::to_string(N) + ":" + c.name,
                                    true, c.residual, c.pass});
            }
        } else {
            /* index: trace pairings against the winding and the Fredholm count */
            for (int N = -cfg.n_max; N <= cfg.n_max; ++N) {
                std::string tag = "N=" + std::to_string(N) + ":";
                podles::BundleProjection e = podles::build_E(N, par);
                podles::PairingReport rho = podles::pair_rho(e, cfg.tol);
                podles::PairingReport eps = podles::pair_eps(e);
                podles::FredholmIndex fred = podles::fredholm_index_direct(e, cfg.trunc);
                rows.push_back({suite, tag + "rho_is_winding", true,
                                std::abs(rho.value - N),
                                rho.certified && rho.rounded == N});
                rows.push_back({suite, tag + "eps_is_rank", true, std::abs(eps.value - 1.0),
                                eps.certified && eps.rounded == 1});
                rows.push_back({suite, tag + "fredholm_matches_rho", false, 0.0,
                                fred.index == rho.rounded});
            }
            podles::BundleProjection g = podles::build_G(par);
            podles::PairingReport rho_g = podles::pair_rho(g, cfg.tol);
            podles::FredholmIndex fred_g = podles::fredholm_index_direct(g, cfg.trunc);
            rows.push_back({suite, "G:rho_counts_corner", true, std::abs(rho_g.value - 1.0),
                            rho_g.certified && rho_g.rounded == 1});
            rows.push_back({suite, "G:fredholm_matches_rho", false, 0.0,
                            fred_g.index == rho_g.rounded});
        }
    }

    write_report(cfg, cfg.format == "json" ? emit_verify_json(par, rows)
                                           : emit_verify_csv(rows));
    for (const auto& r : rows)
        if (!r.pass)
            return 1;
    return 0;
}

/* --- pair --------------------------------------------------------- */

struct PairRow {
    int N = 0;
    std::string form;
    podles::PairingReport rho, eps;
};

std::string emit_pair_csv(const podles::Params& par, const std::vector<PairRow>& rows) {
    std::string qs = podles::format_rational(par.q) + "," + podles::format_rational(par.s);
    std::string out = "N,form,q,s,pair_rho,pair_rho_tail,pair_eps,certified\n";
    for (const auto& r : rows) {
        out += std::to_string(r.N) + "," + r.form + "," + qs + "," +
               podles::fmt_g12(r.rho.value) + "," + podles::fmt_g12(r.rho.tail_bound) + "," +
               podles::fmt_g12(r.eps.value) + ",";
        out += (r.rho.certified && r.eps.certified) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string emit_pair_json(const podles::Params& par, const std::vector<PairRow>& rows) {
    std::string out = "{\"q\":\"" + podles::format_rational(par.q) + "\",\"s\":\"" +
                      podles::format_rational(par.s) + "\",\"rows\":[";
    bool first = true;
    for (const auto& r : rows) {
        if (!first)
            out += ",";
        first = false;
        out += "{\"N\":" + std::to_string(r.N) + ",\"form\":\"" + r.form +
               "\",\"pair_rho\":" + podles::to_json(r.rho) +
               ",\"pair_eps\":" + podles::to_json(r.eps) + "}";
    }
    out += "]}\n";
    return out;
}

int cmd_pair(const RunConfig& cfg) {
    podles::Params par = make_params(cfg);

    std::vector<std::pair<int, std::string>> plan;
    for (int N = -cfg.n_max; N <= cfg.n_max; ++N) {
        plan.emplace_back(N, "E");
        if (N != 0)
            plan.emplace_back(N, "Q");
        if (N == 1)
            plan.emplace_back(N, "P1");
    }

    std::vector<PairRow> rows(plan.size());
    std::string failure;

#ifdef PODLES_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(plan.size()); ++i) {
        try {
            const auto& [N, form] = plan[i];
            podles::BundleProjection p =
                form == "E"   ? podles::build_E(N, par)
                : form == "Q" ? podles::build_Q(N, par)
                              : podles::build_P1_matrix(+1, par);
            rows[i] = {N, form, podles::pair_rho(p, cfg.tol), podles::pair_eps(p)};
        } catch (const std::exception& e) {
#ifdef PODLES_HAVE_OPENMP
#pragma omp critical
#endif
            failure = e.what();
        }
    }
    if (!failure.empty())
        throw podles::Error(failure);

    write_report(cfg, cfg.format == "json" ? emit_pair_json(par, rows)
                                           : emit_pair_csv(par, rows));
    for (const auto& r : rows)
        if (!r.rho.certified || !r.eps.certified)
            return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Podles sphere verification suites and index-pairing tables"};
    app.require_subcommand(1);

    RunConfig cfg;
    CLI::App* sub_verify = app.add_subcommand("verify", "run verification suites");
    CLI::App* sub_pair = app.add_subcommand("pair", "emit the index-pairing table");
    for (CLI::App* sub : {sub_verify, sub_pair}) {
        sub->add_option("--q", cfg.q_text, "deformation parameter in (0,1), rational or decimal")
            ->required();
        sub->add_option("--s", cfg.s_text, "family parameter > 0, rational or decimal")
            ->required();
        sub->add_option("--n-max", cfg.n_max, "largest winding / identity level")
            ->check(CLI::Range(0, 64));
        sub->add_option("--trunc", cfg.trunc, "dense truncation size")
            ->check(CLI::Range(16, 1 << 20));
        sub->add_option("--tol", cfg.tol, "trace summation tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "report format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--suites", cfg.suites,
                        "comma-separated subset of symbolic,operator,bundles,index");
        sub->add_option("--out", cfg.out, "write the report to this path instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return sub_verify->parsed() ? cmd_verify(cfg) : cmd_pair(cfg);
    } catch (const podles::MalformedInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const podles::InvalidParamsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
