#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "ospssv/rep.hpp"
#include "ospssv/ssv.hpp"

using namespace ospssv;

namespace {

struct OutputOptions {
    std::string format = "json";
    std::string out;
    bool timing = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opts.out, "write output to a file instead of stdout");
    cmd->add_flag("--timing", opts.timing, "include wall-clock timing in the output");
}

void emit(const std::string& body, const OutputOptions& opts) {
    if (opts.out.empty()) {
        std::cout << body << "\n";
    } else {
        std::ofstream f(opts.out);
        f << body << "\n";
    }
}

int emit_report(VerificationReport rep, long ms, const OutputOptions& opts) {
    rep.timing_ms = ms;
    if (opts.format == "text") {
        std::string t = rep.text();
        if (opts.timing)
            t += "timing_ms: " + std::to_string(ms) + "\n";
        emit(t, opts);
    } else {
        emit(rep.to_json(opts.timing).dump(2), opts);
    }
    return rep.all_passed() ? 0 : 1;
}

template <class F>
int run_report(F&& f, const OutputOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = f();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    return emit_report(std::move(rep), ms, opts);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions and machine verification for Segal-Sugawara "
                 "vectors of the orthosymplectic Lie superalgebra osp_{M|2n}"};
    app.require_subcommand(1);

    int M = 1, n = 1, m = 2, k = -1;
    std::uint64_t seed = 1;
    int instances = 25;
    std::vector<int> modes{0, 1};
    std::vector<int> degrees{2, 3};
    std::vector<std::string> zs{"1", "2"};
    OutputOptions opts;

    auto* compute = app.add_subcommand("compute", "compute an object");
    auto* cphi = compute->add_subcommand("phi", "compute the vector phi_m");
    cphi->add_option("--M", M)->required();
    cphi->add_option("--n", n)->required();
    cphi->add_option("--m", m)->required()->check(CLI::Range(2, 4));
    bool rational_form = false;
    cphi->add_flag("--rational-form", rational_form,
                   "use the symmetriser form instead of the partition expansion");
    add_output_flags(cphi, opts);

    auto* verify = app.add_subcommand("verify", "run a verification campaign");

    auto* vbrauer = verify->add_subcommand("brauer", "diagrammatic identities and J_m");
    vbrauer->add_option("--m", m, "largest instance size")->check(CLI::Range(1, 4));
    add_output_flags(vbrauer, opts);

    auto* vrep = verify->add_subcommand("rep", "representation soundness and identities");
    vrep->add_option("--M", M)->required();
    vrep->add_option("--n", n)->required();
    vrep->add_option("--m", m)->check(CLI::Range(1, 3));
    vrep->add_option("--seed", seed);
    vrep->add_option("--instances", instances, "instances per randomized family");
    add_output_flags(vrep, opts);

    auto* vann = verify->add_subcommand("annihilation", "osp[t] annihilation at the "
                                                        "critical level");
    vann->add_option("--M", M)->required();
    vann->add_option("--n", n)->required();
    vann->add_option("--m", m)->required()->check(CLI::Range(2, 4));
    vann->add_option("--modes", modes, "generator modes to test")->delimiter(',');
    add_output_flags(vann, opts);

    auto* vcomm = verify->add_subcommand("commutativity", "pairwise commutators of phi_m");
    vcomm->add_option("--M", M)->required();
    vcomm->add_option("--n", n)->required();
    vcomm->add_option("--degrees", degrees)->delimiter(',');
    add_output_flags(vcomm, opts);

    auto* vpsi = verify->add_subcommand("psi", "binomial relations between tau coefficients");
    vpsi->add_option("--M", M)->required();
    vpsi->add_option("--n", n)->required();
    vpsi->add_option("--m", m)->check(CLI::Range(1, 3));
    vpsi->add_option("--k", k, "tau polynomial size (default m)");
    add_output_flags(vpsi, opts);

    auto* vcen = verify->add_subcommand("centrality", "evaluation images are central");
    vcen->add_option("--M", M)->required();
    vcen->add_option("--n", n)->required();
    vcen->add_option("--m", m)->check(CLI::Range(2, 3));
    vcen->add_option("--z", zs, "evaluation points (rationals)")->delimiter(',');
    add_output_flags(vcen, opts);

    auto* vint = verify->add_subcommand("integral", "integral vs rational form of phi_m");
    vint->add_option("--M", M)->required();
    vint->add_option("--n", n)->required();
    vint->add_option("--m", m)->required()->check(CLI::Range(2, 4));
    add_output_flags(vint, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cphi->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            SSVector phi;
            try {
                phi = rational_form ? phi_rational(Signature(M, n), m)
                                    : phi_integral(Signature(M, n), m);
            } catch (const PoleAtEvaluation& e) {
                nlohmann::json j;
                j["campaign"] = "compute-phi";
                j["params"] = {{"M", M}, {"n", n}, {"m", m}};
                j["checks"] = nlohmann::json::array(
                    {{{"name", "phi_rational"}, {"status", "skipped: singular parameters"},
                      {"witness", e.what()}}});
                j["timing_ms"] = 0;
                emit(opts.format == "text" ? std::string("skipped: singular parameters: ") +
                                                 e.what()
                                           : j.dump(2),
                     opts);
                return 0;
            }
            long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            if (opts.format == "text") {
                std::string t = "phi_" + std::to_string(m) + " for osp(" + std::to_string(M) +
                                "|" + std::to_string(2 * n) + "):\n" + phi.value.str() + "\n";
                if (opts.timing)
                    t += "timing_ms: " + std::to_string(ms) + "\n";
                emit(t, opts);
            } else {
                nlohmann::json j = phi.to_json();
                j["timing_ms"] = opts.timing ? ms : 0;
                emit(j.dump(2), opts);
            }
            return 0;
        }
        if (vbrauer->parsed()) {
            return run_report(
                [&] {
                    VerificationReport rep = identity_suite(m);
                    rep.merge(jm_suite(m, std::max(1, 2 * m - 3)));
                    rep.campaign = "brauer";
                    rep.sort_checks();
                    return rep;
                },
                opts);
        }
        if (vrep->parsed()) {
            return run_report(
                [&] {
                    Signature sig(M, n);
                    VerificationReport rep = rep_relations_check(sig, std::min(m + 1, 4), seed);
                    rep.merge(qxq_check(sig, std::min(m, 3), seed));
                    rep.merge(verify_rep_identities(sig, m, seed, instances));
                    rep.campaign = "rep";
                    rep.params = {{"M", M}, {"n", n}, {"m", m}, {"seed", seed}};
                    rep.sort_checks();
                    return rep;
                },
                opts);
        }
        if (vann->parsed()) {
            return run_report(
                [&] {
                    return verify_annihilation(Signature(M, n), m,
                                               std::set<int>(modes.begin(), modes.end()));
                },
                opts);
        }
        if (vcomm->parsed()) {
            return run_report(
                [&] {
                    return verify_commutativity(Signature(M, n),
                                                std::set<int>(degrees.begin(), degrees.end()));
                },
                opts);
        }
        if (vpsi->parsed()) {
            return run_report(
                [&] { return psi_relation_check(Signature(M, n), m, k < 0 ? m : k); }, opts);
        }
        if (vcen->parsed()) {
            return run_report(
                [&] {
                    VerificationReport rep;
                    rep.campaign = "ev-centrality";
                    rep.params = {{"M", M}, {"n", n}, {"m", m}};
                    for (const auto& zstr : zs) {
                        VerificationReport one =
                            ev_centrality_check(Signature(M, n), m, Rational::from_string(zstr));
                        for (auto& c : one.checks)
                            c.name = "z=" + zstr + "/" + c.name;
                        rep.merge(one);
                    }
                    rep.sort_checks();
                    return rep;
                },
                opts);
        }
        if (vint->parsed()) {
            return run_report([&] { return integral_rational_equivalence(Signature(M, n), m); },
                              opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
