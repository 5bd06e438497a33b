// talbotsum: Gauss sums by four routes, Talbot carpets, and periodic-potential
// Schrodinger evolution from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 parameter error, 3 I/O error.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "talbotsum/errors.hpp"
#include "talbotsum/field_io.hpp"
#include "talbotsum/galilean.hpp"
#include "talbotsum/gauss_arith.hpp"
#include "talbotsum/numeric.hpp"
#include "talbotsum/periodic_schrodinger.hpp"
#include "talbotsum/potential.hpp"
#include "talbotsum/talbot.hpp"
#include "talbotsum/verify.hpp"

namespace {

using namespace talbotsum;

struct GaussArgs {
    std::int64_t q = 1;
    std::int64_t p = 0;
    std::int64_t kappa = 0;
    bool all_kappa = false;
    bool kappa_given = false;
    std::string method = "direct";
    std::int64_t K = 0;  // 0: per-method default (talbot 100000, superosc 2)
    int N = 1024;
    int Nprime = 0;
    std::string testfn = "cos4";
};

void print_gauss_row(const gauss::GaussSumSpec& spec, const gauss::GaussSumResult& r) {
    std::printf("%lld,%lld,%lld,%s,%.12g,%.12g,%.12g,%.12g,",
                static_cast<long long>(spec.q), static_cast<long long>(spec.p),
                static_cast<long long>(spec.kappa), gauss::method_name(r.method),
                r.value.real(), r.value.imag(), r.modulus, r.phase);
    if (r.error_estimate)
        std::printf("%.6g\n", *r.error_estimate);
    else
        std::printf("\n");
}

int run_gauss(const GaussArgs& a) {
    if (a.all_kappa == a.kappa_given)
        throw ParameterError("gauss: give exactly one of --kappa and --all-kappa");
    const auto phi = talbot::TestFunction::builtin(a.testfn);
    const int nprime = a.Nprime > 0 ? a.Nprime : a.N;

    std::vector<std::int64_t> kappas;
    if (a.all_kappa)
        for (std::int64_t k = 0; k < a.q; ++k) kappas.push_back(k);
    else
        kappas.push_back(a.kappa);
    for (std::int64_t kappa : kappas) gauss::GaussSumSpec{a.p, kappa, a.q}.validate();

    std::printf("q,p,kappa,method,re,im,modulus,phase,error_estimate\n");
    for (std::int64_t kappa : kappas) {
        gauss::GaussSumSpec spec{a.p, kappa, a.q};
        gauss::GaussSumResult r;
        if (a.method == "direct") {
            r = gauss::GaussSumResult::of(gauss::gauss_sum_direct(spec), gauss::Method::direct);
        } else if (a.method == "closed") {
            r = gauss::GaussSumResult::of(gauss::gauss_closed_odd_q(spec),
                                          gauss::Method::closed_odd);
        } else if (a.method == "talbot") {
            r = talbot::gauss_via_talbot(spec, phi, a.K > 0 ? a.K : 100000);
        } else if (a.method == "superosc") {
            const std::int64_t K = a.K > 0 ? a.K : 2;
            if (K > 64)
                throw ParameterError("gauss: superosc route needs K <= 64 (precision grows with N log|2k/q|)");
            r = talbot::gauss_via_superosc(spec, phi, static_cast<int>(K), a.N, nprime);
        } else {
            throw ParameterError("gauss: unknown method '" + a.method + "'");
        }
        print_gauss_row(spec, r);
    }
    return 0;
}

struct CarpetArgs {
    double M = talbot::CombParams::kDefaultM;
    int K = 200;
    double tmin = 0.0, tmax = 0.0, xmin = 0.0, xmax = 0.0;
    int rows = 512, cols = 512;
    std::string testfn = "cos4";
    std::string out;
    std::string format = "pgm";
};

int run_carpet(const CarpetArgs& a) {
    const auto phi = talbot::TestFunction::builtin(a.testfn);
    talbot::CombParams params{a.M, a.K};
    const auto raster =
        talbot::carpet_raster(params, a.tmin, a.tmax, a.xmin, a.xmax, a.rows, a.cols, phi);

    if (a.format == "csv")
        io::write_file(a.out, [&](std::ostream& os) { io::write_carpet_csv(os, raster); });
    else if (a.format == "pgm")
        io::write_file(a.out, [&](std::ostream& os) { io::write_carpet_pgm(os, raster); });
    else
        throw ParameterError("carpet: unknown format '" + a.format + "'");

    double lo = raster.intensity.empty() ? 0.0 : raster.intensity[0];
    double hi = lo;
    for (double v : raster.intensity) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::printf("wrote %s (%dx%d %s), intensity range [%.6g, %.6g]\n", a.out.c_str(), a.rows,
                a.cols, a.format.c_str(), lo, hi);

    std::printf("rational times t_{M,p,q} = (2pi/M^2)(p/q) inside [tmin, tmax], q <= 6:\n");
    for (std::int64_t q = 1; q <= 6; ++q) {
        for (std::int64_t p = 0; p < q; ++p) {
            if (gauss::gcd64(p, q) != 1) continue;
            const double t = talbot::RationalTime(p, q).value(a.M);
            if (t >= a.tmin && t <= a.tmax)
                std::printf("  p/q = %lld/%lld: t = %.9g\n", static_cast<long long>(p),
                            static_cast<long long>(q), t);
        }
    }
    return 0;
}

struct EvolveArgs {
    std::string potential;
    int alpha = 1;
    double omega = 0.0;
    double t = 1.0;
    std::string engine = "corrected";
    int kmodes = 16;
    int order = 12;
    int substeps = 64;
    int xgrid = 128;
    std::string out;
    std::string modes_out;
};

int run_evolve(const EvolveArgs& a) {
    if (a.alpha != 1 && a.alpha != -1) throw ParameterError("evolve: alpha must be 1 or -1");
    std::ifstream in(a.potential);
    if (!in) throw IoError("evolve: cannot open potential file '" + a.potential + "'");
    PeriodicPotential V;
    try {
        V = PeriodicPotential::parse(in);
    } catch (const IoError& e) {
        // malformed content is a parameter problem, not an I/O failure
        throw ParameterError(e.what());
    }

    schrodinger::Engine engine;
    if (a.engine == "literal")
        engine = schrodinger::Engine::literal;
    else if (a.engine == "corrected")
        engine = schrodinger::Engine::corrected;
    else if (a.engine == "oracle")
        engine = schrodinger::Engine::oracle;
    else
        throw ParameterError("evolve: unknown engine '" + a.engine + "'");

    schrodinger::Truncation trunc;
    trunc.k_modes = std::max(a.kmodes, V.max_harmonic());
    trunc.order = a.order;
    trunc.substeps = a.substeps;

    std::vector<double> xg(static_cast<std::size_t>(a.xgrid));
    for (int j = 0; j < a.xgrid; ++j)
        xg[static_cast<std::size_t>(j)] = -kPi + kTwoPi * j / std::max(1, a.xgrid - 1);

    const auto res = schrodinger::plane_wave_evolution(a.omega, a.alpha, a.t, xg, V, trunc, engine);
    io::write_file(a.out,
                   [&](std::ostream& os) { io::write_field_slice_csv(os, a.t, xg, res.field); });

    std::printf("mode l2 norm: %.12g\n", res.modes.norm2());
    if (engine != schrodinger::Engine::oracle) {
        schrodinger::Truncation low = trunc;
        low.oracle_steps = 1024;
        const auto ref = schrodinger::rk4_oracle(a.t, a.alpha, a.alpha * a.omega, V, trunc.k_modes,
                                                 low.oracle_steps, schrodinger::ModeVector::delta0(trunc.k_modes));
        double dev = 0.0;
        for (int k = -trunc.k_modes; k <= trunc.k_modes; ++k)
            dev = std::max(dev, std::abs(res.modes.at(k) - ref.at(k)));
        if (engine == schrodinger::Engine::literal)
            std::printf("deviation from oracle: %.6g  PAPER-LITERAL (no -i): documented divergence\n",
                        dev);
        else
            std::printf("deviation from oracle: %.6g\n", dev);
    }
    std::printf("wrote %s\n", a.out.c_str());

    if (!a.modes_out.empty()) {
        galilean::PlaneWaveField f;
        for (int k = -trunc.k_modes; k <= trunc.k_modes; ++k) {
            galilean::SampledAmplitude s;
            s.t_grid = {a.t};
            const double phase = -a.alpha * (static_cast<double>(k) * k + a.omega * a.omega +
                                             2.0 * k * a.omega) * a.t;
            s.values = {res.modes.at(k) * cis(phase)};
            f.terms.push_back({static_cast<double>(k) + a.omega, s});
        }
        io::write_file(a.modes_out,
                       [&](std::ostream& os) { galilean::write_field_csv(os, f, {a.t}); });
        std::printf("wrote %s\n", a.modes_out.c_str());
    }
    return 0;
}

// Expands "--config FILE" (plain "key = value" lines, '#' comments) into the
// matching long options. Explicit command-line flags keep precedence: a key
// is only appended when its flag is absent.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParameterError("config file: expected 'key = value' on line " +
                                     std::to_string(lineno));
            continue;
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParameterError("config file: empty key or value on line " + std::to_string(lineno));
        const std::string flag = "--" + key;
        bool present = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
        if (!present) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

int run_verify(const std::string& suite) {
    const auto checks = verify::suite_checks(suite.empty() ? "all" : suite);
    if (checks.empty()) throw ParameterError("verify: unknown suite '" + suite + "'");
    int failures = 0;
    for (const auto* c : checks) {
        const auto r = c->run();
        if (!r.pass) ++failures;
        std::printf("%s %s %s: %s\n", r.pass ? "PASS" : "FAIL", c->suite.c_str(),
                    c->name.c_str(), r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(checks.size()) - failures,
                checks.size());
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic Gauss sums, Talbot carpets, and periodic-potential evolution"};
    app.require_subcommand(1);

    GaussArgs ga;
    auto* gauss_cmd = app.add_subcommand("gauss", "compute G(-p,kappa,q) by a chosen route");
    gauss_cmd->add_option("--q", ga.q, "modulus q >= 1")->required();
    gauss_cmd->add_option("--p", ga.p, "quadratic coefficient p, coprime with q")->required();
    auto* kopt = gauss_cmd->add_option("--kappa", ga.kappa, "linear coefficient kappa in [0, q)");
    gauss_cmd->add_flag("--all-kappa", ga.all_kappa, "one row per kappa in [0, q)");
    gauss_cmd->add_option("--method", ga.method, "direct | closed | talbot | superosc");
    gauss_cmd->add_option("--K", ga.K, "mode cutoff for talbot/superosc routes");
    gauss_cmd->add_option("--N", ga.N, "superoscillation order N");
    gauss_cmd->add_option("--Nprime", ga.Nprime, "shift order N' (defaults to N)");
    gauss_cmd->add_option("--testfn", ga.testfn, "cos4 | bspline3");

    CarpetArgs ca;
    auto* carpet_cmd = app.add_subcommand("carpet", "rasterize |comb evolution|^2 over (t, x)");
    carpet_cmd->add_option("--M", ca.M, "grating angular frequency (default 2pi)");
    carpet_cmd->add_option("--K", ca.K, "mode cutoff");
    carpet_cmd->add_option("--tmin", ca.tmin)->required();
    carpet_cmd->add_option("--tmax", ca.tmax)->required();
    carpet_cmd->add_option("--xmin", ca.xmin)->required();
    carpet_cmd->add_option("--xmax", ca.xmax)->required();
    carpet_cmd->add_option("--rows", ca.rows);
    carpet_cmd->add_option("--cols", ca.cols);
    carpet_cmd->add_option("--testfn", ca.testfn, "cos4 | bspline3");
    carpet_cmd->add_option("--out", ca.out, "output path")->required();
    carpet_cmd->add_option("--format", ca.format, "csv | pgm");

    EvolveArgs ea;
    auto* evolve_cmd = app.add_subcommand("evolve", "evolve e^{i omega x} under a periodic potential");
    evolve_cmd->add_option("--potential", ea.potential, "harmonics file: lines 'l re im', l >= 0")
        ->required();
    evolve_cmd->add_option("--alpha", ea.alpha, "1 | -1");
    evolve_cmd->add_option("--omega", ea.omega, "plane-wave frequency");
    evolve_cmd->add_option("--t", ea.t, "evolution time");
    evolve_cmd->add_option("--engine", ea.engine, "literal | corrected | oracle");
    evolve_cmd->add_option("--kmodes", ea.kmodes, "mode cutoff");
    evolve_cmd->add_option("--order", ea.order, "series order N");
    evolve_cmd->add_option("--substeps", ea.substeps, "corrected-engine substeps");
    evolve_cmd->add_option("--xgrid", ea.xgrid, "number of x samples on [-pi, pi]");
    evolve_cmd->add_option("--out", ea.out, "field csv path")->required();
    evolve_cmd->add_option("--modes-out", ea.modes_out, "optional mode-amplitude csv");

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run the self-verification suites");
    verify_cmd->add_option("--suite", suite, "gauss | talbot | superosc | schrodinger | all");

    try {
        auto args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 vector parse order
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParameterError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }

    try {
        if (gauss_cmd->parsed()) {
            ga.kappa_given = kopt->count() > 0;
            return run_gauss(ga);
        }
        if (carpet_cmd->parsed()) return run_carpet(ca);
        if (evolve_cmd->parsed()) return run_evolve(ea);
        if (verify_cmd->parsed()) return run_verify(suite);
    } catch (const ParameterError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
