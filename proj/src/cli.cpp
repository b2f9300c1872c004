#include "mz/cli.hpp"

#include "mz/certify.hpp"
#include "mz/dynatomic.hpp"
#include "mz/errors.hpp"
#include "mz/newton.hpp"
#include "mz/numbers.hpp"
#include "mz/orbit.hpp"
#include "mz/serialize.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

namespace mz {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitIdentityFailure = 3;
constexpr int kExitReducible = 4;
constexpr int kExitInconclusive = 5;
constexpr int kExitOrbitFail = 6;

struct OutputOptions {
    std::string out_path;
    bool pretty = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--out", opts.out_path, "write the JSON report to FILE instead of stdout");
    cmd->add_flag("--pretty", opts.pretty, "indent the JSON output");
}

int emit(const Json& j, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
    const std::string text = opts.pretty ? j.dump(2) : j.dump();
    if (opts.out_path.empty()) {
        out << text << "\n";
        return kExitOk;
    }
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open output file " << opts.out_path << "\n";
        return kExitInvalid;
    }
    f << text << "\n";
    return kExitOk;
}

Variable parse_variable(const std::string& name, std::ostream& err) {
    if (name == "a") return Variable::a;
    if (name == "b") return Variable::b;
    err << "error: --var must be 'a' or 'b'\n";
    throw CLI::RuntimeError(kExitInvalid);
}

// ---- compute ----

struct ComputeArgs {
    unsigned d = 3;
    unsigned m = 1;
    unsigned n = 1;
    std::string var = "a";
    OutputOptions out;
};

int run_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
    Variable var = parse_variable(args.var, err);
    FamilyParams params{args.d, args.m, args.n};
    validate(params);
    if (params.m >= 1 && params.n == 1) {
        return emit(to_json(misiurewicz(params, var)), args.out, out, err);
    }
    // general (m, n): only the factorable tail/period polynomial exists
    auto table = orbit_table_cached(params.d, params.m + params.n, var);
    Json j;
    j["d"] = params.d;
    j["m"] = params.m;
    j["n"] = params.n;
    j["variable"] = std::string(1, variable_name(var));
    j["pre_misiurewicz"] = to_json(pre_misiurewicz(params, *table));
    return emit(j, args.out, out, err);
}

// ---- polygon ----

struct PolygonArgs {
    unsigned d = 3;
    unsigned m = 1;
    std::uint64_t prime = 0;
    std::string var = "b";
    OutputOptions out;
};

int run_polygon(const PolygonArgs& args, std::ostream& out, std::ostream& err) {
    Variable var = parse_variable(args.var, err);
    if (!is_prime(args.prime)) {
        err << "error: --prime " << args.prime << " is not prime\n";
        return kExitInvalid;
    }
    FamilyParams params{args.d, args.m, 1};
    validate(params);
    if (params.m < 1) {
        err << "error: polygon requires m >= 1\n";
        return kExitInvalid;
    }
    MisiurewiczBundle bundle = misiurewicz(params, var);
    Json j = to_json(newton_polygon(bundle.misiurewicz, args.prime));
    j["d"] = params.d;
    j["m"] = params.m;
    j["variable"] = std::string(1, variable_name(var));
    return emit(j, args.out, out, err);
}

// ---- certify ----

struct CertifyArgs {
    unsigned d = 3;
    unsigned m = 1;
    std::vector<std::uint64_t> primes;
    unsigned budget = 25;
    double timeout_s = 0;
    OutputOptions out;
};

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Irreducible: return kExitOk;
        case Verdict::Reducible: return kExitReducible;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitInvalid;
}

int run_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
    FamilyParams params{args.d, args.m, 1};
    validate(params);
    if (params.m < 1) {
        err << "error: certify requires m >= 1\n";
        return kExitInvalid;
    }
    CertifyConfig config;
    config.polygon_primes = args.primes;
    config.modp_budget = args.budget;
    if (args.timeout_s > 0) config.deadline = Deadline::after(args.timeout_s);
    Certificate cert = certify_family(args.d, args.m, config);
    Json j = to_json(cert);
    j["d"] = args.d;
    j["m"] = args.m;
    int rc = emit(j, args.out, out, err);
    return rc != kExitOk ? rc : verdict_exit(cert.verdict);
}

// ---- sweep ----

struct SweepArgs {
    unsigned dmin = 2;
    unsigned dmax = 12;
    unsigned mmin = 1;
    unsigned mmax = 2;
    bool prime_only = false;
    bool include_composite_deep = false;
    std::vector<std::uint64_t> primes;
    unsigned budget = 25;
    double timeout_s = 300;
    unsigned jobs = 0;
    OutputOptions out;
};

struct SweepRow {
    unsigned d = 0;
    unsigned m = 0;
    std::string status; // ok | skipped-opt-in | skipped-timeout
    std::optional<Certificate> cert;
    long long time_ms = 0;
};

int run_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    if (args.dmin < 2 || args.dmax < args.dmin || args.mmin < 1 || args.mmax < args.mmin) {
        err << "error: invalid sweep ranges\n";
        return kExitInvalid;
    }
    std::vector<std::pair<unsigned, unsigned>> grid;
    for (unsigned d = args.dmin; d <= args.dmax; ++d) {
        if (args.prime_only && !is_prime(d)) continue;
        for (unsigned m = args.mmin; m <= args.mmax; ++m) grid.emplace_back(d, m);
    }

    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    unsigned jobs = args.jobs ? args.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, grid.size() == 0 ? 1 : static_cast<unsigned>(grid.size()));

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            auto [d, m] = grid[i];
            SweepRow& row = rows[i];
            row.d = d;
            row.m = m;
            // deep composite-d points are opt-in; they can run for hours
            if (!is_prime(d) && m >= 3 && !args.include_composite_deep) {
                row.status = "skipped-opt-in";
                continue;
            }
            CertifyConfig config;
            config.polygon_primes = args.primes;
            config.modp_budget = args.budget;
            if (args.timeout_s > 0) config.deadline = Deadline::after(args.timeout_s);
            auto start = std::chrono::steady_clock::now();
            try {
                row.cert = certify_family(d, m, config);
                row.status = "ok";
            } catch (const Timeout&) {
                row.status = "skipped-timeout";
            }
            row.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Json j;
    j["config"] = Json{{"dmin", args.dmin},
                       {"dmax", args.dmax},
                       {"mmin", args.mmin},
                       {"mmax", args.mmax},
                       {"d_prime_only", args.prime_only},
                       {"include_composite_deep", args.include_composite_deep},
                       {"prime_budget", args.budget},
                       {"timeout_s", args.timeout_s}};
    Json results = Json::array();
    bool any_reducible = false;
    bool any_open_inconclusive = false;
    for (const SweepRow& row : rows) {
        Json r;
        r["d"] = row.d;
        r["m"] = row.m;
        r["status"] = row.status;
        if (row.cert) {
            r["degree"] = row.cert->degree ? Json(*row.cert->degree) : Json(nullptr);
            r["verdict"] = to_string(row.cert->verdict);
            r["method"] = row.cert->method ? Json(to_string(*row.cert->method)) : Json(nullptr);
            r["prime"] = row.cert->prime ? Json(*row.cert->prime) : Json(nullptr);
            r["variable"] = std::string(1, variable_name(row.cert->variable));
            if (row.cert->polygon) {
                Json verts = Json::array();
                for (const PolygonPoint& v : row.cert->polygon->vertices()) {
                    verts.push_back(Json::array({v.index, v.val}));
                }
                r["polygon_vertices"] = std::move(verts);
            } else {
                r["polygon_vertices"] = Json(nullptr);
            }
            if (row.cert->verdict == Verdict::Reducible) any_reducible = true;
            if (row.cert->verdict == Verdict::Inconclusive) any_open_inconclusive = true;
        } else {
            r["degree"] = Json(nullptr);
            r["verdict"] = Json(nullptr);
            r["method"] = Json(nullptr);
            r["prime"] = Json(nullptr);
            r["variable"] = Json(nullptr);
            r["polygon_vertices"] = Json(nullptr);
        }
        r["time_ms"] = row.time_ms;
        results.push_back(std::move(r));
    }
    j["results"] = std::move(results);

    int rc = emit(j, args.out, out, err);
    if (rc != kExitOk) return rc;
    for (const SweepRow& row : rows) {
        if (row.cert && row.cert->verdict != Verdict::Irreducible) {
            err << "warning: d=" << row.d << ", m=" << row.m << " is "
                << to_string(row.cert->verdict) << "\n";
        }
    }
    if (any_reducible) return kExitReducible;
    if (any_open_inconclusive) return kExitInconclusive;
    return kExitOk;
}

// ---- orbit ----

struct OrbitArgs {
    unsigned d = 3;
    unsigned m = 1;
    double tol = 1e-6;
    OutputOptions out;
};

int run_orbit(const OrbitArgs& args, std::ostream& out, std::ostream& err) {
    FamilyParams params{args.d, args.m, 1};
    validate(params);
    if (params.m < 1) {
        err << "error: orbit requires m >= 1\n";
        return kExitInvalid;
    }
    MisiurewiczBundle bundle = misiurewicz(params, Variable::a);

    Json reports = Json::array();
    bool any_fail = false;
    auto run_roots = [&](const IntPoly& poly, RootSource source, const char* label) {
        if (poly.is_zero() || poly.degree() < 1) return;
        for (const Complex& root : complex_roots(poly, 1e-8)) {
            OrbitReport rep;
            try {
                rep = orbit_portrait_check(args.d, args.m, root, args.tol, source);
            } catch (const PoleEncountered& e) {
                rep.parameter = root;
                rep.status = OrbitStatus::Fail;
                rep.note = e.what();
            } catch (const NoFixedPointMatch& e) {
                rep.parameter = root;
                rep.status = OrbitStatus::Fail;
                rep.note = e.what();
            }
            Json r = to_json(rep);
            r["source"] = label;
            reports.push_back(std::move(r));
            if (rep.status == OrbitStatus::Fail) any_fail = true;
        }
    };
    run_roots(bundle.misiurewicz, RootSource::Misiurewicz, "misiurewicz");
    run_roots(bundle.q_factor, RootSource::QFactor, "q_factor");

    Json j;
    j["d"] = args.d;
    j["m"] = args.m;
    j["tol"] = args.tol;
    j["reports"] = std::move(reports);
    int rc = emit(j, args.out, out, err);
    if (rc != kExitOk) return rc;
    return any_fail ? kExitOrbitFail : kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Misiurewicz polynomial toolkit: exact construction, Newton polygons,\n"
                 "irreducibility certificates, and orbit validation for the family\n"
                 "z -> az/(z^d + (d-1))"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand("compute", "emit the Misiurewicz bundle as JSON");
    compute->add_option("--d", compute_args.d, "map degree (>= 2)")->required();
    compute->add_option("--m", compute_args.m, "tail length")->required();
    compute->add_option("--n", compute_args.n, "formal period (default 1)");
    compute->add_option("--var", compute_args.var, "coordinate: a or b (default a)");
    add_output_flags(compute, compute_args.out);

    PolygonArgs polygon_args;
    CLI::App* polygon = app.add_subcommand("polygon", "emit the Newton polygon as JSON");
    polygon->add_option("--d", polygon_args.d, "map degree (>= 2)")->required();
    polygon->add_option("--m", polygon_args.m, "tail length (>= 1)")->required();
    polygon->add_option("--prime", polygon_args.prime, "prime p")->required();
    polygon->add_option("--var", polygon_args.var, "coordinate: a or b (default b)");
    add_output_flags(polygon, polygon_args.out);

    CertifyArgs certify_args;
    CLI::App* certify = app.add_subcommand("certify", "certify irreducibility over Q");
    certify->add_option("--d", certify_args.d, "map degree (>= 2)")->required();
    certify->add_option("--m", certify_args.m, "tail length (>= 1)")->required();
    certify->add_option("--prime", certify_args.primes, "polygon primes to try (repeatable)");
    certify->add_option("--prime-budget", certify_args.budget, "mod-p prime budget (default 25)");
    certify->add_option("--timeout", certify_args.timeout_s, "per-run timeout in seconds");
    add_output_flags(certify, certify_args.out);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "certify a (d, m) grid");
    sweep->add_option("--dmin", sweep_args.dmin, "smallest degree (default 2)");
    sweep->add_option("--dmax", sweep_args.dmax, "largest degree")->required();
    sweep->add_option("--mmin", sweep_args.mmin, "smallest tail (default 1)");
    sweep->add_option("--mmax", sweep_args.mmax, "largest tail")->required();
    sweep->add_flag("--d-prime-only", sweep_args.prime_only, "restrict to prime d");
    sweep->add_flag("--include-composite-deep", sweep_args.include_composite_deep,
                    "run composite d with m >= 3 (possibly hours)");
    sweep->add_option("--prime", sweep_args.primes, "polygon primes to try (repeatable)");
    sweep->add_option("--prime-budget", sweep_args.budget, "mod-p prime budget per point");
    sweep->add_option("--timeout", sweep_args.timeout_s,
                      "per-point timeout in seconds (default 300, 0 disables)");
    sweep->add_option("--jobs", sweep_args.jobs, "parallel grid workers (default: cores)");
    add_output_flags(sweep, sweep_args.out);

    OrbitArgs orbit_args;
    CLI::App* orbit = app.add_subcommand("orbit", "validate orbit portraits numerically");
    orbit->add_option("--d", orbit_args.d, "map degree (>= 2)")->required();
    orbit->add_option("--m", orbit_args.m, "tail length (>= 1)")->required();
    orbit->add_option("--tol", orbit_args.tol, "matching tolerance (default 1e-6)");
    add_output_flags(orbit, orbit_args.out);

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return run_compute(compute_args, out, err);
        if (polygon->parsed()) return run_polygon(polygon_args, out, err);
        if (certify->parsed()) return run_certify(certify_args, out, err);
        if (sweep->parsed()) return run_sweep(sweep_args, out, err);
        if (orbit->parsed()) return run_orbit(orbit_args, out, err);
        err << app.help();
        return kExitInvalid;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NonExactDivision& e) {
        err << "internal identity failure: " << e.what() << "\n";
        return kExitIdentityFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NoConvergence& e) {
        err << "error: " << e.what() << "\n";
        return kExitOrbitFail;
    }
}

} // namespace mz
