#include "circode/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "circode/circulant.hpp"
#include "circode/estimators.hpp"
#include "circode/exact_distance.hpp"
#include "circode/header_search.hpp"
#include "circode/ledger.hpp"
#include "circode/osd.hpp"
#include "circode/verify.hpp"

namespace circode {

namespace {

/// Thrown for flag combinations CLI11 cannot express; maps to the usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// key=value lines become "--key=value" arguments placed before the command-line flags, so
/// flags given explicitly win (every single-valued option keeps its last value).
std::vector<std::string> config_args(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    std::vector<std::string> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ": line " + std::to_string(line_no) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        while (!key.empty() && key[0] == '-') key.erase(0, 1);
        for (char& c : key)
            if (c == '_') c = '-';
        out.push_back("--" + key + "=" + value);
    }
    return out;
}

struct Shared {
    std::optional<std::uint64_t> seed;
    std::size_t threads = 1;
    std::string ledger;
    std::string bounds;
    bool json = false;

    void add_to(CLI::App* app, bool with_seed) {
        if (with_seed) app->add_option("--seed", seed, "master seed (generated and printed when absent)");
        app->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
        app->add_option("--ledger", ledger, "ledger file (JSON lines, appended)")->envname("CIRCODE_LEDGER");
        app->add_option("--bounds", bounds, "bounds CSV n,k,lb,ub");
        app->add_flag("--json", json, "machine-readable output");
    }

    std::uint64_t resolve_seed(std::ostream& err) {
        if (!seed) {
            std::random_device rd;
            seed = (std::uint64_t{rd()} << 32) ^ rd();
            err << "circode: using generated seed " << *seed << "\n";
        }
        return *seed;
    }
};

struct CodeInput {
    std::string family;
    std::string header_a;
    std::string header_b;
    bool corner = false;
    std::string matrix;

    void add_to(CLI::App* app, bool allow_matrix) {
        app->add_option("--family", family, "dcc, bdcc or tcc");
        app->add_option("--header,--header-a", header_a, "first circulant header");
        app->add_option("--header-b", header_b, "second header (tcc)");
        app->add_flag("--corner", corner, "bordered dcc: set the corner bit");
        if (allow_matrix) app->add_option("--matrix", matrix, "generator matrix file");
    }

    bool has_spec() const { return !family.empty() || !header_a.empty(); }

    CodeSpec spec() const {
        if (family.empty()) throw UsageError("--family is required with a header");
        if (header_a.empty()) throw UsageError("--header is required");
        const Family f = parse_family(family);
        const BitVector a = BitVector::from_string(header_a);
        std::optional<BitVector> b;
        if (!header_b.empty()) b = BitVector::from_string(header_b);
        if (f == Family::tcc && !b) throw UsageError("tcc needs --header-b");
        if (f != Family::tcc && b) throw UsageError("--header-b applies to tcc only");
        return CodeSpec::make(f, a.size(), a, b, corner);
    }

    /// Exactly one source: matrix file or family + headers.
    void check_single_source() const {
        if (!matrix.empty() && has_spec()) throw UsageError("give either --matrix or --family/--header, not both");
        if (matrix.empty() && !has_spec()) throw UsageError("no input code: give --matrix or --family/--header");
    }

    BinaryMatrix generator() const { return matrix.empty() ? build_generator(spec()) : read_matrix_file(matrix); }

    std::string label() const {
        if (!matrix.empty()) return matrix;
        return format_header_line(spec());
    }
};

struct EstimatorFlags {
    MimParams mim;
    MimGaParams mim_ga;
    GaMsgParams ga_msg;
    std::size_t k_cap = kDefaultBruteForceCap;
    std::size_t r_cap = std::numeric_limits<std::size_t>::max();
    std::uint64_t max_work = kUnlimitedWork;
    bool cyclic = false;
    bool per_individual = false;
    std::string crossover = "two_point";

    void add_to(CLI::App* app) {
        app->add_option("--d0", mim.d0, "lower end of the distance interval");
        app->add_option("--d1", mim.d1, "upper end (0: n-k+1)");
        app->add_option("--nb-test", mim.nb_test, "MIM trials");
        app->add_option("--error-max", mim.error_max, "MIM widest impulse (0: min(d1,n))");
        app->add_option("--osd-order", mim.osd_order, "OSD order");
        app->add_option("--population", mim_ga.population, "MIM-GA population");
        app->add_option("--generations", mim_ga.generations, "MIM-GA generations");
        app->add_option("--p-cr", mim_ga.p_crossover, "MIM-GA crossover probability");
        app->add_option("--p-mu", mim_ga.p_mutation, "MIM-GA mutation probability");
        app->add_option("--r-amp", mim_ga.mutation_amplitude, "MIM-GA mutation step r");
        app->add_option("--nb-error", mim_ga.nb_error, "MIM-GA impulse positions per initial individual");
        app->add_flag("--per-individual-mutation", per_individual, "apply p-mu once per child instead of per gene");
        app->add_option("--ga-population", ga_msg.population, "GA-msg population");
        app->add_option("--ga-generations", ga_msg.generations, "GA-msg generations");
        app->add_option("--elite", ga_msg.elite, "GA-msg elite count");
        app->add_option("--p-c", ga_msg.p_crossover, "GA-msg crossover probability");
        app->add_option("--p-m", ga_msg.p_mutation, "GA-msg per-bit mutation probability");
        app->add_option("--crossover", crossover, "GA-msg crossover: one_point, two_point, uniform");
        app->add_option("--k-cap", k_cap, "brute force: largest k");
        app->add_option("--r-cap", r_cap, "slice sweeps: largest r");
        app->add_option("--max-work", max_work, "slice sweeps: combination budget");
        app->add_flag("--cyclic", cyclic, "chen: the code is cyclic (enables the early stop)");
    }

    /// Copies the shared MIM fields into MIM-GA and fixes seeds/threads.
    void finish(std::uint64_t seed, std::size_t threads) {
        mim.seed = mim_ga.seed = ga_msg.seed = seed;
        mim.threads = mim_ga.threads = ga_msg.threads = threads;
        mim_ga.d0 = mim.d0;
        mim_ga.d1 = mim.d1;
        mim_ga.osd_order = mim.osd_order;
        mim_ga.mutation_per_gene = !per_individual;
        ga_msg.crossover = parse_crossover(crossover);
    }

    Json params(Method m) const {
        switch (m) {
            case Method::mim: return to_json(mim);
            case Method::mim_ga: return to_json(mim_ga);
            case Method::ga_message: return to_json(ga_msg);
            case Method::brute_force: return Json{{"k_cap", k_cap}};
            default: {
                Json j{{"max_work", max_work}};
                j["r_cap"] = r_cap == std::numeric_limits<std::size_t>::max() ? Json(nullptr) : Json(r_cap);
                if (m == Method::chen) j["cyclic"] = cyclic;
                return j;
            }
        }
    }
};

bool randomized(Method m) { return m == Method::mim || m == Method::mim_ga || m == Method::ga_message; }

/// chen on a non-systematic matrix runs on an equivalent systematic form; the witness is mapped back.
DistanceEstimate chen_any(const BinaryMatrix& G, const ChenOptions& o) {
    if (is_systematic(G)) return chen_distance(G, o);
    const SystematicForm sf = systematize(G);
    if (sf.rank < G.rows()) throw DimensionError("generator rows are linearly dependent");
    BinaryMatrix sys(sf.rank, G.cols());
    for (std::size_t i = 0; i < sf.rank; ++i) sys.set_row(i, sf.matrix.row(i));
    DistanceEstimate est = chen_distance(sys, o);
    if (est.witness) {
        BitVector w(G.cols());
        for (std::size_t j = 0; j < G.cols(); ++j) w.set(sf.column_permutation[j], est.witness->get(j));
        est.witness = w;
    }
    return est;
}

DistanceEstimate run_method(Method m, const CodeInput& in, const EstimatorFlags& f, std::size_t threads) {
    switch (m) {
        case Method::brute_force:
            return brute_force_distance(in.generator(), {f.k_cap, threads});
        case Method::chen: {
            ChenOptions o;
            o.r_cap = f.r_cap;
            o.cyclic = f.cyclic;
            o.max_work = f.max_work;
            o.threads = threads;
            return chen_any(in.generator(), o);
        }
        case Method::circulant_exact: {
            if (!in.matrix.empty()) throw UsageError("circulant-exact needs --family/--header input, not --matrix");
            CirculantExactOptions o;
            o.r_cap = f.r_cap;
            o.max_work = f.max_work;
            o.brute_force_cap = f.k_cap;
            o.threads = threads;
            return circulant_exact_distance(in.spec(), o);
        }
        case Method::mim: return mim_estimate(in.generator(), f.mim);
        case Method::mim_ga: return mim_ga_estimate(in.generator(), f.mim_ga);
        case Method::ga_message: return ga_message_distance(in.generator(), f.ga_msg);
    }
    throw std::logic_error("unreachable");
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s = "circode";
    for (const auto& a : args) s += " " + a;
    return s;
}

std::vector<double> parse_soft(const std::string& text) {
    std::vector<double> y;
    std::string cell;
    std::istringstream in(text);
    while (std::getline(in, cell, ',')) {
        cell = trim(cell);
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(cell, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (cell.empty() || used != cell.size()) throw UsageError("--osd-debug: '" + cell + "' is not a number");
        y.push_back(v);
    }
    return y;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app("Minimum-distance tools for double and triple circulant codes", "circode");
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Shared shared;

    // construct
    auto* construct = app.add_subcommand("construct", "print the generator matrix of a circulant code");
    CodeInput c_in;
    std::string c_out;
    c_in.add_to(construct, false);
    construct->add_option("--out", c_out, "write the matrix to this file");
    construct->add_flag("--json", shared.json, "machine-readable output");

    // distance
    auto* distance = app.add_subcommand("distance", "minimum distance of one code");
    CodeInput d_in;
    EstimatorFlags d_est;
    std::string method_name = "mim";
    std::string osd_debug, log_path;
    d_in.add_to(distance, true);
    d_est.add_to(distance);
    shared.add_to(distance, true);
    distance->add_option("--method", method_name, "brute, chen, circulant-exact, ga-msg, mim, mim-ga");
    distance->add_option("--osd-debug", osd_debug, "decode this comma-separated soft vector and dump the OSD trace");
    distance->add_option("--log", log_path, "append the run log line here instead of stderr");

    // search
    auto* search = app.add_subcommand("search", "search headers for good codes");
    std::string s_family = "dcc", s_algo = "ga", s_crossover = "two_point";
    HeaderSearchParams sp;
    std::optional<std::size_t> s_lb;
    std::vector<std::string> s_inject;
    std::size_t fitness_nb_test = sp.fitness_mim.nb_test;
    search->add_option("--family", s_family, "dcc, bdcc (random only) or tcc");
    search->add_option("--r", sp.r, "circulant size")->required();
    search->add_option("--algo", s_algo, "ga or random");
    search->add_option("--max", sp.max_draws, "random search: number of draws");
    search->add_option("--lb", s_lb, "lower bound gate (overrides the bounds table)");
    search->add_option("--population", sp.ga.population, "GA population N_i");
    search->add_option("--elite", sp.ga.elite, "GA elite N_e");
    search->add_option("--generations", sp.ga.generations, "GA generations");
    search->add_option("--p-c", sp.ga.p_crossover, "GA crossover probability");
    search->add_option("--p-m", sp.ga.p_mutation, "GA per-bit mutation probability");
    search->add_option("--crossover", s_crossover, "one_point, two_point, uniform");
    search->add_option("--tournament", sp.ga.tournament_size, "tournament size");
    search->add_option("--fitness-nb-test", fitness_nb_test, "MIM trials per fitness evaluation");
    search->add_option("--nb-test", sp.confirm_mim.nb_test, "MIM trials of the confirmation run");
    search->add_option("--osd-order", sp.confirm_mim.osd_order, "OSD order (fitness and confirmation)");
    search->add_option("--exact-cap", sp.exact_confirm_cap, "confirm by brute force when k is at most this");
    search->add_option("--inject", s_inject, "random search: header replacing the next draw")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    shared.add_to(search, true);

    // verify
    auto* verify = app.add_subcommand("verify", "check claimed minimum distances");
    CodeInput v_in;
    std::string v_file, v_budget = "exact";
    std::optional<std::size_t> v_claim;
    VerifyBudget vb;
    v_in.add_to(verify, false);
    verify->add_option("--file", v_file, "header file: family r header_a [header_b] claimed_d per line");
    verify->add_option("--claim", v_claim, "claimed distance");
    verify->add_option("--budget", v_budget, "exact or witness");
    verify->add_option("--max-work", vb.max_work, "exact search combination budget");
    verify->add_option("--k-cap", vb.brute_force_cap, "brute force up to this k");
    verify->add_option("--r-cap", vb.witness_r_cap, "witness mode: slice weight swept");
    verify->add_option("--mim-runs", vb.mim_runs, "MIM seeds tried for witnesses");
    verify->add_option("--nb-test", vb.mim.nb_test, "MIM trials per run");
    shared.add_to(verify, true);

    // bench
    auto* bench = app.add_subcommand("bench", "compare estimators on the same codes");
    std::vector<std::string> b_matrices;
    std::string b_methods = "mim,mim-ga";
    CodeInput b_in;
    EstimatorFlags b_est;
    b_in.add_to(bench, false);
    bench->add_option("--matrix", b_matrices, "generator matrix file (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    bench->add_option("--methods", b_methods, "comma-separated methods");
    b_est.add_to(bench);
    shared.add_to(bench, true);

    // --config anywhere: its keys go straight after the subcommand name.
    std::vector<std::string> args;
    std::vector<std::string> from_config;
    try {
        for (std::size_t i = 0; i < raw_args.size(); ++i) {
            const std::string& a = raw_args[i];
            if (a == "--config") {
                if (i + 1 == raw_args.size()) throw UsageError("--config needs a file");
                from_config = config_args(raw_args[++i]);
            } else if (a.rfind("--config=", 0) == 0) {
                from_config = config_args(a.substr(9));
            } else {
                args.push_back(a);
            }
        }
    } catch (const UsageError& e) {
        err << "circode: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!from_config.empty() && !args.empty()) args.insert(args.begin() + 1, from_config.begin(), from_config.end());

    std::vector<const char*> argv{"circode"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string command_line = join_args(raw_args);
    try {
        if (construct->parsed()) {
            const CodeSpec spec = c_in.spec();
            const BinaryMatrix G = build_generator(spec);
            std::ostringstream text;
            if (shared.json) {
                Json j = to_json(spec);
                Json rows = Json::array();
                for (std::size_t i = 0; i < G.rows(); ++i) rows.push_back(G.row(i).to_string());
                j["rows"] = rows;
                text << j.dump() << "\n";
            } else {
                write_matrix(text, G);
            }
            if (c_out.empty()) {
                out << text.str();
            } else {
                std::ofstream f(c_out);
                if (!(f << text.str())) throw std::runtime_error("cannot write " + c_out);
            }
            return kExitOk;
        }

        if (distance->parsed()) {
            d_in.check_single_source();
            if (!osd_debug.empty()) {
                const BinaryMatrix G = d_in.generator();
                const std::vector<double> y = parse_soft(osd_debug);
                OsdTrace trace;
                const OsdResult res = OsdDecoder(G).decode(y, d_est.mim.osd_order, &trace);
                Json j{{"reliability_order", trace.reliability_order},
                       {"mrb", trace.mrb},
                       {"codeword", res.codeword.to_string()},
                       {"weight", res.codeword.weight()},
                       {"score", res.score},
                       {"info_pattern_weight", res.info_pattern_weight},
                       {"candidates", res.candidates}};
                out << j.dump() << "\n";
                return kExitOk;
            }
            const Method m = parse_method(method_name);
            const std::uint64_t seed = randomized(m) ? shared.resolve_seed(err) : shared.seed.value_or(0);
            d_est.finish(seed, shared.threads);
            const auto t0 = std::chrono::steady_clock::now();
            const DistanceEstimate est = run_method(m, d_in, d_est, shared.threads);
            const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            Json j = to_json(est);
            if (randomized(m)) j["params"] = d_est.params(m);
            out << j.dump() << "\n";

            Json log{{"method", std::string(method_tag(m))}};
            log["seed"] = randomized(m) ? Json(seed) : Json(nullptr);
            log["params"] = d_est.params(m);
            log["d"] = j["d"];
            log["witness"] = j["witness"];
            log["work_units"] = est.work_units;
            log["wall_time"] = wall;
            if (log_path.empty()) {
                err << log.dump() << "\n";
            } else {
                std::ofstream lf(log_path, std::ios::app);
                lf << log.dump() << "\n";
            }
            return est.d ? kExitOk : kExitInconclusive;
        }

        if (search->parsed()) {
            sp.family = parse_family(s_family);
            sp.algo = parse_search_algo(s_algo);
            sp.ga.crossover = parse_crossover(s_crossover);
            sp.lb_override = s_lb;
            sp.fitness_mim.nb_test = fitness_nb_test;
            sp.fitness_mim.osd_order = sp.confirm_mim.osd_order;
            for (const auto& h : s_inject) sp.injected.push_back(BitVector::from_string(h));
            sp.seed = shared.resolve_seed(err);
            sp.threads = shared.threads;
            BoundsTable bounds;
            if (!shared.bounds.empty()) bounds = load_bounds(shared.bounds);
            std::unique_ptr<LedgerWriter> ledger;
            if (!shared.ledger.empty()) ledger = std::make_unique<LedgerWriter>(shared.ledger);
            const SearchOutcome outcome = header_search(sp, bounds, [&](const DiscoveredCode& code) {
                out << to_json(code).dump() << "\n";
                out.flush();
                if (ledger) ledger->append(ledger_record(code, command_line));
            });
            Json summary{{"summary",
                          {{"algo", std::string(search_algo_tag(sp.algo))},
                           {"evaluations", outcome.evaluations},
                           {"mim_runs", outcome.mim_runs},
                           {"candidates", outcome.candidates},
                           {"emitted", outcome.codes.size()},
                           {"seed", sp.seed}}}};
            out << summary.dump() << "\n";
            return kExitOk;
        }

        if (verify->parsed()) {
            if (v_budget == "exact") {
                vb.mode = BudgetMode::exact;
            } else if (v_budget == "witness") {
                vb.mode = BudgetMode::witness;
            } else {
                throw UsageError("--budget must be exact or witness");
            }
            std::vector<HeaderLine> lines;
            if (!v_file.empty()) {
                if (v_in.has_spec()) throw UsageError("give either --file or --family/--header, not both");
                lines = read_header_file(v_file);
                for (const auto& l : lines)
                    if (!l.claimed_d) throw UsageError(v_file + ": line " + std::to_string(l.line_number) + ": no claimed distance");
            } else {
                if (!v_claim) throw UsageError("--claim is required with --family/--header");
                lines.push_back({v_in.spec(), v_claim, 0});
            }
            vb.mim.seed = shared.resolve_seed(err);
            vb.threads = shared.threads;
            int worst = kExitOk;
            for (const auto& l : lines) {
                const VerifyResult res = verify_claim(l.spec, *l.claimed_d, vb);
                Json j = to_json(l.spec);
                if (l.line_number) j["line"] = l.line_number;
                j.update(to_json(res));
                j["seed"] = vb.mim.seed;
                out << j.dump() << "\n";
                if (res.verdict == Verdict::refuted) {
                    worst = kExitRefuted;
                } else if (res.verdict == Verdict::inconclusive && worst == kExitOk) {
                    worst = kExitInconclusive;
                }
            }
            return worst;
        }

        if (bench->parsed()) {
            std::vector<CodeInput> inputs;
            for (const auto& m : b_matrices) {
                CodeInput ci;
                ci.matrix = m;
                inputs.push_back(ci);
            }
            if (b_in.has_spec()) inputs.push_back(b_in);
            if (inputs.empty()) throw UsageError("bench needs --matrix files or --family/--header");
            std::vector<Method> methods;
            std::istringstream ms(b_methods);
            for (std::string tok; std::getline(ms, tok, ',');) methods.push_back(parse_method(trim(tok)));
            const std::uint64_t seed = shared.resolve_seed(err);
            b_est.finish(seed, shared.threads);

            if (!shared.json)
                out << std::left << std::setw(28) << "input" << std::setw(17) << "method" << std::right << std::setw(5)
                    << "d" << std::setw(16) << "work_units" << std::setw(11) << "wall_s" << "  seed\n";
            for (const auto& in : inputs) {
                std::optional<std::size_t> first_d;
                bool disagree = false;
                Json rows = Json::array();
                for (Method m : methods) {
                    const auto t0 = std::chrono::steady_clock::now();
                    const DistanceEstimate est = run_method(m, in, b_est, shared.threads);
                    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    if (est.d) {
                        if (first_d && *first_d != *est.d) disagree = true;
                        if (!first_d) first_d = est.d;
                    }
                    if (shared.json) {
                        Json row = to_json(est);
                        row["input"] = in.label();
                        row["wall_time"] = wall;
                        rows.push_back(row);
                    } else {
                        std::string label = in.label();
                        if (label.size() > 27) label = "..." + label.substr(label.size() - 24);
                        out << std::left << std::setw(28) << label << std::setw(17) << method_tag(m) << std::right
                            << std::setw(5) << (est.d ? std::to_string(*est.d) : "-") << std::setw(16) << est.work_units
                            << std::setw(11) << std::fixed << std::setprecision(3) << wall << "  " << seed << "\n";
                    }
                }
                if (shared.json) {
                    out << Json{{"input", in.label()}, {"rows", rows}, {"agree", !disagree}}.dump() << "\n";
                } else if (disagree) {
                    out << "  ! methods disagree on " << in.label() << "\n";
                }
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "circode: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {  // DimensionError, UnsupportedInput, bad params
        err << "circode: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {  // ParseError, unreadable files
        err << "circode: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace circode
