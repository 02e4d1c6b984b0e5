// Python bindings: codes go in as header strings or lists of row strings, results come back
// as plain dicts (the same objects the CLI prints as JSON).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circode/circulant.hpp"
#include "circode/estimators.hpp"
#include "circode/exact_distance.hpp"
#include "circode/header_search.hpp"
#include "circode/ledger.hpp"
#include "circode/osd.hpp"
#include "circode/verify.hpp"

namespace py = pybind11;
using namespace circode;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

BinaryMatrix matrix_of(const std::vector<std::string>& rows) {
    if (rows.empty()) throw DimensionError("generator needs at least one row");
    return BinaryMatrix::from_strings(rows);
}

std::vector<std::string> rows_of(const BinaryMatrix& m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i).to_string());
    return out;
}

CodeSpec spec_of(const std::string& family, const std::string& a, const std::optional<std::string>& b, bool corner) {
    std::optional<BitVector> hb;
    if (b) hb = BitVector::from_string(*b);
    return CodeSpec::make(parse_family(family), a.size(), BitVector::from_string(a), hb, corner);
}

}  // namespace

PYBIND11_MODULE(_circode, m) {
    m.doc() = "Minimum distance of double and triple circulant codes";

    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("construct", [](const std::string& family, const std::string& header_a, std::optional<std::string> header_b, bool corner) {
        return rows_of(build_generator(spec_of(family, header_a, header_b, corner)));
    }, py::arg("family"), py::arg("header_a"), py::arg("header_b") = py::none(), py::arg("corner") = false,
       "Generator matrix rows of a dcc, bdcc or tcc.");

    m.def("canonical_rotation", [](const std::string& family, const std::string& header_a, std::optional<std::string> header_b) {
        return to_py(to_json(canonical_rotation(spec_of(family, header_a, header_b, false))));
    }, py::arg("family"), py::arg("header_a"), py::arg("header_b") = py::none());

    m.def("encode", [](const std::vector<std::string>& rows, const std::string& message) {
        return encode(matrix_of(rows), BitVector::from_string(message)).to_string();
    }, py::arg("rows"), py::arg("message"));

    m.def("brute_force_distance", [](const std::vector<std::string>& rows, std::size_t k_cap, std::size_t threads) {
        return to_py(to_json(brute_force_distance(matrix_of(rows), {k_cap, threads})));
    }, py::arg("rows"), py::arg("k_cap") = kDefaultBruteForceCap, py::arg("threads") = 1);

    m.def("chen_distance", [](const std::vector<std::string>& rows, std::optional<std::size_t> r_cap, bool cyclic, std::size_t threads) {
        ChenOptions o;
        if (r_cap) o.r_cap = *r_cap;
        o.cyclic = cyclic;
        o.threads = threads;
        return to_py(to_json(chen_distance(matrix_of(rows), o)));
    }, py::arg("rows"), py::arg("r_cap") = py::none(), py::arg("cyclic") = false, py::arg("threads") = 1,
       "Slice sweep over a systematic generator [I | M].");

    m.def("circulant_exact_distance", [](const std::string& family, const std::string& header_a, std::optional<std::string> header_b,
                                         std::optional<std::uint64_t> max_work, std::size_t threads) {
        CirculantExactOptions o;
        if (max_work) o.max_work = *max_work;
        o.threads = threads;
        return to_py(to_json(circulant_exact_distance(spec_of(family, header_a, header_b, false), o)));
    }, py::arg("family"), py::arg("header_a"), py::arg("header_b") = py::none(), py::arg("max_work") = py::none(),
       py::arg("threads") = 1);

    m.def("mim_estimate", [](const std::vector<std::string>& rows, std::uint64_t seed, std::size_t nb_test, std::size_t d0,
                             std::size_t d1, std::size_t error_max, std::size_t osd_order, std::size_t threads) {
        MimParams p;
        p.seed = seed;
        p.nb_test = nb_test;
        p.d0 = d0;
        p.d1 = d1;
        p.error_max = error_max;
        p.osd_order = osd_order;
        p.threads = threads;
        return to_py(to_json(mim_estimate(matrix_of(rows), p)));
    }, py::arg("rows"), py::arg("seed") = 0, py::arg("nb_test") = MimParams{}.nb_test, py::arg("d0") = 1, py::arg("d1") = 0,
       py::arg("error_max") = 0, py::arg("osd_order") = 2, py::arg("threads") = 1);

    m.def("mim_ga_estimate", [](const std::vector<std::string>& rows, std::uint64_t seed, std::size_t population,
                                std::size_t generations, std::size_t nb_error, std::size_t osd_order, std::size_t threads) {
        MimGaParams p;
        p.seed = seed;
        p.population = population;
        p.generations = generations;
        p.nb_error = nb_error;
        p.osd_order = osd_order;
        p.threads = threads;
        return to_py(to_json(mim_ga_estimate(matrix_of(rows), p)));
    }, py::arg("rows"), py::arg("seed") = 0, py::arg("population") = MimGaParams{}.population,
       py::arg("generations") = MimGaParams{}.generations, py::arg("nb_error") = MimGaParams{}.nb_error,
       py::arg("osd_order") = 2, py::arg("threads") = 1);

    m.def("ga_message_distance", [](const std::vector<std::string>& rows, std::uint64_t seed, std::size_t population,
                                    std::size_t generations, std::size_t elite, const std::string& crossover, std::size_t threads) {
        GaMsgParams p;
        p.seed = seed;
        p.population = population;
        p.generations = generations;
        p.elite = elite;
        p.crossover = parse_crossover(crossover);
        p.threads = threads;
        return to_py(to_json(ga_message_distance(matrix_of(rows), p)));
    }, py::arg("rows"), py::arg("seed") = 0, py::arg("population") = GaMsgParams{}.population,
       py::arg("generations") = GaMsgParams{}.generations, py::arg("elite") = GaMsgParams{}.elite,
       py::arg("crossover") = "two_point", py::arg("threads") = 1);

    m.def("osd_decode", [](const std::vector<std::string>& rows, const std::vector<double>& y, std::size_t order) {
        OsdTrace trace;
        const OsdResult r = OsdDecoder(matrix_of(rows)).decode(y, order, &trace);
        py::dict d;
        d["codeword"] = r.codeword.to_string();
        d["score"] = r.score;
        d["candidates"] = r.candidates;
        d["info_pattern_weight"] = r.info_pattern_weight;
        d["mrb"] = trace.mrb;
        d["reliability_order"] = trace.reliability_order;
        return d;
    }, py::arg("rows"), py::arg("y"), py::arg("order") = 2);

    m.def("verify_claim", [](const std::string& family, const std::string& header_a, std::optional<std::string> header_b,
                             std::size_t claimed_d, const std::string& budget, std::uint64_t seed, std::size_t mim_runs,
                             std::size_t threads) {
        VerifyBudget b;
        if (budget == "witness") {
            b.mode = BudgetMode::witness;
        } else if (budget != "exact") {
            throw std::invalid_argument("budget must be 'exact' or 'witness'");
        }
        b.mim.seed = seed;
        b.mim_runs = mim_runs;
        b.threads = threads;
        return to_py(to_json(verify_claim(spec_of(family, header_a, header_b, false), claimed_d, b)));
    }, py::arg("family"), py::arg("header_a"), py::arg("header_b") = py::none(), py::arg("claimed_d") = 0,
       py::arg("budget") = "exact", py::arg("seed") = 0, py::arg("mim_runs") = 3, py::arg("threads") = 1);

    m.def("load_bounds", [](const std::string& path, std::size_t n, std::size_t k) -> std::optional<std::pair<std::size_t, std::size_t>> {
        const auto b = load_bounds(path).find(n, k);
        if (!b) return std::nullopt;
        return std::pair{b->lb, b->ub};
    }, py::arg("path"), py::arg("n"), py::arg("k"), "(lb, ub) for (n, k), or None.");

    m.def("search", [](const std::string& family, std::size_t r, const std::string& algo, std::optional<std::size_t> lb,
                       std::optional<std::string> bounds, std::uint64_t seed, std::size_t max_draws, std::size_t population,
                       std::size_t elite, std::size_t generations, std::size_t threads) {
        HeaderSearchParams p;
        p.family = parse_family(family);
        p.r = r;
        p.algo = parse_search_algo(algo);
        p.lb_override = lb;
        p.seed = seed;
        p.max_draws = max_draws;
        p.ga.population = population;
        p.ga.elite = elite;
        p.ga.generations = generations;
        p.threads = threads;
        const BoundsTable table = bounds ? load_bounds(*bounds) : BoundsTable{};
        Json codes = Json::array();
        for (const auto& c : header_search(p, table).codes) codes.push_back(to_json(c));
        return to_py(codes);
    }, py::arg("family"), py::arg("r"), py::arg("algo") = "random", py::arg("lb") = py::none(), py::arg("bounds") = py::none(),
       py::arg("seed") = 0, py::arg("max_draws") = 1000, py::arg("population") = HeaderGaParams{}.population,
       py::arg("elite") = HeaderGaParams{}.elite, py::arg("generations") = HeaderGaParams{}.generations, py::arg("threads") = 1);

    m.attr("__version__") = kToolVersion;
}
