#include "circode/ledger.hpp"

#include <stdexcept>

namespace circode {

Json to_json(const DistanceEstimate& e) {
    Json j;
    j["d"] = e.d ? Json(*e.d) : Json(nullptr);
    j["exact"] = e.exact;
    j["method"] = std::string(method_tag(e.method));
    j["witness"] = e.witness ? Json(e.witness->to_string()) : Json(nullptr);
    j["work_units"] = e.work_units;
    if (e.seed) j["seed"] = *e.seed;
    if (!e.d) j["status"] = "inconclusive";
    return j;
}

Json to_json(const CodeSpec& s) {
    Json j;
    j["family"] = std::string(family_tag(s.family()));
    j["r"] = s.r();
    j["n"] = s.n();
    j["k"] = s.k();
    j["header_a"] = s.header_a().to_string();
    if (s.header_b()) j["header_b"] = s.header_b()->to_string();
    if (s.family() == Family::bordered_dcc) j["corner"] = s.border_corner();
    return j;
}

Json to_json(const MimParams& p) {
    return Json{{"d0", p.d0}, {"d1", p.d1}, {"nb_test", p.nb_test}, {"error_max", p.error_max}, {"osd_order", p.osd_order}};
}

Json to_json(const MimGaParams& p) {
    return Json{{"population", p.population},
                {"generations", p.generations},
                {"p_crossover", p.p_crossover},
                {"p_mutation", p.p_mutation},
                {"mutation_amplitude", p.mutation_amplitude},
                {"mutation_per_gene", p.mutation_per_gene},
                {"d0", p.d0},
                {"d1", p.d1},
                {"nb_error", p.nb_error},
                {"osd_order", p.osd_order}};
}

Json to_json(const GaMsgParams& p) {
    return Json{{"population", p.population},
                {"generations", p.generations},
                {"elite", p.elite},
                {"p_crossover", p.p_crossover},
                {"p_mutation", p.p_mutation},
                {"crossover", std::string(crossover_tag(p.crossover))}};
}

Json to_json(const VerifyResult& v) {
    Json j;
    j["verdict"] = std::string(verdict_tag(v.verdict));
    j["claimed_d"] = v.claimed_d;
    j["d_found"] = v.d_found ? Json(*v.d_found) : Json(nullptr);
    j["exact"] = v.exact;
    j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
    if (!v.note.empty()) j["note"] = v.note;
    Json ev = Json::array();
    for (const auto& e : v.evidence) ev.push_back(to_json(e));
    j["evidence"] = ev;
    return j;
}

Json to_json(const DiscoveredCode& c) {
    Json j = to_json(c.spec);
    j["d"] = c.estimate.d ? Json(*c.estimate.d) : Json(nullptr);
    j["estimate"] = to_json(c.estimate);
    j["fitness"] = c.fitness;
    j["lb"] = c.lb;
    j["ub"] = c.ub;
    j["verification"] = std::string(verification_tag(c.verification));
    j["master_seed"] = c.master_seed;
    j["timestamp"] = c.timestamp;
    return j;
}

CodeSpec spec_from_json(const Json& j) {
    const Family f = parse_family(j.at("family").get<std::string>());
    const auto r = j.at("r").get<std::size_t>();
    std::optional<Header> b;
    if (j.contains("header_b")) b = BitVector::from_string(j.at("header_b").get<std::string>());
    return CodeSpec::make(f, r, BitVector::from_string(j.at("header_a").get<std::string>()), b,
                          j.value("corner", false));
}

Json ledger_record(const DiscoveredCode& c, const std::string& command_line) {
    Json j = to_json(c);
    j["tool_version"] = kToolVersion;
    j["command_line"] = command_line;
    return j;
}

LedgerWriter::LedgerWriter(const std::string& path) : path_(path), out_(path, std::ios::app) {
    if (!out_) throw std::runtime_error("cannot open ledger " + path + " for appending");
}

void LedgerWriter::append(const Json& record) {
    const std::string line = record.dump() + "\n";
    std::lock_guard lock(mu_);
    out_ << line;
    out_.flush();
    if (!out_) throw std::runtime_error("write to ledger " + path_ + " failed");
}

std::vector<Json> read_ledger(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ledger " + path);
    std::vector<Json> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(Json::parse(line));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + ": line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace circode
