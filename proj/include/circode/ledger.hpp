#pragma once

// JSON forms of the result types and the append-only discoveries ledger (JSON lines).

#include <fstream>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "circode/circulant.hpp"
#include "circode/estimate.hpp"
#include "circode/estimators.hpp"
#include "circode/header_search.hpp"
#include "circode/verify.hpp"

namespace circode {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// {"d", "exact", "method", "witness", "work_units"} plus "seed" when the method is randomised;
/// an inconclusive estimate has d = null and status "inconclusive".
Json to_json(const DistanceEstimate& e);
Json to_json(const CodeSpec& s);
Json to_json(const MimParams& p);
Json to_json(const MimGaParams& p);
Json to_json(const GaMsgParams& p);
Json to_json(const VerifyResult& v);
/// DiscoveredCode fields flattened (spec fields at top level).
Json to_json(const DiscoveredCode& c);

/// Rebuilds the spec of a ledger record or to_json(CodeSpec) object.
CodeSpec spec_from_json(const Json& j);

/// A DiscoveredCode record plus tool version and command line.
Json ledger_record(const DiscoveredCode& c, const std::string& command_line);

/// Serialises appends from any thread; each record is one flushed line.
class LedgerWriter {
public:
    explicit LedgerWriter(const std::string& path);
    void append(const Json& record);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
    std::ofstream out_;
    std::mutex mu_;
};

/// Parses every non-blank line; throws ParseError naming the bad line.
std::vector<Json> read_ledger(const std::string& path);

}  // namespace circode
