#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "goodies/analysis.hpp"
#include "goodies/arith.hpp"
#include "goodies/bounds.hpp"
#include "goodies/counting.hpp"
#include "goodies/exact.hpp"
#include "goodies/k2.hpp"
#include "goodies/simulate.hpp"

namespace goodies {

// nlohmann::json serializes object keys in sorted order, which is exactly
// the deterministic-output guarantee the CLI makes.
using Json = nlohmann::json;

// Effective settings of one invocation, embedded in every report so a file
// is reproducible from its own header.
struct RunConfig {
    std::string command;
    std::string schema = "goodies-report-1";
    std::uint64_t seed = 0;
    std::string seed_source = "default";  // "default" | "env" | "flag"
    int threads = 1;
    std::uint64_t runs = 0;               // 0 when not applicable
    std::map<std::string, std::string> params;
};

std::string fmt_g(double v);                  // shortest round-trip-ish, 12 significant digits
std::string rational_string(const Rational&); // "p/q", or "p" when integral

Json to_json(const RunConfig&);
Json to_json(const Value&);
Json to_json(const SimStats&);
Json to_json(const Violation&);
Json to_json(const SweepReport&);
Json to_json(const JointDistribution&);
Json to_json(const BoundsReport&);
Json to_json(const K2Decomposition&);

// Standard envelope: {"config": ..., "results": ..., "violations": [...]}.
Json make_envelope(const RunConfig& config, Json results, Json violations);

// Rectangular CSV payload; write_csv escapes cells and prepends the config
// as a single "# config: {...}" comment line before the header.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const RunConfig& config, const CsvTable& table);
void write_json(std::ostream& os, const Json& doc);

}  // namespace goodies
