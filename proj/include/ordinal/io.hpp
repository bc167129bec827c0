#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ordinal/information.hpp"
#include "ordinal/lattice.hpp"
#include "ordinal/spacetime.hpp"
#include "ordinal/valuation.hpp"

namespace ordinal::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);

// {"elements": [...], "covers": [[lo, hi], ...]}
Poset poset_from_json(const Json& doc);
Json poset_to_json(const Poset& p);
Poset load_poset(const std::filesystem::path& path);

// One node per element labeled by id, one edge per cover, lower -> upper.
std::string to_dot(const Poset& p);

Json certificate_to_json(const LatticeCertificate& cert);
Json consistency_to_json(const ConsistencyReport& report);

enum class ValuationMode { Atoms, Total };

// {"poset": "<path>", "mode": "atoms"|"total", "values": {...}}. A bare
// object of numbers is read as the "values" map. Relative poset paths
// resolve against the document's directory.
struct ValuationDocument {
    std::optional<std::filesystem::path> poset;
    ValuationMode mode = ValuationMode::Atoms;
    std::map<std::string, double> values;
};

ValuationDocument valuation_document_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
ValuationDocument load_valuation_document(const std::filesystem::path& path);

Json rule_report_to_json(const RuleReport& report);
Json rule_report_to_json(const ExactRuleReport& report);
RuleReport rule_report_from_json(const Json& doc);

// One line per violation: "violation rule=<r> <role>=<id>... lhs=<v> rhs=<v> residual=<v>".
std::string violation_line(const std::string& rule, const RuleViolation& v);
// Inverse of violation_line; the rule name is returned through `rule`.
RuleViolation parse_violation_line(const std::string& line, std::string& rule);

// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

// {"probs": {"a": 0.5, ...}}
AtomDistribution distribution_from_json(const Json& doc);
Json relevance_to_json(const Partition& a, const Partition& b, const RelevanceReport& r);

// {"events": [{"id","t","x"}], "chains": [{"id","k","tick","origin":{"t","x"},"range":[lo,hi]}]}
// with rationals as "num/den" strings (plain integers are also accepted).
struct Scene {
    std::vector<Event> events;
    std::vector<ObserverChain> chains;

    const Event& event(const std::string& id) const;
    const ObserverChain& chain(const std::string& id) const;
};

Scene scene_from_json(const Json& doc);
Scene load_scene(const std::filesystem::path& path);
Json interval_to_json(const IntervalPair& ip);

}  // namespace ordinal::io
