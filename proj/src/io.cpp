#include "ordinal/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ordinal/error.hpp"

namespace ordinal::io {

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& require(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) bad_input(std::string("missing field '") + key + "'");
    return doc.at(key);
}

std::string require_string(const Json& v, const std::string& what) {
    if (!v.is_string()) bad_input(what + " must be a string");
    return v.get<std::string>();
}

Rational rational_field(const Json& v, const std::string& what) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    bad_input(what + " must be a rational string such as \"3/2\"");
}

std::string quoted_dot(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

template <class T>
Json number_json(const T& v) {
    if constexpr (std::is_same_v<T, double>) return v;
    else return to_string(v);
}

template <class T>
Json report_json(const BasicRuleReport<T>& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        Json instance = Json::object();
        for (const auto& [role, id] : v.instance) instance[role] = id;
        violations.push_back({{"instance", instance},
                              {"lhs", number_json(v.lhs)},
                              {"rhs", number_json(v.rhs)},
                              {"residual", number_json(v.residual)}});
    }
    return {{"rule", report.rule},
            {"checked", report.checked},
            {"skipped", report.skipped},
            {"violations", violations},
            {"tolerance", number_json(report.tolerance)},
            {"max_residual", number_json(report.max_residual)},
            {"pass", report.passed()}};
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) bad_input("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        bad_input("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

Poset poset_from_json(const Json& doc) {
    const Json& elements = require(doc, "elements");
    const Json& covers = require(doc, "covers");
    if (!elements.is_array() || !covers.is_array()) bad_input("'elements' and 'covers' must be arrays");
    std::vector<ElementId> ids;
    for (const auto& e : elements) ids.push_back(require_string(e, "element id"));
    std::vector<Cover> pairs;
    for (const auto& c : covers) {
        if (!c.is_array() || c.size() != 2) bad_input("each cover must be a [lower, upper] pair");
        pairs.emplace_back(require_string(c[0], "cover endpoint"), require_string(c[1], "cover endpoint"));
    }
    return Poset::build(std::move(ids), pairs);
}

Json poset_to_json(const Poset& p) {
    Json covers = Json::array();
    for (const auto& [lo, hi] : p.cover_ids()) covers.push_back({lo, hi});
    return {{"elements", p.ids()}, {"covers", covers}};
}

Poset load_poset(const std::filesystem::path& path) { return poset_from_json(read_json_file(path)); }

std::string to_dot(const Poset& p) {
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n";
    for (const auto& id : p.ids()) out << "  " << quoted_dot(id) << " [label=" << quoted_dot(id) << "];\n";
    for (const auto& [lo, hi] : p.cover_ids()) out << "  " << quoted_dot(lo) << " -> " << quoted_dot(hi) << ";\n";
    out << "}\n";
    return out.str();
}

Json certificate_to_json(const LatticeCertificate& cert) {
    Json out = {{"is_lattice", cert.is_lattice}, {"witness", nullptr}, {"failure", nullptr}};
    if (cert.witness) out["witness"] = {cert.witness->first, cert.witness->second};
    if (cert.failure) out["failure"] = *cert.failure == BoundFailure::Join ? "join" : "meet";
    return out;
}

Json consistency_to_json(const ConsistencyReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back({{"x", v.x}, {"y", v.y}, {"reason", v.reason}});
    return {{"checked", report.checked}, {"violations", violations}, {"pass", report.passed()}};
}

ValuationDocument valuation_document_from_json(const Json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) bad_input("valuation document must be an object");
    ValuationDocument out;
    const Json* values = &doc;
    if (doc.contains("values")) {
        values = &doc.at("values");
        if (doc.contains("poset")) {
            std::filesystem::path p = require_string(doc.at("poset"), "'poset'");
            out.poset = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
        }
        if (doc.contains("mode")) {
            const auto mode = require_string(doc.at("mode"), "'mode'");
            if (mode == "atoms") out.mode = ValuationMode::Atoms;
            else if (mode == "total") out.mode = ValuationMode::Total;
            else bad_input("'mode' must be \"atoms\" or \"total\"");
        }
    }
    if (!values->is_object()) bad_input("'values' must be an object");
    for (const auto& [key, v] : values->items()) {
        if (!v.is_number()) bad_input("value of '" + key + "' must be a number");
        out.values.emplace(key, v.get<double>());
    }
    return out;
}

ValuationDocument load_valuation_document(const std::filesystem::path& path) {
    return valuation_document_from_json(read_json_file(path), path.parent_path());
}

Json rule_report_to_json(const RuleReport& report) { return report_json(report); }
Json rule_report_to_json(const ExactRuleReport& report) { return report_json(report); }

RuleReport rule_report_from_json(const Json& doc) {
    RuleReport r;
    r.rule = require(doc, "rule").get<std::string>();
    r.checked = require(doc, "checked").get<std::size_t>();
    r.skipped = require(doc, "skipped").get<std::size_t>();
    r.tolerance = require(doc, "tolerance").get<double>();
    r.max_residual = require(doc, "max_residual").get<double>();
    for (const auto& v : require(doc, "violations")) {
        RuleViolation out;
        for (const auto& [role, id] : require(v, "instance").items()) out.instance.emplace_back(role, id.get<std::string>());
        out.lhs = require(v, "lhs").get<double>();
        out.rhs = require(v, "rhs").get<double>();
        out.residual = require(v, "residual").get<double>();
        r.violations.push_back(std::move(out));
    }
    return r;
}

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string violation_line(const std::string& rule, const RuleViolation& v) {
    std::string out = "violation rule=" + rule;
    for (const auto& [role, id] : v.instance) out += " " + role + "=" + id;
    out += " lhs=" + format_double(v.lhs) + " rhs=" + format_double(v.rhs) + " residual=" + format_double(v.residual);
    return out;
}

RuleViolation parse_violation_line(const std::string& line, std::string& rule) {
    std::istringstream in(line);
    std::string word;
    in >> word;
    if (word != "violation") bad_input("not a violation line");
    RuleViolation v;
    auto number = [](const std::string& text) {
        double d = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
        if (ec != std::errc() || ptr != text.data() + text.size()) bad_input("bad number '" + text + "'");
        return d;
    };
    while (in >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) bad_input("malformed field '" + word + "'");
        const std::string key = word.substr(0, eq);
        const std::string value = word.substr(eq + 1);
        if (key == "rule") rule = value;
        else if (key == "lhs") v.lhs = number(value);
        else if (key == "rhs") v.rhs = number(value);
        else if (key == "residual") v.residual = number(value);
        else v.instance.emplace_back(key, value);
    }
    return v;
}

AtomDistribution distribution_from_json(const Json& doc) {
    const Json& probs = require(doc, "probs");
    if (!probs.is_object()) bad_input("'probs' must be an object");
    std::map<Atom, double> out;
    for (const auto& [atom, p] : probs.items()) {
        if (!p.is_number()) bad_input("probability of '" + atom + "' must be a number");
        out.emplace(atom, p.get<double>());
    }
    return AtomDistribution(std::move(out));
}

Json relevance_to_json(const Partition& a, const Partition& b, const RelevanceReport& r) {
    return {{"a", a.to_string()},
            {"b", b.to_string()},
            {"joint", common_refinement(a, b).to_string()},
            {"h_a", r.h_a},
            {"h_b", r.h_b},
            {"h_joint", r.h_joint},
            {"mutual_information", r.mutual}};
}

const Event& Scene::event(const std::string& id) const {
    for (const auto& e : events)
        if (e.id == id) return e;
    throw Error(ErrorCode::UnknownElement, "no event '" + id + "' in scene");
}

const ObserverChain& Scene::chain(const std::string& id) const {
    for (const auto& c : chains)
        if (c.id() == id) return c;
    throw Error(ErrorCode::UnknownElement, "no chain '" + id + "' in scene");
}

Scene scene_from_json(const Json& doc) {
    Scene scene;
    for (const auto& e : require(doc, "events")) {
        const auto id = require_string(require(e, "id"), "event id");
        scene.events.push_back({id, rational_field(require(e, "t"), "event t"), rational_field(require(e, "x"), "event x")});
    }
    if (doc.contains("chains")) {
        for (const auto& c : doc.at("chains")) {
            const auto id = require_string(require(c, "id"), "chain id");
            const Json& origin = require(c, "origin");
            const Json& range = require(c, "range");
            if (!range.is_array() || range.size() != 2 || !range[0].is_number_integer() || !range[1].is_number_integer())
                bad_input("chain range must be [lo, hi] integers");
            Event o{id + ".origin", rational_field(require(origin, "t"), "origin t"),
                    rational_field(require(origin, "x"), "origin x")};
            const Rational k = c.contains("k") ? rational_field(c.at("k"), "chain k") : Rational(1);
            const Rational tick = c.contains("tick") ? rational_field(c.at("tick"), "chain tick") : Rational(1);
            scene.chains.emplace_back(id, std::move(o), k, tick,
                                      IndexRange{range[0].get<std::int64_t>(), range[1].get<std::int64_t>()});
        }
    }
    return scene;
}

Scene load_scene(const std::filesystem::path& path) { return scene_from_json(read_json_file(path)); }

Json interval_to_json(const IntervalPair& ip) {
    return {{"dp", to_string(ip.dp)},
            {"dq", to_string(ip.dq)},
            {"dt", to_string(ip.dt())},
            {"dx", to_string(ip.dx())},
            {"ds2", to_string(ip.ds2())}};
}

}  // namespace ordinal::io
