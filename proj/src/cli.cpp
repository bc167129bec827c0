#include "ordinal/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ordinal/error.hpp"
#include "ordinal/generators.hpp"
#include "ordinal/io.hpp"

namespace ordinal::cli {

namespace {

using io::Json;

struct Result {
    Json json;
    std::string text;
    int code = kExitPass;
};

std::string join_words(const std::vector<std::string>& words, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += sep;
        out += words[i];
    }
    return out;
}

// ---- poset ---------------------------------------------------------------

Result poset_check(const std::string& input) {
    const Poset p = io::load_poset(input);
    const auto cert = is_lattice(p);
    Result r;
    r.json = {{"elements", p.size()}, {"covers", p.covers().size()}, {"lattice", io::certificate_to_json(cert)}};
    std::ostringstream text;
    text << "elements " << p.size() << "\ncovers " << p.covers().size() << "\n";
    bool pass = cert.is_lattice;
    if (cert.is_lattice) {
        const auto consistency = verify_consistency_relations(p);
        const auto ji = join_irreducibles(p);
        const auto mi = meet_irreducibles(p);
        r.json["consistency"] = io::consistency_to_json(consistency);
        r.json["join_irreducibles"] = ji;
        r.json["meet_irreducibles"] = mi;
        pass = consistency.passed();
        text << "lattice yes\n"
             << "consistency checked=" << consistency.checked << " violations=" << consistency.violations.size() << "\n";
        for (const auto& v : consistency.violations) text << "violation x=" << v.x << " y=" << v.y << " " << v.reason << "\n";
        text << "join-irreducibles " << join_words(ji) << "\nmeet-irreducibles " << join_words(mi) << "\n";
    } else {
        text << "lattice no\nwitness " << cert.witness->first << " " << cert.witness->second << " (no unique "
             << (*cert.failure == BoundFailure::Join ? "join" : "meet") << ")\n";
    }
    r.json["pass"] = pass;
    text << (pass ? "PASS" : "FAIL") << "\n";
    r.text = text.str();
    r.code = pass ? kExitPass : kExitViolations;
    return r;
}

Result poset_document(const Poset& p) {
    Result r;
    r.json = io::poset_to_json(p);
    std::ostringstream text;
    for (const auto& id : p.ids()) text << "element " << id << "\n";
    for (const auto& [lo, hi] : p.cover_ids()) text << "cover " << lo << " " << hi << "\n";
    r.text = text.str();
    return r;
}

// ---- rules ---------------------------------------------------------------

struct AuditRequest {
    std::string poset;
    std::string atoms;
    std::string values;
    std::vector<std::string> rules{"sum", "monotone", "bisum", "chain", "diamond", "context"};
    double tol = kDefaultTolerance;
};

Result rules_audit(const AuditRequest& req) {
    if (req.atoms.empty() == req.values.empty()) throw Error(ErrorCode::InvalidInput, "give exactly one of --atoms or --values");
    auto doc = io::load_valuation_document(req.atoms.empty() ? req.values : req.atoms);
    doc.mode = req.atoms.empty() ? io::ValuationMode::Total : io::ValuationMode::Atoms;
    std::filesystem::path poset_path;
    if (!req.poset.empty()) poset_path = req.poset;
    else if (doc.poset) poset_path = *doc.poset;
    else throw Error(ErrorCode::InvalidInput, "no poset: pass --poset or set \"poset\" in the valuation file");

    auto lattice = std::make_shared<const Lattice>(io::load_poset(poset_path));
    const Valuation v = doc.mode == io::ValuationMode::Atoms ? derive_valuation_from_atoms(lattice, doc.values)
                                                             : Valuation::from_map(lattice, doc.values);
    std::optional<BiValuation> w;
    auto bival = [&]() -> const BiValuation& {
        if (!w) w = bivaluation_from_valuation(v);
        return *w;
    };

    Result r;
    Json reports = Json::array();
    std::ostringstream text;
    bool pass = true;
    for (const auto& rule : req.rules) {
        RuleReport report;
        if (rule == "sum") report = check_sum_rule(v, req.tol);
        else if (rule == "monotone") report = check_monotone(v, req.tol);
        else if (rule == "bisum") report = check_bivaluation_sum_rule(bival(), req.tol);
        else if (rule == "chain") report = check_chain_rule(bival(), req.tol);
        else if (rule == "diamond") report = check_diamond_lemma(bival(), req.tol);
        else report = check_context_product_rule(bival(), req.tol);
        pass = pass && report.passed();
        reports.push_back(io::rule_report_to_json(report));
        text << std::left << std::setw(9) << rule << " checked=" << report.checked << " skipped=" << report.skipped
             << " violations=" << report.violations.size() << " max_residual=" << io::format_double(report.max_residual)
             << " " << (report.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& violation : report.violations) text << io::violation_line(rule, violation) << "\n";
    }
    r.json = {{"tolerance", req.tol}, {"reports", reports}, {"pass", pass}};
    r.text = text.str();
    r.code = pass ? kExitPass : kExitViolations;
    return r;
}

// ---- info ----------------------------------------------------------------

Result info_entropy(const std::string& dist_path, const std::string& literal) {
    const auto dist = io::distribution_from_json(io::read_json_file(dist_path));
    const auto part = Partition::parse(literal);
    const double h = partition_entropy(part, dist);
    Result r;
    r.json = {{"partition", part.to_string()}, {"entropy", h}};
    r.text = "partition " + part.to_string() + "\nentropy " + io::format_double(h) + "\n";
    return r;
}

Result info_mutual(const std::string& dist_path, const std::string& a_literal, const std::string& b_literal) {
    const auto dist = io::distribution_from_json(io::read_json_file(dist_path));
    const auto a = Partition::parse(a_literal);
    const auto b = Partition::parse(b_literal);
    const auto rel = mutual_information(a, b, dist);
    const bool sane = rel.h_a >= 0 && rel.h_b >= 0 && rel.h_joint >= 0 && rel.mutual >= -1e-9 &&
                      rel.h_joint <= rel.h_a + rel.h_b + 1e-9;
    Result r;
    r.json = io::relevance_to_json(a, b, rel);
    r.json["pass"] = sane;
    std::ostringstream text;
    text << "a " << a.to_string() << "\nb " << b.to_string() << "\njoint " << common_refinement(a, b).to_string()
         << "\nH(A) " << io::format_double(rel.h_a) << "\nH(B) " << io::format_double(rel.h_b) << "\nH(A,B) "
         << io::format_double(rel.h_joint) << "\nI(A;B) " << io::format_double(rel.mutual) << "\n";
    r.text = text.str();
    r.code = sane ? kExitPass : kExitViolations;
    return r;
}

// ---- spacetime -----------------------------------------------------------

std::vector<std::string> or_all_events(const io::Scene& scene, std::vector<std::string> ids) {
    if (!ids.empty()) return ids;
    for (const auto& e : scene.events) ids.push_back(e.id);
    return ids;
}

Result spacetime_project(const std::string& scene_path, const std::vector<std::string>& event_ids,
                         std::vector<std::string> chain_ids) {
    const auto scene = io::load_scene(scene_path);
    if (chain_ids.empty())
        for (const auto& c : scene.chains) chain_ids.push_back(c.id());
    Result r;
    Json rows = Json::array();
    std::ostringstream text;
    text << std::left << std::setw(10) << "event";
    for (const auto& c : chain_ids) text << std::setw(10) << c;
    text << "\n";
    for (const auto& eid : or_all_events(scene, event_ids)) {
        const Event& e = scene.event(eid);
        Json coords = Json::object();
        text << std::setw(10) << eid;
        for (const auto& cid : chain_ids) {
            try {
                const auto i = project(e, scene.chain(cid));
                coords[cid] = i;
                text << std::setw(10) << i;
            } catch (const Error& ex) {
                if (ex.code() != ErrorCode::NotQuantifiable) throw;
                coords[cid] = nullptr;
                text << std::setw(10) << "-";
                r.code = kExitViolations;
            }
        }
        text << "\n";
        rows.push_back({{"event", eid}, {"coordinates", coords}});
    }
    r.json = {{"rows", rows}, {"pass", r.code == kExitPass}};
    r.text = text.str();
    return r;
}

Result spacetime_sync(const std::string& scene_path, const std::string& p_id, const std::string& q_id,
                      const std::vector<std::int64_t>& range, const std::vector<std::int64_t>& q_range) {
    const auto scene = io::load_scene(scene_path);
    const IndexRange pr{range.at(0), range.at(1)};
    const IndexRange qr = q_range.empty() ? pr : IndexRange{q_range.at(0), q_range.at(1)};
    if (pr.lo > pr.hi || qr.lo > qr.hi) throw Error(ErrorCode::InvalidInput, "empty index range");
    const bool synced = check_synchronized(scene.chain(p_id), scene.chain(q_id), pr, qr);
    Result r;
    r.json = {{"p", p_id}, {"q", q_id}, {"range", {pr.lo, pr.hi}}, {"q_range", {qr.lo, qr.hi}}, {"synchronized", synced}};
    r.text = "synchronized " + std::string(synced ? "yes" : "no") + "\n";
    r.code = synced ? kExitPass : kExitViolations;
    return r;
}

struct Frame {
    std::string name;
    const ObserverChain* p;
    const ObserverChain* q;
};

Frame resolve_frame(const io::Scene& scene, const std::string& token) {
    const auto colon = token.find(':');
    if (colon != std::string::npos)
        return {token, &scene.chain(token.substr(0, colon)), &scene.chain(token.substr(colon + 1))};
    Rational k;
    if (token == "rest") k = 1;
    else if (token.rfind("k=", 0) == 0) k = parse_rational(token.substr(2));
    else throw Error(ErrorCode::InvalidInput, "frame '" + token + "' must be rest, k=<rational> or P:Q");
    std::vector<const ObserverChain*> found;
    for (const auto& c : scene.chains)
        if (c.k() == k) found.push_back(&c);
    if (found.size() != 2)
        throw Error(ErrorCode::InvalidInput, "frame '" + token + "' needs exactly two chains with k=" + to_string(k) +
                                                 ", scene has " + std::to_string(found.size()));
    return {token, found[0], found[1]};
}

Result spacetime_interval(const std::string& scene_path, const std::vector<std::string>& event_ids,
                          const std::vector<std::string>& frame_tokens) {
    const auto scene = io::load_scene(scene_path);
    if (event_ids.size() != 2) throw Error(ErrorCode::InvalidInput, "--events takes exactly two event ids");
    const Event& e1 = scene.event(event_ids[0]);
    const Event& e2 = scene.event(event_ids[1]);

    struct Row {
        Frame frame;
        IntervalPair ip;
        bool synchronized;
    };
    std::vector<Row> rows;
    for (const auto& token : frame_tokens) {
        Frame f = resolve_frame(scene, token);
        try {
            rows.push_back({f, interval_pair(e1, e2, *f.p, *f.q), true});
        } catch (const Error& ex) {
            if (ex.code() != ErrorCode::NotSynchronized) throw;
            rows.push_back({f, measure_interval(e1, e2, *f.p, *f.q), false});
        }
    }

    // Reference for the Lorentz relation: a synchronized rest pair, if present.
    const Row* rest = nullptr;
    for (const auto& row : rows)
        if (row.synchronized && row.frame.p->k() == 1 && row.frame.q->k() == 1) rest = &row;

    bool pass = true;
    Json out_rows = Json::array();
    std::ostringstream text;
    text << std::left << std::setw(10) << "frame" << std::setw(6) << "P" << std::setw(6) << "Q" << std::setw(6) << "sync"
         << std::setw(10) << "dp" << std::setw(10) << "dq" << std::setw(10) << "dt" << std::setw(10) << "dx"
         << std::setw(10) << "ds2" << "lorentz\n";
    for (const auto& row : rows) {
        Json j = {{"frame", row.frame.name}, {"p", row.frame.p->id()}, {"q", row.frame.q->id()},
                  {"synchronized", row.synchronized}};
        const Json measured = io::interval_to_json(row.ip);
        for (const auto& [key, value] : measured.items()) j[key] = value;
        std::string lorentz = "-";
        if (rest && row.frame.p->k() == row.frame.q->k()) {
            // A chain pair moving with velocity beta sees dt' = gamma (dt - beta dx), dx' = gamma (dx - beta dt).
            const Rational beta = row.frame.p->beta();
            const Rational gamma = row.frame.p->gamma();
            const IntervalPair& r0 = rest->ip;
            const bool ok = row.ip.dt() == gamma * (r0.dt() - beta * r0.dx()) &&
                            row.ip.dx() == gamma * (r0.dx() - beta * r0.dt());
            j["beta"] = to_string(beta);
            j["lorentz_consistent"] = ok;
            lorentz = ok ? "yes" : "no";
            pass = pass && ok;
        }
        pass = pass && row.synchronized && row.ip.ds2() == rows.front().ip.ds2();
        out_rows.push_back(j);
        text << std::setw(10) << row.frame.name << std::setw(6) << row.frame.p->id() << std::setw(6) << row.frame.q->id()
             << std::setw(6) << (row.synchronized ? "yes" : "no") << std::setw(10) << to_string(row.ip.dp)
             << std::setw(10) << to_string(row.ip.dq) << std::setw(10) << to_string(row.ip.dt()) << std::setw(10)
             << to_string(row.ip.dx()) << std::setw(10) << to_string(row.ip.ds2()) << lorentz << "\n";
    }
    text << "invariant " << (pass ? "yes" : "no") << "\n";
    Result r;
    r.json = {{"events", event_ids}, {"frames", out_rows}, {"invariant", pass}};
    r.text = text.str();
    r.code = pass ? kExitPass : kExitViolations;
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite posets, lattice valuations, partition entropy and causal intervals", "ordinal"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string format = "json";
    std::string output;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output, "write the report here instead of standard output");

    std::function<Result()> action;

    // poset
    auto* poset = app.add_subcommand("poset", "build, check and export posets")->require_subcommand(1);
    std::string poset_input;
    auto* check = poset->add_subcommand("check", "lattice certificate and consistency relations");
    check->add_option("--input", poset_input)->required();
    check->callback([&] { action = [&] { return poset_check(poset_input); }; });
    auto* dot = poset->add_subcommand("export-dot", "Graphviz rendering of the cover relation");
    dot->add_option("--input", poset_input)->required();
    dot->callback([&] {
        action = [&] {
            Result r;
            r.text = io::to_dot(io::load_poset(poset_input));
            r.json = r.text;
            return r;
        };
    });

    auto* gen = poset->add_subcommand("gen", "emit a generated poset as JSON")->require_subcommand(1);
    std::vector<std::string> atoms;
    std::uint64_t gen_n = 0;
    auto* gen_bool = gen->add_subcommand("boolean", "subsets ordered by inclusion");
    gen_bool->add_option("--atoms", atoms)->delimiter(',')->required();
    gen_bool->callback([&] { action = [&] { return poset_document(boolean_lattice(atoms)); }; });
    auto* gen_part = gen->add_subcommand("partition", "partitions ordered by refinement");
    gen_part->add_option("--atoms", atoms)->delimiter(',')->required();
    gen_part->callback([&] { action = [&] { return poset_document(partition_lattice(atoms)); }; });
    auto* gen_div = gen->add_subcommand("divisors", "divisors of n ordered by divides");
    gen_div->add_option("--n", gen_n)->required();
    gen_div->callback([&] { action = [&] { return poset_document(divisor_lattice(gen_n)); }; });
    auto* gen_chain = gen->add_subcommand("chain", "0 <= 1 <= ... <= n-1");
    gen_chain->add_option("--n", gen_n)->required();
    gen_chain->callback([&] { action = [&] { return poset_document(integer_chain(gen_n)); }; });
    auto* gen_grid = gen->add_subcommand("grid", "n x n integer events under the causal order");
    gen_grid->add_option("--n", gen_n)->required();
    gen_grid->callback([&] { action = [&] { return poset_document(causal_grid_poset(gen_n)); }; });

    // rules
    auto* rules = app.add_subcommand("rules", "valuation rule audits")->require_subcommand(1);
    AuditRequest audit;
    auto* audit_cmd = rules->add_subcommand("audit", "audit a valuation and its conditional bi-valuation");
    audit_cmd->add_option("--poset", audit.poset, "lattice JSON");
    audit_cmd->add_option("--atoms", audit.atoms, "atom weights of a Boolean lattice");
    audit_cmd->add_option("--values", audit.values, "a value for every element");
    audit_cmd->add_option("--rules", audit.rules)
        ->delimiter(',')
        ->check(CLI::IsMember({"sum", "monotone", "bisum", "chain", "diamond", "context"}));
    audit_cmd->add_option("--tol", audit.tol)->check(CLI::NonNegativeNumber);
    audit_cmd->callback([&] { action = [&] { return rules_audit(audit); }; });

    // info
    auto* info = app.add_subcommand("info", "entropy of partitions")->require_subcommand(1);
    std::string dist_path, part_a, part_b;
    auto* entropy = info->add_subcommand("entropy", "Shannon entropy of a partition");
    entropy->add_option("--dist", dist_path)->required();
    entropy->add_option("--partition", part_a)->required();
    entropy->callback([&] { action = [&] { return info_entropy(dist_path, part_a); }; });
    auto* mutual = info->add_subcommand("mutual", "mutual information of two partitions");
    mutual->add_option("--dist", dist_path)->required();
    mutual->add_option("--a", part_a)->required();
    mutual->add_option("--b", part_b)->required();
    mutual->callback([&] { action = [&] { return info_mutual(dist_path, part_a, part_b); }; });

    // spacetime
    auto* spacetime = app.add_subcommand("spacetime", "projections onto observer chains")->require_subcommand(1);
    std::string scene_path;
    std::vector<std::string> event_ids, chain_ids, frames{"rest"};
    std::string p_id, q_id;
    std::vector<std::int64_t> range, q_range;
    auto* proj = spacetime->add_subcommand("project", "chain indices of events");
    proj->add_option("--scene", scene_path)->required();
    proj->add_option("--events", event_ids)->delimiter(',');
    proj->add_option("--chains", chain_ids)->delimiter(',');
    proj->callback([&] { action = [&] { return spacetime_project(scene_path, event_ids, chain_ids); }; });
    auto* sync = spacetime->add_subcommand("sync", "check that two chains are synchronized");
    sync->add_option("--scene", scene_path)->required();
    sync->add_option("--p", p_id)->required();
    sync->add_option("--q", q_id)->required();
    sync->add_option("--range", range, "lo,hi indices of P")->delimiter(',')->expected(2)->required();
    sync->add_option("--q-range", q_range, "lo,hi indices of Q (defaults to --range)")->delimiter(',')->expected(2);
    sync->callback([&] { action = [&] { return spacetime_sync(scene_path, p_id, q_id, range, q_range); }; });
    auto* interval = spacetime->add_subcommand("interval", "interval pair of two events per frame");
    interval->add_option("--scene", scene_path)->required();
    interval->add_option("--events", event_ids)->delimiter(',')->required();
    interval->add_option("--frames", frames, "rest, k=<rational> or P:Q")->delimiter(',');
    interval->callback([&] { action = [&] { return spacetime_interval(scene_path, event_ids, frames); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "ordinal: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!action) {
        err << "ordinal: no command given\n";
        return kExitUsage;
    }

    Result result;
    try {
        result = action();
    } catch (const Error& e) {
        err << "ordinal: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "ordinal: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string body = format == "json" ? (result.json.is_string() ? result.json.get<std::string>()
                                                                    : result.json.dump(2) + "\n")
                                        : result.text;
    if (output.empty()) {
        out << body;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            err << "ordinal: cannot write '" << output << "'\n";
            return kExitUsage;
        }
        file << body;
    }
    return result.code;
}

}  // namespace ordinal::cli
