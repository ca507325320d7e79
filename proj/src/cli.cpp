#include "roughlim/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "roughlim/generators.hpp"
#include "roughlim/serialize.hpp"
#include "roughlim/theorems.hpp"

namespace roughlim {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    if (text.empty()) return parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw DomainError(what + " must be a nonnegative integer, got \"" + text + "\"");
    }
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw DomainError(what + " is out of range: \"" + text + "\"");
    }
}

Family parse_family(const std::string& name) {
    if (name == "metric") return Family::Metric;
    if (name == "constant") return Family::ConstantSelfDistance;
    if (name == "general") return Family::LipschitzWeights;
    throw DomainError("unknown family \"" + name + "\" (expected metric, constant or general)");
}

Json load_json_file(const std::string& path, const std::string& what) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + what + " file \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("invalid JSON in \"" + path + "\": " + e.what());
    }
}

PointSet parse_point_set(const Space& space, const std::string& csv) {
    PointSet set;
    for (const std::string& label : split(csv, ',')) {
        const auto idx = space.index_of(label);
        if (!idx) throw DomainError("unknown point label \"" + label + "\"");
        set.push_back(*idx);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

std::string set_text(const Space& space, const PointSet& set) {
    std::vector<std::string> labels;
    labels.reserve(set.size());
    for (PointIndex p : set) labels.push_back(space.label(p));
    std::sort(labels.begin(), labels.end());
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i != 0) out += ", ";
        out += labels[i];
    }
    out += "}";
    return out;
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

void print_columns(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line.append(widths[c] - row[c].size() + 2, ' ');
        }
        out << line << '\n';
    }
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
    try {
        const Space space = resolve_space(config.space_source);
        if (config.format == OutputFormat::Json) {
            Json doc;
            doc["valid"] = true;
            doc["points"] = space.points();
            doc["labels"] = space.labels();
            print_json(out, doc);
        } else {
            out << "valid: " << space.points() << " point(s)\n";
        }
        return 0;
    } catch (const AxiomError& e) {
        if (config.format == OutputFormat::Json) {
            Json violations = Json::array();
            for (const AxiomViolation& v : e.violations()) {
                violations.push_back(axiom_violation_to_json(v, nullptr));
            }
            Json doc;
            doc["valid"] = false;
            doc["violations"] = violations;
            print_json(out, doc);
        } else {
            out << "invalid: " << e.violations().size() << " violation(s)\n";
            for (const AxiomViolation& v : e.violations()) out << "  " << v.describe() << '\n';
        }
        return 1;
    }
}

int cmd_analyze(const RunConfig& config, std::ostream& out) {
    const Space space = resolve_space(config.space_source);
    if (config.sequences.size() != 1) throw DomainError("analyze needs exactly one --seq");
    const Sequence seq = resolve_sequence(space, config.sequences.front());

    std::vector<PointIndex> cands;
    if (config.candidates.empty()) {
        cands = space.all_points();
    } else {
        for (const std::string& label : config.candidates) {
            const auto idx = space.index_of(label);
            if (!idx) throw DomainError("unknown candidate label \"" + label + "\"");
            cands.push_back(*idx);
        }
    }

    std::vector<RoughnessReport> reports;
    reports.reserve(cands.size());
    for (PointIndex cand : cands) reports.push_back(roughness_report(space, seq, cand));

    if (config.format == OutputFormat::Json) {
        Json rows = Json::array();
        for (const RoughnessReport& rep : reports) {
            rows.push_back(roughness_report_to_json(space, rep));
        }
        Json doc;
        doc["rows"] = rows;
        print_json(out, doc);
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"candidate", "r_two", "r_right", "r_left"});
        for (const RoughnessReport& rep : reports) {
            rows.push_back({space.label(rep.candidate), rep.r_two.str(), rep.r_right.str(),
                            rep.r_left.str()});
        }
        print_columns(out, rows);
    }
    return 0;
}

int cmd_limitset(const RunConfig& config, std::ostream& out) {
    const Space space = resolve_space(config.space_source);
    if (config.sequences.size() != 1) throw DomainError("limitset needs exactly one --seq");
    const Sequence seq = resolve_sequence(space, config.sequences.front());
    if (!config.r) throw DomainError("limitset needs --r");
    const Rational r = *config.r;

    std::vector<Side> sides;
    if (config.side) {
        sides.push_back(*config.side);
    } else {
        sides = {Side::TwoSided, Side::Right, Side::Left};
    }

    if (config.format == OutputFormat::Json) {
        Json doc;
        doc["r"] = rational_to_json(r);
        for (Side side : sides) {
            doc[side_name(side)] = point_set_to_json(space, rough_limit_set(space, seq, r, side));
        }
        print_json(out, doc);
    } else {
        for (Side side : sides) {
            const char* name = side == Side::TwoSided ? "LIM"
                             : side == Side::Right    ? "R-LIM"
                                                      : "L-LIM";
            out << name << "^{" << r.str() << "} = "
                << set_text(space, rough_limit_set(space, seq, r, side)) << '\n';
        }
    }
    return 0;
}

Json sorted_sets_json(const Space& space, const std::vector<PointSet>& sets) {
    std::vector<std::vector<std::string>> rendered;
    rendered.reserve(sets.size());
    for (const PointSet& set : sets) {
        std::vector<std::string> labels;
        labels.reserve(set.size());
        for (PointIndex p : set) labels.push_back(space.label(p));
        std::sort(labels.begin(), labels.end());
        rendered.push_back(std::move(labels));
    }
    std::sort(rendered.begin(), rendered.end(),
              [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    rendered.erase(std::unique(rendered.begin(), rendered.end()), rendered.end());
    return Json(rendered);
}

int cmd_topology(const RunConfig& config, std::ostream& out) {
    const Space space = resolve_space(config.space_source);
    const Topology topo = generate_topology(space, config.topology_cap);
    const std::vector<PointSet> basis = basis_balls(space);

    std::vector<std::pair<PointSet, PointSet>> queries; // set, closure
    std::vector<bool> closed_flags;
    for (const std::string& csv : config.set_queries) {
        const PointSet set = parse_point_set(space, csv);
        queries.emplace_back(set, closure(topo, set));
        closed_flags.push_back(is_closed(topo, set));
    }

    if (config.format == OutputFormat::Json) {
        Json doc;
        doc["basis"] = sorted_sets_json(space, basis);
        doc["opens"] = topology_to_json(topo);
        if (!queries.empty()) {
            Json arr = Json::array();
            for (std::size_t i = 0; i < queries.size(); ++i) {
                Json q;
                q["set"] = point_set_to_json(space, queries[i].first);
                q["closed"] = static_cast<bool>(closed_flags[i]);
                q["closure"] = point_set_to_json(space, queries[i].second);
                arr.push_back(q);
            }
            doc["queries"] = arr;
        }
        print_json(out, doc);
    } else {
        const Json basis_doc = sorted_sets_json(space, basis);
        out << "basis (" << basis_doc.size() << "):\n";
        for (const auto& set : basis_doc) {
            std::string line = "{";
            for (std::size_t i = 0; i < set.size(); ++i) {
                if (i != 0) line += ", ";
                line += set[i].get<std::string>();
            }
            out << "  " << line << "}\n";
        }
        out << "opens (" << topo.opens.size() << "):\n";
        for (std::uint64_t mask : topo.opens) {
            out << "  " << set_text(space, from_mask(mask, space.points())) << '\n';
        }
        for (std::size_t i = 0; i < queries.size(); ++i) {
            out << "query " << set_text(space, queries[i].first)
                << ": closed=" << (closed_flags[i] ? "true" : "false")
                << " closure=" << set_text(space, queries[i].second) << '\n';
        }
    }
    return 0;
}

void print_report(const SearchReport& report, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Json) {
        print_json(out, search_report_to_json(report));
        return;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"theorem", "pass", "fail", "vacuous", "skipped"});
    for (TheoremId id : all_theorems()) {
        const SearchCounts& row = report.summary.at(id);
        rows.push_back({theorem_name(id), std::to_string(row.pass), std::to_string(row.fail),
                        std::to_string(row.vacuous), std::to_string(row.skipped)});
    }
    print_columns(out, rows);
    out << "failures: " << report.failures.size() << '\n';
    for (const TheoremVerdict& v : report.failures) out << verdict_to_json(v).dump() << '\n';
}

int cmd_theorems(const RunConfig& config, std::ostream& out) {
    const Space space = resolve_space(config.space_source);
    if (config.sequences.empty() || config.sequences.size() > 2) {
        throw DomainError("theorems needs one or two --seq");
    }
    const Sequence seq = resolve_sequence(space, config.sequences.front());
    std::optional<Sequence> second;
    if (config.sequences.size() == 2) second = resolve_sequence(space, config.sequences.back());
    if (!config.r) throw DomainError("theorems needs --r");

    const SearchReport report =
        run_instance_suite(space, seq, second, *config.r, config.topology_cap);
    print_report(report, config.format, out);
    return report.all_passed() ? 0 : 1;
}

int cmd_search(const RunConfig& config, std::ostream& out) {
    SearchConfig sc;
    sc.seed = config.seed;
    sc.trials = config.trials;
    sc.max_points = config.max_points;
    sc.max_cycle = config.max_cycle;
    sc.topology_cap = config.topology_cap;
    const SearchReport report = search(sc);
    print_report(report, config.format, out);
    return report.all_passed() ? 0 : 1;
}

} // namespace

Space parse_space_file(const std::string& path) {
    return space_from_json(load_json_file(path, "space"));
}

Space resolve_space(const std::string& source) {
    const std::size_t colon = source.find(':');
    if (colon != std::string::npos) {
        const std::string head = source.substr(0, colon);
        const std::string rest = source.substr(colon + 1);
        if (head == "example31") {
            std::vector<long long> ks;
            for (const std::string& tok : split(rest, ',')) {
                ks.push_back(static_cast<long long>(parse_uint(tok, "example31 parameter")));
            }
            return gen_example31(ks);
        }
        if (head == "maxspace") {
            std::vector<Rational> values;
            for (const std::string& tok : split(rest, ',')) values.push_back(Rational::parse(tok));
            return gen_max(values);
        }
        if (head == "random") {
            const std::vector<std::string> parts = split(rest, ',');
            if (parts.size() != 3) throw DomainError("random spec is random:seed,n,family");
            GenParams params;
            params.family = parse_family(parts[2]);
            const std::uint64_t seed = parse_uint(parts[0], "random seed");
            const auto n = static_cast<std::size_t>(parse_uint(parts[1], "random point count"));
            return gen_random(seed, n, params);
        }
    }
    return parse_space_file(source);
}

Sequence resolve_sequence(const Space& space, const std::string& spec) {
    if (!spec.empty() && spec.front() == '@') {
        const Sequence seq = sequence_from_json(load_json_file(spec.substr(1), "sequence"));
        for (const auto* part : {&seq.prefix, &seq.cycle}) {
            for (PointIndex i : *part) {
                if (i >= space.points()) {
                    throw DomainError("sequence index " + std::to_string(i) +
                                      " out of range for a space with " +
                                      std::to_string(space.points()) + " point(s)");
                }
            }
        }
        return seq;
    }

    Sequence seq;
    bool seen_prefix = false;
    bool seen_cycle = false;
    for (const std::string& part : split(spec, ':')) {
        const std::size_t eq = part.find('=');
        if (eq == std::string::npos) {
            throw DomainError("sequence spec segments look like prefix=... or cycle=..., got \"" +
                              part + "\"");
        }
        const std::string key = part.substr(0, eq);
        const std::string csv = part.substr(eq + 1);
        std::vector<PointIndex>* target = nullptr;
        if (key == "prefix") {
            if (seen_prefix) throw DomainError("duplicate prefix= segment");
            seen_prefix = true;
            target = &seq.prefix;
        } else if (key == "cycle") {
            if (seen_cycle) throw DomainError("duplicate cycle= segment");
            seen_cycle = true;
            target = &seq.cycle;
        } else {
            throw DomainError("unknown sequence segment \"" + key + "\"");
        }
        for (const std::string& label : split(csv, ',')) {
            const auto idx = space.index_of(label);
            if (!idx) throw DomainError("unknown point label \"" + label + "\"");
            target->push_back(*idx);
        }
    }
    if (!seen_cycle || seq.cycle.empty()) {
        throw DomainError("sequence spec needs a nonempty cycle=... segment");
    }
    return seq;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    (void)err;
    switch (config.command) {
    case Command::Validate: return cmd_validate(config, out);
    case Command::Analyze: return cmd_analyze(config, out);
    case Command::Limitset: return cmd_limitset(config, out);
    case Command::Topology: return cmd_topology(config, out);
    case Command::Theorems: return cmd_theorems(config, out);
    case Command::Search: return cmd_search(config, out);
    }
    throw DomainError("unknown command");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    std::string r_text;
    std::string side_text;
    std::string format_text = "text";
    std::string candidates_text;

    CLI::App app{"exact rough-convergence analysis on finite partial metric spaces"};
    app.name("roughlim");
    app.require_subcommand(1);

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_text, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    const auto add_space = [&](CLI::App* cmd) {
        cmd->add_option("--space", config.space_source,
                        "space JSON file or builtin spec (example31:..., maxspace:..., "
                        "random:seed,n,family)")
            ->required();
    };
    const auto add_seq = [&](CLI::App* cmd) {
        return cmd->add_option("--seq", config.sequences,
                               "sequence spec: [prefix=l1,l2:]cycle=l1,l2 with point labels, or "
                               "@file.json with {\"prefix\": [...], \"cycle\": [...]} indices");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the partial-metric axioms");
    add_space(validate);
    add_format(validate);
    validate->callback([&config] { config.command = Command::Validate; });

    CLI::App* analyze =
        app.add_subcommand("analyze", "minimal roughness degrees per candidate point");
    add_space(analyze);
    add_seq(analyze)->required();
    analyze->add_option("--candidates", candidates_text, "comma-separated candidate labels");
    add_format(analyze);
    analyze->callback([&config] { config.command = Command::Analyze; });

    CLI::App* limitset =
        app.add_subcommand("limitset", "rough limit sets LIM^r, R-LIM^r, L-LIM^r");
    add_space(limitset);
    add_seq(limitset)->required();
    limitset->add_option("--r", r_text, "roughness degree, rational p/q")->required();
    limitset->add_option("--side", side_text, "restrict to one side")
        ->check(CLI::IsMember({"two_sided", "right", "left"}));
    add_format(limitset);
    limitset->callback([&config] { config.command = Command::Limitset; });

    CLI::App* topology =
        app.add_subcommand("topology", "ball basis, generated opens, closedness queries");
    add_space(topology);
    topology->add_option("--set", config.set_queries,
                         "comma-separated labels; reports closedness and closure (repeatable)");
    add_format(topology);
    topology->callback([&config] { config.command = Command::Topology; });

    CLI::App* theorems =
        app.add_subcommand("theorems", "run every theorem checker against one instance");
    add_space(theorems);
    add_seq(theorems)->required();
    theorems->add_option("--r", r_text, "roughness degree, rational p/q")->required();
    add_format(theorems);
    theorems->callback([&config] { config.command = Command::Theorems; });

    CLI::App* search_cmd =
        app.add_subcommand("search", "randomized counterexample search across generated spaces");
    search_cmd->add_option("--seed", config.seed, "RNG seed");
    search_cmd->add_option("--trials", config.trials, "number of generated instances");
    search_cmd->add_option("--max-points", config.max_points, "carrier size upper bound");
    search_cmd->add_option("--max-cycle", config.max_cycle, "cycle length upper bound");
    add_format(search_cmd);
    search_cmd->callback([&config] { config.command = Command::Search; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (!r_text.empty()) config.r = Rational::parse(r_text);
        if (!side_text.empty()) {
            config.side = side_text == "right"      ? Side::Right
                          : side_text == "left"     ? Side::Left
                                                    : Side::TwoSided;
        }
        if (!candidates_text.empty()) config.candidates = split(candidates_text, ',');
        config.format = format_text == "json" ? OutputFormat::Json : OutputFormat::Text;
        if (const char* cap_env = std::getenv("ROUGHLIM_TOPO_CAP");
            cap_env != nullptr && *cap_env != '\0') {
            config.topology_cap =
                static_cast<std::size_t>(parse_uint(cap_env, "ROUGHLIM_TOPO_CAP"));
        }
        return run(config, out, err);
    } catch (const AxiomError& e) {
        err << "axiom violation:\n";
        for (const AxiomViolation& v : e.violations()) err << "  " << v.describe() << '\n';
        return 1;
    } catch (const TopologyCapError& e) {
        err << "error: " << e.what() << " (set ROUGHLIM_TOPO_CAP to raise the cap)\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace roughlim
