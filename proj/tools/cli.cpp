#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "altiset/collective.hpp"
#include "altiset/dependence.hpp"
#include "altiset/domains.hpp"
#include "altiset/errors.hpp"
#include "altiset/geoalt.hpp"
#include "altiset/induced_orders.hpp"
#include "altiset/io.hpp"
#include "altiset/layers.hpp"
#include "altiset/relation.hpp"

namespace altiset::cli {

using nlohmann::json;

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream ss;
    for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return ss.str();
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

const char* command_name(Command c) {
    switch (c) {
    case Command::altiset: return "altiset";
    case Command::layers: return "layers";
    case Command::correlate: return "correlate";
    case Command::collective: return "collective";
    case Command::skyline: return "skyline";
    case Command::evolve: return "evolve";
    }
    return "?";
}

json index_sets(const std::vector<std::vector<std::size_t>>& sets) {
    json j = json::array();
    for (const auto& s : sets) j.push_back(s);
    return j;
}

json labels_of(const Universe& u, const std::vector<std::size_t>& idx) {
    json j = json::array();
    for (auto i : idx) j.push_back(u.labels()[i]);
    return j;
}

GridSpec default_grid() {
    if (const char* env = std::getenv("ALTISET_GRID"); env && *env) return parse_grid_spec(env);
    return {};
}

// Each command fills `settings` and returns the result block.

json run_altiset(const RunConfig& cfg, const std::string& text, json& settings) {
    json result;
    if (cfg.input_is_system) {
        const auto system = io::parse_system_json(text);
        settings["input_kind"] = "system";
        std::vector<std::size_t> subset(system.size());
        for (std::size_t i = 0; i < subset.size(); ++i) subset[i] = i;
        if (cfg.subset) subset = *cfg.subset;
        const auto restricted = system.restricted(subset);
        const auto members = ElementSet::from_indices(system.size(), subset).indices();
        const auto q = quotient(restricted);
        json classes = json::array();
        for (const auto& c : q.classes) {
            json cls = json::array();
            for (auto i : c) cls.push_back(members[i]);
            classes.push_back(cls);
        }
        json order = json::array();
        for (auto [a, b] : q.class_order.pairs()) order.push_back({a, b});
        std::vector<std::size_t> alt;
        altiset_of_system(restricted).for_each([&](std::size_t i) { alt.push_back(members[i]); });
        result["altiset"] = alt;
        result["classes"] = classes;
        result["class_order"] = order;
        result["maximal_classes"] = q.maximal_classes;
        if (system.universe().has_labels()) result["altiset_labels"] = labels_of(system.universe(), alt);
    } else {
        const auto r = io::parse_relation_json(text);
        settings["input_kind"] = "relation";
        const auto subset = cfg.subset ? ElementSet::from_indices(r.size(), *cfg.subset) : ElementSet::full(r.size());
        const auto alt = altiset(r, subset).indices();
        result["altiset"] = alt;
        result["aa_property"] = has_aa_property(r);
        result["symmetric"] = is_symmetric(r);
        if (r.universe().has_labels()) result["altiset_labels"] = labels_of(r.universe(), alt);
    }
    if (cfg.subset) settings["subset"] = *cfg.subset;
    return result;
}

json run_layers(const RunConfig& cfg, const std::string& text, json& settings) {
    const auto r = io::parse_relation_json(text);
    const auto d = upper_layers(r);
    json result;
    result["d"] = d.class_count;
    result["upper_index"] = d.upper_index;
    result["lower_index"] = d.lower_index;
    result["upper_layers"] = index_sets(d.upper_layers());
    result["lower_layers"] = index_sets(d.lower_layers());
    if (cfg.chain) {
        const auto term = ChainTerm::parse(*cfg.chain);
        settings["chain"] = term.to_string();
        result["coloring"] = chain_coloring(term, r);
    }
    return result;
}

json run_correlate(const std::string& text) {
    const auto s = io::parse_points_csv(text);
    json result;
    result["n"] = s.size();
    result["iota_plus"] = increasingness_index(s);
    result["iota_minus"] = decreasingness_index(s);
    result["epsilon"] = epsilon(s);
    result["blocks"] = index_sets(increasing_decomposition(s));
    return result;
}

json run_collective(const RunConfig& cfg, const std::string& text, json& settings) {
    const auto family = io::parse_family_json(text);
    settings["method"] = cfg.collective_method;
    ElementSet survivors;
    if (cfg.collective_method == "altiset") survivors = collective_altiset(family);
    else if (cfg.collective_method == "elimination") survivors = pairwise_elimination(family);
    else throw ArgumentError("unknown collective method '" + cfg.collective_method + "'");
    json members = json::array();
    for (auto k : survivors.indices()) {
        json names = json::array();
        for (auto x : family.members[k]) names.push_back(family.ground.labels()[x]);
        members.push_back(names);
    }
    json result;
    result["survivors"] = survivors.indices();
    result["members"] = members;
    result["thresholds"] = family.ground.thresholds();
    return result;
}

json run_skyline(const RunConfig& cfg, const std::string& text, json& settings) {
    const auto table = io::parse_summits_csv(text);
    MetricKind space = table.planar ? MetricKind::euclidean_2d : MetricKind::real_line;
    if (cfg.space) space = parse_metric_kind(*cfg.space);
    if ((space == MetricKind::euclidean_2d) != table.planar)
        throw ArgumentError("space '" + std::string(to_string(space)) + "' does not match the CSV column count");
    Point2 ref;
    if (cfg.records) {
        if (!cfg.reference.empty()) throw ArgumentError("--records takes no reference point");
        ref = {0.0, 0.0};
        if (space == MetricKind::real_line_left_restricted)
            for (const auto& p : table.points) ref.x = std::max(ref.x, p.x);
    } else {
        const std::size_t want = space == MetricKind::euclidean_2d ? 2 : 1;
        if (cfg.reference.size() != want)
            throw ArgumentError("--ref needs " + std::to_string(want) + " coordinate(s) for space " +
                                std::string(to_string(space)));
        ref = {cfg.reference[0], want == 2 ? cfg.reference[1] : 0.0};
    }
    const SummitField field(space, table.points, table.altitudes, ref);
    settings["space"] = to_string(space);
    if (!cfg.records) {
        const auto ranks = distance_ranks(field);
        settings["distance_exact"] = ranks.exact;
        settings["distance_tolerance"] = ranks.exact ? 0.0 : distance_tolerance;
    }

    json result;
    std::vector<std::size_t> alt;
    if (cfg.records) {
        settings["method"] = "records";
        alt = record_events(field);
    } else {
        settings["method"] = cfg.skyline_method;
        settings["reference"] = cfg.reference;
        if (cfg.skyline_method == "oracle") alt = geo_altiset_oracle(field);
        else if (cfg.skyline_method == "circular") alt = skyline_circular(field);
        else if (cfg.skyline_method == "contour") alt = skyline_contour(field);
        else if (cfg.skyline_method == "recursive") {
            settings["block_size"] = cfg.block_size;
            alt = skyline_recursive(field, cfg.block_size);
        } else {
            throw ArgumentError("unknown skyline method '" + cfg.skyline_method + "'");
        }
    }
    result["altiset"] = alt;
    return result;
}

json run_evolve(const RunConfig& cfg, const std::string& text, json& settings) {
    const auto table = io::parse_summits_csv(text);
    if (!table.planar) throw ArgumentError("evolve needs x,y,h columns");
    const auto spec = cfg.grid ? *cfg.grid : default_grid();
    const auto grid = GridMeasure::around(table.points, cfg.inflate, spec.cells_x, spec.cells_y);
    settings["grid"] = {
        {"cells", {grid.cells_x(), grid.cells_y()}},
        {"inflate", cfg.inflate},
        {"box_min", {grid.min_corner().x, grid.min_corner().y}},
        {"box_max", {grid.max_corner().x, grid.max_corner().y}},
        {"cell_area", grid.cell_area()},
        {"measure", "grid cell-centre count over the inflated bounding box; values depend on the box"},
    };
    settings["max_steps"] = cfg.max_steps;
    const auto trace = evolve(table.points, table.altitudes, grid, cfg.max_steps);
    json result;
    result["stop_index"] = trace.stop_index;
    result["initial"] = trace.valuations.front();
    result["potential"] = trace.valuations.back();
    if (cfg.trace) {
        json t;
        t["stop_index"] = trace.stop_index;
        t["valuations"] = trace.valuations;
        write_file(*cfg.trace, t.dump(2) + "\n");
        settings["trace"] = *cfg.trace;
    }
    return result;
}

void emit(const RunConfig& cfg, const json& doc, std::ostream& out) {
    const auto text = doc.dump(2) + "\n";
    if (cfg.output) write_file(*cfg.output, text);
    else out << text;
}

} // namespace

GridSpec parse_grid_spec(const std::string& text) {
    auto number = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("invalid grid specification '" + text + "'");
        const auto v = std::stoull(s);
        if (v == 0 || v > 100000) throw std::invalid_argument("grid resolution out of range in '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) {
        const auto n = number(text);
        return {n, n};
    }
    return {number(text.substr(0, x)), number(text.substr(x + 1))};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    json meta;
    meta["command"] = command_name(cfg.command);
    meta["tool_version"] = tool_version;
    if (cfg.timestamp) meta["timestamp"] = utc_timestamp();
    json settings = json::object();

    auto fail = [&](int code, const std::string& kind, const std::string& message, json extra = json::object()) {
        err << "error: " << message << "\n";
        json doc;
        meta["settings"] = settings;
        doc["meta"] = meta;
        extra["kind"] = kind;
        extra["message"] = message;
        doc["error"] = extra;
        try {
            emit(cfg, doc, out);
        } catch (const InputError& e) {
            err << "error: " << e.what() << "\n";
        }
        return code;
    };

    std::string text;
    try {
        text = read_file(cfg.input);
    } catch (const InputError& e) {
        return fail(exit_input_error, "io", e.what());
    }
    meta["input_digest"] = "sha256:" + sha256_hex(text);

    try {
        json result;
        switch (cfg.command) {
        case Command::altiset: result = run_altiset(cfg, text, settings); break;
        case Command::layers: result = run_layers(cfg, text, settings); break;
        case Command::correlate: result = run_correlate(text); break;
        case Command::collective: result = run_collective(cfg, text, settings); break;
        case Command::skyline: result = run_skyline(cfg, text, settings); break;
        case Command::evolve: result = run_evolve(cfg, text, settings); break;
        }
        meta["settings"] = settings;
        json doc;
        doc["meta"] = meta;
        doc["result"] = result;
        emit(cfg, doc, out);
        return exit_ok;
    } catch (const ParseError& e) {
        json extra;
        if (e.line()) extra["line"] = e.line();
        if (!e.field().empty()) extra["field"] = e.field();
        return fail(exit_input_error, e.kind(), e.what(), extra);
    } catch (const CyclicRelationError& e) {
        return fail(exit_domain_error, e.kind(), e.what(), {{"cycle", e.cycle()}});
    } catch (const Error& e) {
        return fail(exit_domain_error, e.kind(), e.what());
    } catch (const InputError& e) {
        return fail(exit_input_error, "io", e.what());
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Significance (altiset) toolkit: non-dominated sets of finite relations and datasets", "altiset"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string output;
    bool no_timestamp = false;
    app.add_option("-o,--output", output, "Write the JSON document to this file instead of stdout");
    app.add_flag("--no-timestamp", no_timestamp, "Omit meta.timestamp so output is byte-reproducible");

    auto* alt = app.add_subcommand("altiset", "Significant elements of a relation or order system");
    std::string relation_path, system_path, subset_text;
    auto* rel_opt = alt->add_option("--relation", relation_path, "Relation JSON file");
    auto* sys_opt = alt->add_option("--system", system_path, "Order-system JSON file");
    rel_opt->excludes(sys_opt);
    alt->add_option("--subset", subset_text, "Comma-separated element indices to restrict to");

    auto* lay = app.add_subcommand("layers", "Successive upper/lower altisets and d(R)");
    std::string layers_path, chain;
    lay->add_option("--relation", layers_path, "Relation JSON file")->required();
    lay->add_option("--chain", chain, "Chain term over u/l (or υ/λ) of length d(R); emits its colouring");

    auto* cor = app.add_subcommand("correlate", "Indices of increasingness/decreasingness and epsilon");
    std::string points_path;
    cor->add_option("points", points_path, "CSV with columns x,y (header optional)")->required();

    auto* col = app.add_subcommand("collective", "Significant subsets under threshold-count comparison");
    std::string family_path, col_method = "altiset";
    col->add_option("family", family_path, "Family JSON file")->required();
    col->add_option("--method", col_method, "altiset | elimination")
        ->check(CLI::IsMember({"altiset", "elimination"}));

    auto* sky = app.add_subcommand("skyline", "High-and-close summits relative to a reference point");
    std::string summits_path, sky_method = "oracle", ref_text, space;
    std::size_t block_size = 16;
    bool records = false;
    sky->add_option("summits", summits_path, "CSV with columns x,h or x,y,h (header optional)")->required();
    sky->add_option("--ref", ref_text, "Reference point X or X,Y");
    sky->add_option("--method", sky_method, "oracle | circular | contour | recursive")
        ->check(CLI::IsMember({"oracle", "circular", "contour", "recursive"}));
    sky->add_option("--block-size", block_size, "Block size of the recursive method")->check(CLI::PositiveNumber);
    sky->add_option("--space", space, "euclidean-2d | real-line | real-line-left-restricted")
        ->check(CLI::IsMember({"euclidean-2d", "real-line", "real-line-left-restricted"}));
    sky->add_flag("--records", records, "Record events along the line (reference at minus infinity)");

    auto* evo = app.add_subcommand("evolve", "Evolution of valuation by grid Voronoi measure");
    std::string evolve_path, grid_text, trace_path;
    double inflate = 0.25;
    std::size_t max_steps = 1000;
    evo->add_option("summits", evolve_path, "CSV with columns x,y,h (h = initial valuation)")->required();
    evo->add_option("--grid", grid_text, "Grid resolution WxH (default 128x128 or $ALTISET_GRID)");
    evo->add_option("--inflate", inflate, "Bounding-box inflation per side, as a fraction of extent")
        ->check(CLI::NonNegativeNumber);
    evo->add_option("--max-steps", max_steps, "Maximum evolution steps")->check(CLI::PositiveNumber);
    evo->add_option("--trace", trace_path, "Write every valuation to this JSON file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    auto usage = [&](const std::string& msg) {
        err << "usage error: " << msg << "\n";
        return exit_usage;
    };
    auto split_numbers = [](const std::string& text, auto convert) {
        std::vector<decltype(convert(std::string{}))> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(convert(item));
        return out;
    };

    if (!output.empty()) cfg.output = output;
    cfg.timestamp = !no_timestamp;
    try {
        if (alt->parsed()) {
            cfg.command = Command::altiset;
            if (relation_path.empty() == system_path.empty())
                return usage("altiset needs exactly one of --relation or --system");
            cfg.input_is_system = !system_path.empty();
            cfg.input = cfg.input_is_system ? system_path : relation_path;
            if (!subset_text.empty())
                cfg.subset = split_numbers(subset_text, [](const std::string& s) {
                    std::size_t pos = 0;
                    const auto v = std::stoull(s, &pos);
                    if (pos != s.size()) throw std::invalid_argument(s);
                    return static_cast<std::size_t>(v);
                });
        } else if (lay->parsed()) {
            cfg.command = Command::layers;
            cfg.input = layers_path;
            if (!chain.empty()) cfg.chain = chain;
        } else if (cor->parsed()) {
            cfg.command = Command::correlate;
            cfg.input = points_path;
        } else if (col->parsed()) {
            cfg.command = Command::collective;
            cfg.input = family_path;
            cfg.collective_method = col_method;
        } else if (sky->parsed()) {
            cfg.command = Command::skyline;
            cfg.input = summits_path;
            cfg.skyline_method = sky_method;
            cfg.block_size = block_size;
            cfg.records = records;
            if (!space.empty()) cfg.space = space;
            if (!ref_text.empty())
                cfg.reference = split_numbers(ref_text, [](const std::string& s) {
                    std::size_t pos = 0;
                    const auto v = std::stod(s, &pos);
                    if (pos != s.size()) throw std::invalid_argument(s);
                    return v;
                });
            if (!records && cfg.reference.empty()) return usage("skyline needs --ref (or --records)");
        } else if (evo->parsed()) {
            cfg.command = Command::evolve;
            cfg.input = evolve_path;
            if (!grid_text.empty()) cfg.grid = parse_grid_spec(grid_text);
            cfg.inflate = inflate;
            cfg.max_steps = max_steps;
            if (!trace_path.empty()) cfg.trace = trace_path;
        }
    } catch (const std::invalid_argument& e) {
        return usage(std::string("malformed option value: ") + e.what());
    } catch (const std::out_of_range& e) {
        return usage(std::string("option value out of range: ") + e.what());
    }
    return run(cfg, out, err);
}

} // namespace altiset::cli
