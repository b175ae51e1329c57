#include <loccode/bounds.hh>
#include <loccode/check_suite.hh>
#include <loccode/commands.hh>
#include <loccode/constructions.hh>
#include <loccode/error.hh>
#include <loccode/pattern.hh>
#include <loccode/solver.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

using nlohmann::json;
using std::string;
using std::vector;

namespace loccode
{
    namespace
    {
        struct Outcome
        {
            Outcome() = default;
            Outcome(json r, int e = exit_ok, string t = {}) : result(std::move(r)), exit(e), text(std::move(t)) {}

            json result;
            int exit = exit_ok;
            string text; // optional human rendering, replaces the generic one
        };

        struct Globals
        {
            string format = "json";
            std::uint64_t seed = 1;
            unsigned threads = std::max(1u, std::thread::hardware_concurrency());
        };

        auto labels_of(const Graph & g, const vector<VertexId> & vs) -> json
        {
            json out = json::array();
            for (auto v : vs)
                out.push_back(g.label(v));
            return out;
        }

        auto failure_json(const Graph & g, const Failure & failure) -> json
        {
            if (auto * u = std::get_if<UncoveredVertex>(&failure))
                return {{"type", "uncovered"}, {"vertex", g.label(u->v)}};
            const auto & p = std::get<UnseparatedPair>(failure);
            return {{"type", "unseparated"}, {"pair", labels_of(g, {p.u, p.v})}, {"shared", labels_of(g, p.shared)}};
        }

        auto parse_torus_size(const string & text) -> std::pair<int, int>
        {
            auto x = text.find('x');
            if (x == string::npos)
                throw std::invalid_argument("torus size must look like WxH, got '" + text + "'");
            return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
        }

        auto write_file(const string & path, auto && writer) -> void
        {
            std::ofstream f(path);
            if (! f)
                throw std::invalid_argument("cannot write '" + path + "'");
            writer(f);
        }

        auto words_json(const HypercubeCode & code) -> json
        {
            json out = json::array();
            for (auto w : code.words)
                out.push_back(word_to_string(w, code.n));
            return out;
        }

        auto hypercube_result(const HypercubeCode & code, const string & out_path) -> Outcome
        {
            if (! out_path.empty())
                write_file(out_path, [&](std::ostream & f) {
                    for (auto w : code.words)
                        f << word_to_string(w, code.n) << "\n";
                });
            auto g = hypercube(code.n);
            bool lid = verify(code.on(g), {CodeKind::LocalIdentifying, 1}).valid;
            return {{{"n", code.n}, {"size", code.size()}, {"local_identifying", lid}, {"codewords", words_json(code)}}};
        }

        auto pattern_json(const PeriodicPattern & p) -> json
        {
            json residues = json::array();
            for (auto r : p.residues())
                residues.push_back({r.x, r.y});
            return {{"family", to_string(p.family())}, {"v1", {p.v1().x, p.v1().y}}, {"v2", {p.v2().x, p.v2().y}},
                {"residues", residues}, {"density", p.density().str()}};
        }

        auto render_text(const json & value, const string & prefix, std::ostream & out) -> void
        {
            if (value.is_object()) {
                for (const auto & [key, item] : value.items())
                    render_text(item, prefix.empty() ? key : prefix + "." + key, out);
                return;
            }
            if (value.is_array() && std::ranges::all_of(value, [](const json & j) { return j.is_primitive(); })) {
                out << prefix << ":";
                for (const auto & item : value)
                    out << " " << (item.is_string() ? item.get<string>() : item.dump());
                out << "\n";
                return;
            }
            if (value.is_array()) {
                for (std::size_t i = 0; i < value.size(); ++i)
                    render_text(value[i], prefix + "[" + std::to_string(i) + "]", out);
                return;
            }
            out << prefix << ": " << (value.is_string() ? value.get<string>() : value.dump()) << "\n";
        }
    }

    auto run_cli(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Covering, identifying and locating-dominating codes: verify, bound, solve, construct", "loccode"};
        app.require_subcommand(1);
        app.fallthrough(); // global flags may follow the subcommand
        app.set_version_flag("--version", tool_version);

        Globals globals;
        app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        app.add_option("--seed", globals.seed, "Seed for sampled checks");
        app.add_option("--threads", globals.threads, "Worker threads")->check(CLI::PositiveNumber);

        json inputs = json::object();
        std::function<Outcome()> action;

        // Shared option storage.
        string graph_uri, code_source, class_name = "covering", out_path;
        int r = 1;

        auto add_class = [&](CLI::App * cmd) {
            cmd->add_option("--class", class_name, "covering|total|id|ld|lid|lld")
                ->check(CLI::IsMember({"covering", "total", "id", "ld", "lid", "lld"}));
            cmd->add_option("--r", r, "Radius")->check(CLI::PositiveNumber);
        };

        // verify
        auto * verify_cmd = app.add_subcommand("verify", "Check a code against a class");
        verify_cmd->add_option("--graph", graph_uri, "Graph URI")->required();
        verify_cmd->add_option("--code", code_source, "Code file or inline:a,b,...")->required();
        add_class(verify_cmd);
        verify_cmd->callback([&] {
            inputs = {{"graph", graph_uri}, {"code", code_source}, {"class", class_name}, {"r", r}};
            action = [&]() -> Outcome {
                auto g = graph_from_uri(graph_uri);
                auto code = code_from_source(g, code_source);
                auto report = verify(code, {parse_code_kind(class_name), r});
                json result{{"valid", report.valid}, {"size", code.size()}, {"failure", nullptr}};
                if (report.failure)
                    result["failure"] = failure_json(g, *report.failure);
                return {result, report.valid ? exit_ok : exit_invalid};
            };
        });

        // solve
        std::uint64_t budget_nodes = 0;
        double budget_secs = 0.0;
        bool no_symmetry = false;
        auto * solve_cmd = app.add_subcommand("solve", "Minimum code of a class, with an optimality certificate");
        solve_cmd->add_option("--graph", graph_uri, "Graph URI")->required();
        add_class(solve_cmd);
        solve_cmd->add_option("--budget-nodes", budget_nodes, "Search node budget (0 = unlimited)");
        solve_cmd->add_option("--budget-secs", budget_secs, "Time budget in seconds (0 = unlimited)");
        solve_cmd->add_flag("--no-symmetry", no_symmetry, "Disable symmetry breaking");
        solve_cmd->callback([&] {
            inputs = {{"graph", graph_uri}, {"class", class_name}, {"r", r}, {"budget_nodes", budget_nodes},
                {"budget_secs", budget_secs}, {"symmetry", ! no_symmetry}};
            action = [&]() -> Outcome {
                auto g = graph_from_uri(graph_uri);
                CodeClass cls{parse_code_kind(class_name), r};
                if (cls.kind == CodeKind::Identifying || cls.kind == CodeKind::LocalIdentifying) {
                    auto adm = admits(g, cls.kind, r);
                    if (! adm.admits)
                        return {{{"status", "no-code"}, {"optimal", nullptr}, {"certified", true},
                            {"twins", labels_of(g, {adm.twins->first, adm.twins->second})}}, exit_invalid};
                }
                SolveOptions options{! no_symmetry, globals.threads};
                auto res = solve_min(g, cls, {budget_nodes, budget_secs, std::nullopt}, options);
                json result{{"optimal", nullptr}, {"witness", nullptr}, {"certified", res.certified()},
                    {"nodes", res.nodes_explored}, {"lower_bound_used", res.lower_bound_used},
                    {"certified_lower", res.certified_lower}};
                if (res.witness) {
                    result["witness"] = Code(g, *res.witness).labels();
                    if (res.certified())
                        result["optimal"] = res.optimal_size;
                    else
                        result["best_found"] = res.optimal_size;
                }
                result["status"] = res.certified() ? "optimal" : "unknown";
                return {result, res.certified() ? exit_ok : exit_unknown};
            };
        });

        // share
        bool per_codeword = false;
        auto * share_cmd = app.add_subcommand("share", "Shares of the codewords of a covering code (r = 1)");
        share_cmd->add_option("--graph", graph_uri, "Graph URI")->required();
        share_cmd->add_option("--code", code_source, "Code file or inline:...")->required();
        share_cmd->add_flag("--per-codeword", per_codeword, "List every codeword's share");
        share_cmd->callback([&] {
            inputs = {{"graph", graph_uri}, {"code", code_source}};
            action = [&]() -> Outcome {
                auto g = graph_from_uri(graph_uri);
                auto code = code_from_source(g, code_source);
                auto cover = verify(code, {CodeKind::Covering, 1});
                if (! cover.valid)
                    return {{{"error", "not a covering code"}, {"failure", failure_json(g, *cover.failure)}}, exit_invalid};
                auto profile = share_profile(code);
                json result{{"max_share", profile.max_share.str()}, {"total", profile.total.str()},
                    {"lower_bound", max_share_lower_bound(code).str()}};
                if (per_codeword) {
                    json shares = json::object();
                    for (const auto & [c, s] : profile.shares)
                        shares[g.label(c)] = s.str();
                    result["shares"] = shares;
                }
                return {result};
            };
        });

        // bound
        auto * bound_cmd = app.add_subcommand("bound", "Closed-form bounds and the window count check");
        bound_cmd->require_subcommand(1);
        int n = 0, s = 0, k = 0, w = 4, kmin = 3;
        auto * lid_lower = bound_cmd->add_subcommand("lid-lower", "Lower bound for local identifying codes in F^n");
        lid_lower->add_option("--n", n, "Dimension")->required();
        lid_lower->callback([&] {
            inputs = {{"n", n}};
            action = [&]() -> Outcome { return Outcome{json{{"bound", hypercube_lid_lower_bound(n)}}}; };
        });
        auto * lid_upper = bound_cmd->add_subcommand("lid-upper", "Size of H_s + F^k");
        lid_upper->add_option("--s", s, "Hamming parameter")->required();
        lid_upper->add_option("--k", k, "Extra dimensions")->required();
        lid_upper->callback([&] {
            inputs = {{"s", s}, {"k", k}};
            action = [&]() -> Outcome {
                return {{{"bound", hypercube_lid_upper_bound(s, k)}, {"n", (1 << s) + k - 1}}};
            };
        });
        auto * window = bound_cmd->add_subcommand("window", "Every w x w torus window holds >= kmin codewords");
        window->add_option("--graph", graph_uri, "Torus URI")->required();
        window->add_option("--code", code_source, "Code file or inline:...")->required();
        window->add_option("--w", w, "Window side");
        window->add_option("--kmin", kmin, "Required codewords per window");
        window->callback([&] {
            inputs = {{"graph", graph_uri}, {"code", code_source}, {"w", w}, {"kmin", kmin}};
            action = [&]() -> Outcome {
                auto g = graph_from_uri(graph_uri);
                auto code = code_from_source(g, code_source);
                auto check = window_count_bound(code, w, kmin);
                json result{{"holds", check.holds}, {"min_count", check.min_count}, {"violation", nullptr}};
                if (check.witness)
                    result["violation"] = {{"i", check.witness->i}, {"j", check.witness->j}, {"count", check.witness->count}};
                return {result, check.holds ? exit_ok : exit_invalid};
            };
        });

        // construct
        auto * construct = app.add_subcommand("construct", "Build codes from the known constructions");
        construct->require_subcommand(1);
        auto * ham = construct->add_subcommand("hamming", "Hamming code of length 2^s - 1");
        ham->add_option("--s", s, "Parameter")->required();
        ham->add_option("--out", out_path, "Write the codewords to a code file");
        ham->callback([&] {
            inputs = {{"s", s}};
            action = [&]() -> Outcome {
                auto code = hamming(s).codewords();
                auto outcome = hypercube_result(code, out_path);
                outcome.result.erase("local_identifying");
                return outcome;
            };
        });
        auto * ham_lift = construct->add_subcommand("hamming-lift", "H_s + F^k");
        ham_lift->add_option("--s", s, "Hamming parameter")->required();
        ham_lift->add_option("--k", k, "Extra dimensions")->required();
        ham_lift->add_option("--out", out_path, "Write the codewords to a code file");
        ham_lift->callback([&] {
            inputs = {{"s", s}, {"k", k}};
            action = [&]() -> Outcome { return hypercube_result(hamming_lift(s, k), out_path); };
        });
        string input_path;
        auto * lift_cover = construct->add_subcommand("lift-cover", "F^2 + C for a covering code C in F^n");
        lift_cover->add_option("--input", input_path, "Code file or inline:...")->required();
        lift_cover->add_option("--n", n, "Dimension of the input code")->required();
        lift_cover->add_option("--out", out_path, "Write the codewords to a code file");
        lift_cover->callback([&] {
            inputs = {{"input", input_path}, {"n", n}};
            action = [&]() -> Outcome {
                auto g = hypercube(n);
                auto code = code_from_source(g, input_path);
                if (auto cover = verify(code, {CodeKind::Covering, 1}); ! cover.valid)
                    return {{{"error", "input is not a covering code"}, {"failure", failure_json(g, *cover.failure)}},
                        exit_invalid};
                return hypercube_result(lift_covering_to_lid(HypercubeCode::from_code(code)), out_path);
            };
        });
        string pattern_id, pattern_file, torus_size, pattern_out;
        auto * pattern_cmd = construct->add_subcommand("pattern", "Realize a periodic grid pattern on a torus");
        auto * id_opt = pattern_cmd->add_option("--id", pattern_id, "Builtin pattern id");
        auto * file_opt = pattern_cmd->add_option("--pattern", pattern_file, "Pattern file");
        id_opt->excludes(file_opt);
        pattern_cmd->add_option("--torus", torus_size, "Torus size WxH (default: smallest compatible)");
        pattern_cmd->add_option("--out", out_path, "Write the torus code to a code file");
        pattern_cmd->add_option("--pattern-out", pattern_out, "Write the pattern to a pattern file");
        pattern_cmd->callback([&] {
            inputs = {{"id", pattern_id}, {"pattern", pattern_file}, {"torus", torus_size}};
            action = [&]() -> Outcome {
                if (pattern_id.empty() == pattern_file.empty())
                    throw CLI::ValidationError("construct pattern", "exactly one of --id and --pattern is required");
                std::optional<PeriodicPattern> pattern;
                std::optional<PatternClaim> claim;
                if (! pattern_id.empty()) {
                    pattern = builtin_pattern(pattern_id);
                    claim = builtin_pattern_claim(pattern_id);
                }
                else {
                    std::ifstream f(pattern_file);
                    if (! f)
                        throw std::invalid_argument("cannot open pattern file '" + pattern_file + "'");
                    pattern = read_pattern(f);
                }
                TorusSpec spec = pattern->minimal_torus();
                if (! torus_size.empty()) {
                    auto [px, py] = parse_torus_size(torus_size);
                    spec.px = px;
                    spec.py = py;
                }
                auto g = torus(spec);
                auto code = pattern_to_torus_code(*pattern, g);
                if (! out_path.empty())
                    write_file(out_path, [&](std::ostream & f) { write_code(f, code); });
                if (! pattern_out.empty())
                    write_file(pattern_out, [&](std::ostream & f) { write_pattern(f, *pattern); });

                json result = pattern_json(*pattern);
                result["torus"] = std::to_string(spec.px) + "x" + std::to_string(spec.py);
                result["size"] = code.size();
                result["codewords"] = code.labels();
                int exit = exit_ok;
                if (claim) {
                    bool valid = verify(code, {claim->kind, 1}).valid;
                    result["claimed_class"] = short_name(claim->kind);
                    result["valid"] = valid;
                    exit = valid ? exit_ok : exit_invalid;
                }
                else {
                    json classes = json::object();
                    for (auto kind : {CodeKind::Covering, CodeKind::TotalDominating, CodeKind::Identifying,
                             CodeKind::LocatingDominating, CodeKind::LocalIdentifying, CodeKind::LocalLocatingDominating})
                        classes[short_name(kind)] = verify(code, {kind, 1}).valid;
                    result["valid_classes"] = classes;
                }
                return {result, exit};
            };
        });
        string family_name;
        long det = 0;
        std::size_t count = 0;
        auto * search = construct->add_subcommand("search", "Search periodic patterns by lattice determinant");
        search->add_option("--family", family_name, "square|hex|tri|king")->required();
        search->add_option("--det", det, "Lattice determinant")->required();
        search->add_option("--count", count, "Codewords per period")->required();
        search->add_option("--class", class_name, "Code class")->required()
            ->check(CLI::IsMember({"covering", "total", "id", "ld", "lid", "lld"}));
        search->add_option("--pattern-out", pattern_out, "Write the pattern found to a pattern file");
        search->callback([&] {
            inputs = {{"family", family_name}, {"det", det}, {"count", count}, {"class", class_name}};
            action = [&]() -> Outcome {
                auto found = pattern_search_by_determinant(parse_grid_family(family_name), det, count,
                        parse_code_kind(class_name));
                if (! found)
                    return {{{"found", false}}, exit_invalid};
                if (! pattern_out.empty())
                    write_file(pattern_out, [&](std::ostream & f) { write_pattern(f, *found); });
                json result = pattern_json(*found);
                result["found"] = true;
                auto spec = found->minimal_torus();
                result["torus"] = std::to_string(spec.px) + "x" + std::to_string(spec.py);
                return {result};
            };
        });

        // paper-check
        string only;
        auto * check = app.add_subcommand("paper-check", "Replay every reference result");
        check->add_option("--only", only, "Restrict to one group")->check(CLI::IsMember(check_groups()));
        check->callback([&] {
            inputs = {{"only", only.empty() ? json(nullptr) : json(only)}};
            action = [&]() -> Outcome {
                CheckOptions options;
                if (! only.empty())
                    options.only = only;
                options.threads = globals.threads;
                options.seed = globals.seed;
                auto rows = run_check_suite(options);
                json list = json::array();
                std::ostringstream table;
                std::size_t passed = 0;
                for (const auto & row : rows) {
                    passed += row.passed;
                    list.push_back({{"id", row.id}, {"group", row.group}, {"passed", row.passed},
                        {"detail", row.detail}, {"seconds", row.seconds}});
                    table << (row.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << row.id << " "
                          << row.detail << " (" << std::fixed << std::setprecision(2) << row.seconds << "s)\n";
                }
                table << passed << "/" << rows.size() << " passed\n";
                Outcome outcome{{{"rows", list}, {"passed", passed}, {"total", rows.size()}},
                    passed == rows.size() ? exit_ok : exit_invalid, table.str()};
                return outcome;
            };
        });

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp & e) {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::CallForAllHelp & e) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_ok;
        }
        catch (const CLI::CallForVersion & e) {
            out << tool_version << "\n";
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }

        json command = json::array();
        for (const auto & a : args)
            command.push_back(a);

        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = action();
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const CLI::Error & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::invalid_argument & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::out_of_range & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::overflow_error & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        json report{{"schema", report_schema}, {"tool", "loccode"}, {"version", tool_version}, {"command", command},
            {"inputs", inputs}, {"result", outcome.result}, {"exit", outcome.exit}, {"seconds", seconds},
            {"seed", globals.seed}, {"threads", globals.threads}};

        if (globals.format == "json") {
            out << report.dump(2) << "\n";
            if (! outcome.text.empty())
                err << outcome.text;
        }
        else if (! outcome.text.empty())
            out << outcome.text;
        else
            render_text(outcome.result, "", out);
        return outcome.exit;
    }
}
