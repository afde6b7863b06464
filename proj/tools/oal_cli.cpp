#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oal/bench.hpp"
#include "oal/bounds.hpp"
#include "oal/families.hpp"
#include "oal/graph_io.hpp"
#include "oal/predicates.hpp"
#include "oal/reductions.hpp"
#include "oal/serialize.hpp"
#include "oal/solvers.hpp"
#include "oal/witness.hpp"

namespace {

using oal::ojson;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

oal::Graph load_graph(const std::string& path) {
    if (path.empty() || path == "-") return oal::parse_graph(std::cin);
    return oal::parse_graph_file(path);
}

std::vector<int> parse_csv_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

oal::VertexSet set_from_csv(const std::string& csv, int n) {
    oal::VertexSet s(n);
    for (int v : parse_csv_ints(csv)) s.add(v);
    return s;
}

void emit(const ojson& j, const std::string& format) {
    if (format == "table")
        std::cout << oal::render_table(j);
    else
        std::cout << j.dump(2) << "\n";
}

ojson with_schema(const char* command) {
    ojson j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

std::vector<int> resolve_r(const std::string& rspec, const oal::Graph& g) {
    const oal::RRange range = oal::valid_r_range(g);
    if (rspec == "all") {
        std::vector<int> rs;
        for (int r = range.lo; r <= range.hi; ++r) rs.push_back(r);
        return rs;
    }
    return {std::stoi(rspec)};
}

std::string csv_field(const ojson& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) {
            if (!s.empty()) s += ";";
            s += x.is_string() ? x.get<std::string>() : x.dump();
        }
        return "\"" + s + "\"";
    }
    return v.dump();
}

std::string csv_of_rows(const ojson& rows) {
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    std::string out;
    for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < cols.size(); ++i) {
            if (i) out += ",";
            if (row.contains(cols[i])) out += csv_field(row[cols[i]]);
        }
        out += "\n";
    }
    return out;
}

bool report_violates(const oal::BoundsReport& rep) {
    if (!rep.exact) return false;
    for (const auto& e : rep.entries) {
        if (!e.applicable || e.flagged_falsified) continue;
        if (e.kind == oal::BoundKind::lower && e.value > *rep.exact) return true;
        if (e.kind == oal::BoundKind::upper && e.value < *rep.exact) return true;
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"offensive r-alliance toolkit"};
    app.require_subcommand(1);

    std::string file, rspec = "all", format = "json", setcsv, kind, construction = "all", family;
    bool global = false, allow_large = false;
    int budget = 40, gadget_budget = 64, jobs = 1;
    double timeout = 60;
    std::uint64_t seed = 1;
    oal::FamilyParams fp;

    auto add_graph_arg = [&](CLI::App* sub) { sub->add_option("file", file, "graph file (edge list or DIMACS); - for stdin"); };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-r", rspec, "alliance parameter, integer or 'all'");
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    auto* verify = app.add_subcommand("verify", "check a set against the alliance predicate");
    add_graph_arg(verify);
    add_common(verify);
    verify->add_option("--set", setcsv, "candidate set, comma separated")->required();
    verify->add_flag("--global", global, "require domination as well");

    auto* solve = app.add_subcommand("solve", "exact minimum offensive r-alliance");
    add_graph_arg(solve);
    add_common(solve);
    solve->add_flag("--global", global, "solve the global variant");
    solve->add_option("--budget", budget, "solver order guardrail");
    solve->add_flag("--allow-large", allow_large, "override the guardrail");
    solve->add_option("--timeout", timeout, "seconds per solve");

    auto* bounds = app.add_subcommand("bounds", "bound report, optionally with the exact optimum");
    add_graph_arg(bounds);
    add_common(bounds);
    bounds->add_option("--budget", budget, "exact solving only up to this order");
    bounds->add_option("--timeout", timeout, "seconds per solve");

    auto* witness = app.add_subcommand("witness", "constructive global alliance witnesses");
    add_graph_arg(witness);
    add_common(witness);
    witness->add_option("--construction", construction, "thm31 | thm32 | independent_complement | all");
    witness->add_option("--set", setcsv, "r-dominating set for thm32 (default: exact optimum)");

    auto* reduce = app.add_subcommand("reduce", "emit a hardness gadget with provenance labels");
    add_graph_arg(reduce);
    add_common(reduce);
    reduce->add_option("--kind", kind, "downshift | goa-low | goa-high")->required();
    reduce->add_option("--budget", gadget_budget, "gadget vertex budget");

    auto* gen = app.add_subcommand("gen", "generate a family graph as an edge list");
    gen->add_option("--family", family, "complete|cycle|path|complete_bipartite|petersen|prism|random_regular|hypercube")
        ->required();
    gen->add_option("--n", fp.n);
    gen->add_option("--a", fp.a);
    gen->add_option("--b", fp.b);
    gen->add_option("--d", fp.d);
    gen->add_option("--seed", seed);

    std::string famcsv;
    auto* bench = app.add_subcommand("bench", "run the bound corpus and cross-check every inequality");
    bench->add_option("-r", rspec, "alliance parameters, integer csv or 'all'");
    bench->add_option("--format", format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
    bench->add_option("--family", famcsv, "corpus id prefixes, comma separated (default: all)");
    bench->add_option("--seed", seed);
    bench->add_option("--jobs", jobs, "worker threads (never changes the output)");
    bench->add_option("--budget", budget, "exact solving only up to this order");
    bench->add_option("--timeout", timeout, "seconds per instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        oal::SolveOptions sopt;
        sopt.max_n = budget;
        sopt.allow_large = allow_large;
        sopt.time_limit_s = timeout;

        if (verify->parsed()) {
            const oal::Graph g = load_graph(file);
            if (rspec == "all") throw std::invalid_argument("verify needs an integer -r");
            const int r = std::stoi(rspec);
            const oal::VertexSet s = set_from_csv(setcsv, g.order());
            const oal::AllianceReport rep =
                global ? oal::is_global_offensive_r_alliance(g, s, r) : oal::is_offensive_r_alliance(g, s, r);
            ojson j = with_schema("verify");
            j.update(oal::json_of(rep));
            emit(j, format);
            return rep.holds ? exit_ok : exit_violation;
        }

        if (solve->parsed()) {
            const oal::Graph g = load_graph(file);
            if (rspec == "all") throw std::invalid_argument("solve needs an integer -r");
            const int r = std::stoi(rspec);
            const oal::SolveResult res = global ? oal::min_global_offensive_alliance(g, r, sopt)
                                                : oal::min_offensive_alliance(g, r, sopt);
            ojson j = with_schema("solve");
            j["r"] = r;
            j["global"] = global;
            j.update(oal::json_of(res));
            emit(j, format);
            return exit_ok;
        }

        if (bounds->parsed()) {
            const oal::Graph g = load_graph(file);
            oal::BoundsReportOptions bopt;
            bopt.solve = sopt;
            bopt.with_exact = g.order() <= budget;
            ojson j = with_schema("bounds");
            j["n"] = g.order();
            j["m"] = g.edge_count();
            bool violated = false;
            ojson reports = ojson::array();
            for (int r : resolve_r(rspec, g)) {
                const oal::BoundsReport rep = oal::bounds_report(g, r, bopt);
                violated = violated || report_violates(rep);
                reports.push_back(oal::json_of(rep));
            }
            j["reports"] = reports;
            if (format == "table") {
                for (const auto& rep : j["reports"]) {
                    std::cout << "r: " << rep["r"] << "   exact: " << (rep["exact"].is_null() ? "-" : rep["exact"].dump())
                              << "\n";
                    std::cout << oal::render_table(rep["entries"]) << "\n";
                }
            } else {
                emit(j, format);
            }
            return violated ? exit_violation : exit_ok;
        }

        if (witness->parsed()) {
            const oal::Graph g = load_graph(file);
            if (rspec == "all") throw std::invalid_argument("witness needs an integer -r");
            const int r = std::stoi(rspec);
            ojson j = with_schema("witness");
            j["r"] = r;
            ojson certs = ojson::array();
            const bool all = construction == "all";
            if ((all && r >= 2 - g.min_degree() && r <= g.min_degree()) || construction == "thm31")
                certs.push_back(oal::json_of(oal::thm31_witness(g, r)));
            if ((all && r >= 1) || construction == "thm32") {
                const oal::VertexSet h =
                    setcsv.empty() ? oal::min_k_dominating(g, r, sopt).witness : set_from_csv(setcsv, g.order());
                certs.push_back(oal::json_of(oal::thm32_witness(g, r, h)));
            }
            if ((all && r <= g.min_degree() && g.edge_count() > 0) || construction == "independent_complement")
                certs.push_back(oal::json_of(oal::independent_complement_witness(g, r)));
            j["certificates"] = certs;
            emit(j, format);
            return exit_ok;
        }

        if (reduce->parsed()) {
            const oal::Graph g = load_graph(file);
            if (rspec == "all") throw std::invalid_argument("reduce needs an integer -r");
            const int r = std::stoi(rspec);
            const oal::ReductionArtifact art = [&] {
                if (kind == "downshift") return oal::oa_downshift_gadget(g, r, gadget_budget);
                if (kind == "goa-low") return oal::goa_gadget_low(g, r, gadget_budget);
                if (kind == "goa-high") return oal::goa_gadget_high(g, r, gadget_budget);
                throw std::invalid_argument("unknown gadget kind: " + kind);
            }();
            ojson j = with_schema("reduce");
            j.update(oal::json_of(art));
            if (format == "table") {
                std::cout << j["edge_list"].get<std::string>() << "\n";
                for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it)
                    std::cout << it.key() << "\t" << it.value().get<std::string>() << "\n";
            } else {
                emit(j, format);
            }
            return exit_ok;
        }

        if (gen->parsed()) {
            fp.seed = seed;
            std::cout << oal::serialize_edge_list(oal::generate(family, fp));
            return exit_ok;
        }

        if (bench->parsed()) {
            oal::CorpusSpec cs;
            cs.seed = seed;
            cs.jobs = jobs;
            cs.solver_budget = budget;
            cs.timeout_s = timeout;
            if (rspec != "all") cs.r_list = parse_csv_ints(rspec);
            std::stringstream fs(famcsv);
            for (std::string tok; std::getline(fs, tok, ',');)
                if (!tok.empty()) cs.families.push_back(tok);
            const oal::BenchOutcome out = oal::run_corpus(cs);
            if (format == "table") {
                std::cout << oal::render_table(out.json["rows"]);
                std::cout << "\nsummary:\n" << oal::render_table(out.json["summary"]);
            } else if (format == "csv") {
                std::cout << csv_of_rows(out.json["rows"]);
            } else {
                std::cout << out.json.dump(2) << "\n";
            }
            return out.violations ? exit_violation : exit_ok;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::logic_error& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return exit_violation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
