#include "oal/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <optional>
#include <thread>

#include "oal/bounds.hpp"
#include "oal/families.hpp"
#include "oal/predicates.hpp"
#include "oal/solvers.hpp"
#include "oal/witness.hpp"

namespace oal {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<CorpusInstance> default_corpus(std::uint64_t seed) {
    std::vector<CorpusInstance> out;
    auto push = [&](std::string id, Graph g) { out.push_back({std::move(id), std::move(g)}); };

    for (int n = 2; n <= 8; ++n) push("complete_" + std::to_string(n), complete_graph(n));
    for (int n = 3; n <= 10; ++n) push("cycle_" + std::to_string(n), cycle_graph(n));
    for (int n = 2; n <= 10; ++n) push("path_" + std::to_string(n), path_graph(n));
    for (auto [a, b] : {std::pair{1, 3}, {2, 2}, {2, 3}, {3, 3}, {2, 4}})
        push("kab_" + std::to_string(a) + "_" + std::to_string(b), complete_bipartite(a, b));
    push("petersen", petersen_graph());
    push("prism", prism_graph());

    std::uint64_t state = seed;
    for (int i = 0; i < 30; ++i) {
        while (true) {
            const int n = 4 + static_cast<int>(splitmix64(state) % 9);  // 4..12
            const int d = 2 + static_cast<int>(splitmix64(state) % std::min(4, n - 2));
            if (n * d % 2) continue;
            Graph g = random_regular_graph(n, d, splitmix64(state));
            if (!g.is_connected()) continue;
            char id[48];
            std::snprintf(id, sizeof id, "rr%02d_n%d_d%d", i, n, d);
            push(id, std::move(g));
            break;
        }
    }
    return out;
}

namespace {

struct InstanceResult {
    std::vector<ojson> rows;
    int violations = 0;
};

std::optional<int> entry_value(const BoundsReport& br, const char* name) {
    const BoundEntry* e = br.find(name);
    if (e && e->applicable) return e->value;
    return std::nullopt;
}

ojson opt_json(const std::optional<int>& v) { return v ? ojson(*v) : ojson(nullptr); }

InstanceResult run_instance(const CorpusInstance& inst, const CorpusSpec& spec) {
    const Graph& g = inst.graph;
    InstanceResult res;

    SolveOptions sopt;
    sopt.time_limit_s = spec.timeout_s;

    const RRange range = valid_r_range(g);
    std::vector<int> rs;
    if (spec.r_list.empty()) {
        for (int r = range.lo; r <= range.hi; ++r) rs.push_back(r);
    } else {
        for (int r : spec.r_list)
            if (range.contains(r)) rs.push_back(r);
    }

    const int n = g.order();
    const int delta = g.min_degree();
    const int gamma_dom = min_dominating(g, sopt).optimum;

    std::optional<int> prev_a, prev_gamma;
    for (int r : rs) {
        ojson row;
        row["id"] = inst.id;
        row["n"] = n;
        row["m"] = g.edge_count();
        row["delta"] = delta;
        row["r"] = r;

        const int a = min_offensive_alliance(g, r, sopt).optimum;
        const int gamma = min_global_offensive_alliance(g, r, sopt).optimum;
        row["a"] = a;
        row["gamma"] = gamma;

        BoundsReportOptions bopt;
        bopt.with_exact = false;
        bopt.solve = sopt;
        BoundsReport br = bounds_report(g, r, bopt);
        br.exact = gamma;

        const auto deg_lower = entry_value(br, "degree_lower");
        const auto upper_printed = entry_value(br, "degree_upper_printed");
        const auto upper_proof = entry_value(br, "degree_upper_proof");
        const auto spec_lower = entry_value(br, "spectral_lower");
        const auto kdom = entry_value(br, "kdom_upper");
        const auto cockayne = entry_value(br, "cockayne_upper");
        const auto sw_lower = entry_value(br, "sandwich_lower");
        const auto sw_upper = entry_value(br, "sandwich_upper");
        row["degree_lower"] = opt_json(deg_lower);
        row["spectral_lower"] = opt_json(spec_lower);
        row["sandwich_lower"] = opt_json(sw_lower);
        row["degree_upper_printed"] = opt_json(upper_printed);
        row["degree_upper_proof"] = opt_json(upper_proof);
        row["kdom_upper"] = opt_json(kdom);
        row["cockayne_upper"] = opt_json(cockayne);
        row["sandwich_upper"] = opt_json(sw_upper);

        std::optional<int> w31, w32, wic;
        if (r >= 2 - delta && r <= delta) w31 = static_cast<int>(thm31_witness(g, r).witness.size());
        if (r >= 1) {
            const VertexSet h = min_k_dominating(g, r, sopt).witness;
            w32 = static_cast<int>(thm32_witness(g, r, h).witness.size());
        }
        if (r <= delta && g.edge_count() > 0) wic = static_cast<int>(independent_complement_witness(g, r).witness.size());
        row["w_thm31"] = opt_json(w31);
        row["w_thm32"] = opt_json(w32);
        row["w_indep"] = opt_json(wic);

        ojson bad = ojson::array();
        auto check_lower = [&](const char* name, const std::optional<int>& v) {
            if (v && *v > gamma) bad.push_back(name);
        };
        auto check_upper = [&](const char* name, const std::optional<int>& v) {
            if (v && *v < gamma) bad.push_back(name);
        };
        check_lower("degree_lower", deg_lower);
        check_lower("spectral_lower", spec_lower);
        check_lower("sandwich_lower", sw_lower);
        check_upper("degree_upper_proof", upper_proof);
        check_upper("kdom_upper", kdom);
        check_upper("cockayne_upper", cockayne);
        check_upper("sandwich_upper", sw_upper);
        check_upper("w_thm31", w31);
        check_upper("w_thm32", w32);
        check_upper("w_indep", wic);
        if (a > gamma) bad.push_back("a_le_gamma");
        if (gamma < gamma_dom) bad.push_back("gamma_ge_domination");
        if (w31 && *w31 != n - floor_half(delta - r + 2)) bad.push_back("thm31_size");
        if (prev_a && a < *prev_a) bad.push_back("monotone_a");
        if (prev_gamma && gamma < *prev_gamma) bad.push_back("monotone_gamma");
        prev_a = a;
        prev_gamma = gamma;

        row["printed_upper_violated"] = upper_printed && *upper_printed < gamma;

        int best_lower = 0, best_upper = n + 1;
        for (auto v : {deg_lower, spec_lower, sw_lower})
            if (v) best_lower = std::max(best_lower, *v);
        for (auto v : {upper_proof, kdom, cockayne, sw_upper})
            if (v) best_upper = std::min(best_upper, *v);
        row["lower_tight"] = best_lower == gamma;
        row["upper_tight"] = best_upper == gamma;

        row["violations"] = bad;
        res.violations += static_cast<int>(bad.size());
        res.rows.push_back(std::move(row));
    }
    return res;
}

InstanceResult skipped_row(const CorpusInstance& inst, const std::string& why) {
    ojson row;
    row["id"] = inst.id;
    row["n"] = inst.graph.order();
    row["skipped"] = true;
    row["note"] = why;
    InstanceResult res;
    res.rows.push_back(std::move(row));
    return res;
}

}  // namespace

BenchOutcome run_corpus(const CorpusSpec& spec) {
    std::vector<CorpusInstance> corpus = default_corpus(spec.seed);
    if (!spec.families.empty()) {
        std::erase_if(corpus, [&](const CorpusInstance& inst) {
            for (const std::string& f : spec.families)
                if (inst.id.rfind(f, 0) == 0) return false;
            return true;
        });
    }
    std::vector<InstanceResult> results(corpus.size());

    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (size_t i; (i = cursor.fetch_add(1)) < corpus.size();) {
            if (corpus[i].graph.order() > spec.solver_budget) {
                results[i] = skipped_row(corpus[i], "exceeds solver budget");
                continue;
            }
            try {
                results[i] = run_instance(corpus[i], spec);
            } catch (const SolveTimeout&) {
                results[i] = skipped_row(corpus[i], "timeout");
            }
        }
    };
    const int jobs = std::max(1, spec.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    ojson rows = ojson::array();
    int violations = 0, skipped = 0, printed_violations = 0, lower_tight = 0, upper_tight = 0;
    bool k5_row_seen = false, k5_regression = false;
    for (size_t i = 0; i < corpus.size(); ++i) {
        violations += results[i].violations;
        for (auto& row : results[i].rows) {
            if (row.contains("skipped")) ++skipped;
            const bool is_k5_r1 = !row.contains("skipped") && row["id"] == "complete_5" && row["r"] == 1;
            k5_row_seen = k5_row_seen || is_k5_r1;
            if (row.value("printed_upper_violated", false)) {
                ++printed_violations;
                if (is_k5_r1) k5_regression = true;
            }
            if (row.value("lower_tight", false)) ++lower_tight;
            if (row.value("upper_tight", false)) ++upper_tight;
            rows.push_back(std::move(row));
        }
    }
    if (k5_row_seen && !k5_regression) ++violations;  // fidelity regression: K5/r=1 must violate the printed form

    ojson j;
    j["schema"] = 1;
    j["spec"] = {{"seed", spec.seed},
                 {"families", spec.families.empty() ? ojson("all") : ojson(spec.families)},
                 {"r_policy", spec.r_list.empty() ? ojson("all") : ojson(spec.r_list)},
                 {"solver_budget", spec.solver_budget},
                 {"timeout_s", spec.timeout_s}};
    j["rows"] = rows;
    j["summary"] = {{"rows", rows.size()},      {"skipped", skipped},
                    {"violations", violations}, {"printed_upper_violations", printed_violations},
                    {"printed_regression_ok", !k5_row_seen || k5_regression},
                    {"lower_tight", lower_tight}, {"upper_tight", upper_tight}};

    BenchOutcome out;
    out.json = std::move(j);
    out.violations = violations;
    return out;
}

}  // namespace oal
