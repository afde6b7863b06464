#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oal/graph.hpp"
#include "oal/serialize.hpp"

namespace oal {

struct CorpusInstance {
    std::string id;
    Graph graph;
};

/// Deterministic benchmark corpus: complete 2..8, cycles 3..10, paths 2..10,
/// a fixed complete-bipartite set, petersen, prism, plus 30 connected random
/// regular graphs on at most 12 vertices drawn from the seed.
std::vector<CorpusInstance> default_corpus(std::uint64_t seed);

struct CorpusSpec {
    std::uint64_t seed = 1;
    std::vector<std::string> families;  // id-prefix filter; empty: whole corpus
    std::vector<int> r_list;            // empty: every valid r per instance
    int solver_budget = 18;             // instances above this order are skipped
    double timeout_s = 60;              // per instance; timeouts produce skipped rows
    int jobs = 1;                       // worker count; never affects the output bytes
};

struct BenchOutcome {
    ojson json;  // {"schema":1, "spec":..., "rows":[...], "summary":...}
    int violations = 0;
};

/// Runs every bound, exact solver, and witness construction over the corpus
/// and cross-checks all recorded inequalities row by row. The printed form
/// of the degree upper bound is tracked separately: the run itself asserts
/// that (complete_5, r=1) violates it, as a fidelity regression.
BenchOutcome run_corpus(const CorpusSpec& spec);

}  // namespace oal
