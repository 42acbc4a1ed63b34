#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "levigon/bigint.hpp"
#include "levigon/levi.hpp"
#include "levigon/plane.hpp"

namespace levigon {

struct CycleCount {
    int n = -1;  // plane order, -1 for generic graphs
    int k = 0;   // half cycle length when L is even
    int L = 0;   // cycle length counted
    BigInt count;
    std::string algo;
    double seconds = 0.0;
    bool odd_length_on_bipartite = false;
};

/// Default enumeration budget (steps); the extended suite passes 10x this.
inline const BigInt kDefaultBudget = BigInt(1000000000);

struct BudgetExceeded : std::runtime_error {
    BigInt estimate;
    BigInt budget;
    BudgetExceeded(BigInt est, BigInt bud)
        : std::runtime_error("work estimate " + est.str() + " exceeds budget " + bud.str()),
          estimate(std::move(est)),
          budget(std::move(bud)) {}
};

/// Estimated enumeration work for counting 2k-cycles at order n: n^(2k)/2k.
BigInt work_estimate(int n, int k);

/// Exact number of L-cycles (vertex sets with cyclic structure, each once).
/// Canonical rooting: the DFS root is the minimum vertex on the cycle and
/// the first step goes to the smaller of the two root neighbors. Result is
/// independent of the thread count. Odd L on a bipartite graph yields 0
/// with a warning flag; L > 20 is rejected.
CycleCount count_cycles_graph(const SimpleGraph& g, int L, int threads = 0);

/// Exact number of k-gons counted plane-natively (each gon class once:
/// P1 minimal, P2 < Pk). Equals the number of 2k-cycles of the Levi graph.
CycleCount count_gons(const Plane& p, int k, int threads = 0);

struct CycleProfile {
    std::vector<CycleCount> counts;  // k = 3..k_max while within budget
    bool truncated = false;
    int truncated_at_k = 0;
};

CycleProfile cycle_profile(const Plane& p, int k_max, int threads = 0, const BigInt& budget = kDefaultBudget);

/// {"n":..,"k":..,"count":"<decimal>","algo":..,"seconds":..}
std::string cycle_count_json(const CycleCount& c, bool with_seconds = true);

}  // namespace levigon
