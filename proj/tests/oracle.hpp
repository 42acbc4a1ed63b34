// Independent reference computations used only by tests. These deliberately
// avoid the library's counting paths: cycles are counted by enumerating all
// ordered closed sequences and dividing by 2L, and plane incidence is
// resolved by scanning the raw line lists instead of the pair matrix.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "levigon/levi.hpp"
#include "levigon/plane.hpp"

namespace oracle {

// number of L-cycles = (ordered closed sequences of L distinct adjacent
// vertices) / 2L
inline uint64_t brute_cycle_count(const levigon::SimpleGraph& g, int L) {
    uint64_t ordered = 0;
    std::vector<uint32_t> path;
    std::vector<bool> used(g.V, false);
    auto rec = [&](auto&& self, uint32_t cur, int depth) -> void {
        if (depth == L) {
            if (g.adjacent(cur, path[0])) ++ordered;
            return;
        }
        for (uint32_t w : g.adj[cur]) {
            if (used[w]) continue;
            used[w] = true;
            path.push_back(w);
            self(self, w, depth + 1);
            path.pop_back();
            used[w] = false;
        }
    };
    for (uint32_t s = 0; s < g.V; ++s) {
        used[s] = true;
        path.assign(1, s);
        rec(rec, s, 1);
        used[s] = false;
    }
    return ordered / (2 * static_cast<uint64_t>(L));
}

// unique line through two points found by scanning the raw line lists
inline int line_by_scan(const levigon::Plane& p, uint16_t a, uint16_t b) {
    for (int li = 0; li < p.N; ++li) {
        bool ha = false, hb = false;
        for (uint16_t pt : p.lines[li]) {
            ha = ha || pt == a;
            hb = hb || pt == b;
        }
        if (ha && hb) return li;
    }
    return -1;
}

struct CensusOracle {
    std::vector<uint64_t> Q;  // [0..k]
    uint64_t A = 0, B = 0;
};

// exhaustive ordered-tuple classification using only line-list scans
inline CensusOracle census_by_scan(const levigon::Plane& p, int k) {
    CensusOracle out;
    out.Q.assign(k + 1, 0);
    std::vector<uint16_t> tup;
    std::vector<bool> used(p.N, false);
    std::vector<int> ls(k);
    auto classify = [&]() {
        for (int i = 0; i < k; ++i) ls[i] = line_by_scan(p, tup[i], tup[(i + 1) % k]);
        int j = 0;
        for (int i = 0; i < k; ++i) {
            bool fresh = true;
            for (int t = 0; t < i; ++t) fresh = fresh && ls[t] != ls[i];
            if (fresh) ++j;
        }
        ++out.Q[j];
        if (j == k - 1) {
            bool adj = false;
            for (int i = 0; i < k; ++i) adj = adj || ls[i] == ls[(i + 1) % k];
            if (adj)
                ++out.A;
            else
                ++out.B;
        }
    };
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(tup.size()) == k) {
            classify();
            return;
        }
        for (int w = 0; w < p.N; ++w) {
            if (used[w]) continue;
            used[w] = true;
            tup.push_back(static_cast<uint16_t>(w));
            self(self);
            tup.pop_back();
            used[w] = false;
        }
    };
    rec(rec);
    return out;
}

}  // namespace oracle
