#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levigon/bigint.hpp"
#include "levigon/plane.hpp"

namespace levigon {

/// Undirected simple graph with per-vertex sorted neighbor lists and a
/// dense adjacency bitset (one row of `words` 64-bit words per vertex).
struct SimpleGraph {
    uint32_t V = 0;
    size_t words = 0;
    std::vector<std::vector<uint32_t>> adj;
    std::vector<uint64_t> bits;

    static SimpleGraph empty(uint32_t V);
    void add_edge(uint32_t u, uint32_t v);

    bool adjacent(uint32_t u, uint32_t v) const {
        return (bits[static_cast<size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1;
    }
    const uint64_t* row(uint32_t u) const { return bits.data() + static_cast<size_t>(u) * words; }
    size_t edge_count() const;
    void sort_adjacency();
};

SimpleGraph cycle_graph(int m);
SimpleGraph path_graph(int m);
SimpleGraph complete_graph(int m);

/// Point-line incidence graph of a plane: vertices 0..N-1 are points,
/// N..2N-1 are lines; (n+1)-regular, bipartite, girth 6 for n >= 2.
struct LeviGraph {
    int n = 0;
    int N = 0;
    SimpleGraph g;
};

LeviGraph build_levi(const Plane& p);

struct GirthResult {
    bool has_cycle = false;
    int girth = 0;  // meaningful only when has_cycle
};

/// Exact girth via BFS from every vertex; trees report has_cycle = false.
GirthResult girth(const SimpleGraph& g);

/// 2(n+1)^(2k) + 2(N-1)n^k: closed walks of length 2k in the Levi graph of
/// any plane of order n.
BigInt closed_walks_formula(int n, int k);

/// Trace of A^(2k) by exact integer matrix-vector products; V <= 512.
BigInt closed_walks_direct(const SimpleGraph& g, int k);

struct IdentityCheck {
    bool ok = true;
    std::string witness;
    explicit operator bool() const { return ok; }
};

/// Combinatorial content of the A^2 spectrum: same-side vertices share
/// exactly one common neighbor and every vertex has degree n+1.
IdentityCheck a_squared_identity(const LeviGraph& lg);

enum class Side { points, lines };

/// Square a C4-free bipartite graph onto one side: vertices of the side,
/// edges where a common neighbor exists. The "points" side is the one
/// containing the smallest vertex of each component. Throws if the input
/// is not bipartite or contains a C4.
SimpleGraph bipartite_square(const SimpleGraph& g, Side side);

}  // namespace levigon
