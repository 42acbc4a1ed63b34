#include "levigon/levi.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace levigon {

SimpleGraph SimpleGraph::empty(uint32_t V) {
    SimpleGraph g;
    g.V = V;
    g.words = (V + 63) / 64;
    g.adj.assign(V, {});
    g.bits.assign(static_cast<size_t>(V) * g.words, 0);
    return g;
}

void SimpleGraph::add_edge(uint32_t u, uint32_t v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u >= V || v >= V) throw std::invalid_argument("vertex out of range");
    if (adjacent(u, v)) return;
    bits[static_cast<size_t>(u) * words + (v >> 6)] |= 1ull << (v & 63);
    bits[static_cast<size_t>(v) * words + (u >> 6)] |= 1ull << (u & 63);
    adj[u].push_back(v);
    adj[v].push_back(u);
}

size_t SimpleGraph::edge_count() const {
    size_t total = 0;
    for (const auto& a : adj) total += a.size();
    return total / 2;
}

void SimpleGraph::sort_adjacency() {
    for (auto& a : adj) std::sort(a.begin(), a.end());
}

SimpleGraph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle graph needs >= 3 vertices");
    SimpleGraph g = SimpleGraph::empty(m);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    g.sort_adjacency();
    return g;
}

SimpleGraph path_graph(int m) {
    if (m < 1) throw std::invalid_argument("path graph needs >= 1 vertex");
    SimpleGraph g = SimpleGraph::empty(m);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    g.sort_adjacency();
    return g;
}

SimpleGraph complete_graph(int m) {
    SimpleGraph g = SimpleGraph::empty(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
    g.sort_adjacency();
    return g;
}

LeviGraph build_levi(const Plane& p) {
    LeviGraph lg;
    lg.n = p.n;
    lg.N = p.N;
    lg.g = SimpleGraph::empty(2 * p.N);
    for (int li = 0; li < p.N; ++li)
        for (auto pt : p.lines[li]) lg.g.add_edge(pt, static_cast<uint32_t>(p.N + li));
    lg.g.sort_adjacency();
    return lg;
}

GirthResult girth(const SimpleGraph& g) {
    // BFS from every vertex; a cross edge between different root branches
    // closes a cycle through the root of length dist[u]+dist[v]+1. The
    // minimum over all roots is exact for a globally shortest cycle.
    constexpr int INF = 1 << 30;
    int best = INF;
    std::vector<int> dist(g.V), branch(g.V);
    for (uint32_t r = 0; r < g.V; ++r) {
        std::fill(dist.begin(), dist.end(), INF);
        std::fill(branch.begin(), branch.end(), -1);
        std::deque<uint32_t> q{r};
        dist[r] = 0;
        while (!q.empty()) {
            const uint32_t u = q.front();
            q.pop_front();
            if (2 * dist[u] >= best) break;
            for (uint32_t w : g.adj[u]) {
                if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    branch[w] = u == r ? static_cast<int>(w) : branch[u];
                    q.push_back(w);
                } else if (w != r && (u == r ? static_cast<int>(w) : branch[u]) != branch[w] &&
                           dist[w] >= dist[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == INF) return {false, 0};
    return {true, best};
}

BigInt closed_walks_formula(int n, int k) {
    if (n < 2) throw std::invalid_argument("plane order must be >= 2");
    if (k < 1) throw std::invalid_argument("walk half-length must be >= 1");
    const BigInt N = BigInt(n) * n + n + 1;
    BigInt a = 2 * boost::multiprecision::pow(BigInt(n + 1), 2 * k);
    BigInt b = 2 * (N - 1) * boost::multiprecision::pow(BigInt(n), k);
    return a + b;
}

BigInt closed_walks_direct(const SimpleGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("walk half-length must be >= 1");
    if (g.V > 512) throw std::invalid_argument("closed_walks_direct limited to 512 vertices");
    BigInt trace = 0;
    std::vector<BigInt> w(g.V), next(g.V);
    for (uint32_t v = 0; v < g.V; ++v) {
        for (auto& x : w) x = 0;
        w[v] = 1;
        for (int step = 0; step < 2 * k; ++step) {
            for (uint32_t u = 0; u < g.V; ++u) {
                BigInt s = 0;
                for (uint32_t t : g.adj[u]) s += w[t];
                next[u] = std::move(s);
            }
            w.swap(next);
        }
        trace += w[v];
    }
    return trace;
}

IdentityCheck a_squared_identity(const LeviGraph& lg) {
    const SimpleGraph& g = lg.g;
    const int N = lg.N;
    for (uint32_t v = 0; v < g.V; ++v)
        if (static_cast<int>(g.adj[v].size()) != lg.n + 1)
            return {false, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.adj[v].size())};
    for (int side = 0; side < 2; ++side) {
        const uint32_t lo = side == 0 ? 0 : N;
        const uint32_t hi = side == 0 ? N : 2 * N;
        for (uint32_t u = lo; u < hi; ++u)
            for (uint32_t v = u + 1; v < hi; ++v) {
                int common = 0;
                const uint64_t* ru = g.row(u);
                const uint64_t* rv = g.row(v);
                for (size_t wd = 0; wd < g.words; ++wd) common += __builtin_popcountll(ru[wd] & rv[wd]);
                if (common != 1)
                    return {false, std::string(side == 0 ? "points " : "lines ") + std::to_string(u - lo) + "," +
                                       std::to_string(v - lo) + " have " + std::to_string(common) +
                                       " common neighbors"};
            }
    }
    return {true, ""};
}

SimpleGraph bipartite_square(const SimpleGraph& g, Side side) {
    // 2-color; color 0 goes to the smallest vertex of each component
    std::vector<int> color(g.V, -1);
    for (uint32_t s = 0; s < g.V; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<uint32_t> q{s};
        while (!q.empty()) {
            const uint32_t u = q.front();
            q.pop_front();
            for (uint32_t w : g.adj[u]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    q.push_back(w);
                } else if (color[w] == color[u]) {
                    throw std::invalid_argument("graph is not bipartite");
                }
            }
        }
    }
    const int want = side == Side::points ? 0 : 1;
    std::vector<uint32_t> verts;
    std::vector<int> local(g.V, -1);
    for (uint32_t v = 0; v < g.V; ++v)
        if (color[v] == want) {
            local[v] = static_cast<int>(verts.size());
            verts.push_back(v);
        }

    SimpleGraph sq = SimpleGraph::empty(static_cast<uint32_t>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            const uint64_t* ru = g.row(verts[i]);
            const uint64_t* rv = g.row(verts[j]);
            int common = 0;
            for (size_t wd = 0; wd < g.words; ++wd) common += __builtin_popcountll(ru[wd] & rv[wd]);
            if (common >= 2)
                throw std::invalid_argument("C4 present: squaring would create a multi-edge between " +
                                            std::to_string(verts[i]) + " and " + std::to_string(verts[j]));
            if (common == 1) sq.add_edge(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
        }
    sq.sort_adjacency();
    return sq;
}

}  // namespace levigon
