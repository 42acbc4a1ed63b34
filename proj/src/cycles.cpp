#include "levigon/cycles.hpp"

#include <chrono>
#include <deque>

#include <json.hpp>

#include "parallel.hpp"

namespace levigon {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool is_bipartite(const SimpleGraph& g) {
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
                    return false;
                }
            }
        }
    }
    return true;
}

// Canonical-rooted simple-path DFS for one root: all path vertices exceed
// the root, and the first step must be smaller than the last vertex when
// the cycle closes. dist[] (BFS distance from the root within {v >= root})
// prunes paths that cannot return in the remaining steps.
struct RootedCycleDfs {
    const SimpleGraph& g;
    int L;
    uint32_t root = 0;
    uint32_t first = 0;
    std::vector<uint64_t> visited;
    std::vector<int> dist;
    uint64_t count = 0;

    explicit RootedCycleDfs(const SimpleGraph& graph, int len)
        : g(graph), L(len), visited(graph.words, 0), dist(graph.V, 0) {}

    bool seen(uint32_t v) const { return (visited[v >> 6] >> (v & 63)) & 1; }
    void mark(uint32_t v) { visited[v >> 6] |= 1ull << (v & 63); }
    void unmark(uint32_t v) { visited[v >> 6] &= ~(1ull << (v & 63)); }

    void run(uint32_t r) {
        root = r;
        std::fill(dist.begin(), dist.end(), L + 1);
        std::deque<uint32_t> q{r};
        dist[r] = 0;
        while (!q.empty()) {
            const uint32_t u = q.front();
            q.pop_front();
            if (dist[u] >= L) break;
            for (uint32_t w : g.adj[u])
                if (w >= r && dist[w] > dist[u] + 1) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
        }
        std::fill(visited.begin(), visited.end(), 0);
        mark(r);
        for (uint32_t w : g.adj[r]) {
            if (w <= r || dist[w] > L - 1) continue;
            first = w;
            mark(w);
            extend(w, 1);
            unmark(w);
        }
    }

    void extend(uint32_t u, int depth) {
        if (depth == L - 1) {
            if (first < u && g.adjacent(u, root)) ++count;
            return;
        }
        const int rem = L - depth - 1;
        for (uint32_t w : g.adj[u]) {
            if (w <= root || seen(w) || dist[w] > rem) continue;
            mark(w);
            extend(w, depth + 1);
            unmark(w);
        }
    }
};

// Plane-native k-gon DFS for one (P1, P2) prefix: points after P1 are
// arbitrary distinct points above P1, consecutive connecting lines must all
// differ; the last point additionally exceeds P2 and closes on an unused
// line. Counts each k-gon exactly once.
struct GonDfs {
    const Plane& p;
    int k;
    int N;
    const uint16_t* closing;  // pair row of P1
    uint32_t P1 = 0, P2 = 0;
    std::vector<uint64_t> used_pt;
    std::vector<uint64_t> used_ln;
    uint64_t count = 0;

    GonDfs(const Plane& plane, int kk)
        : p(plane), k(kk), N(plane.N), closing(nullptr), used_pt((plane.N + 63) / 64, 0),
          used_ln((plane.N + 63) / 64, 0) {}

    bool pt_used(uint32_t v) const { return (used_pt[v >> 6] >> (v & 63)) & 1; }
    bool ln_used(uint32_t l) const { return (used_ln[l >> 6] >> (l & 63)) & 1; }

    void run(uint32_t a, uint32_t b) {
        P1 = a;
        P2 = b;
        closing = p.pair_row(static_cast<uint16_t>(a));
        std::fill(used_pt.begin(), used_pt.end(), 0);
        std::fill(used_ln.begin(), used_ln.end(), 0);
        used_pt[a >> 6] |= 1ull << (a & 63);
        used_pt[b >> 6] |= 1ull << (b & 63);
        const uint16_t l1 = closing[b];
        used_ln[l1 >> 6] |= 1ull << (l1 & 63);
        extend(b, 2);
    }

    void extend(uint32_t cur, int depth) {
        const uint16_t* prow = p.pair_row(static_cast<uint16_t>(cur));
        if (depth == k - 1) {
            for (uint32_t w = P2 + 1; w < static_cast<uint32_t>(N); ++w) {
                if (pt_used(w)) continue;
                const uint16_t l = prow[w];
                if (ln_used(l)) continue;
                const uint16_t lc = closing[w];
                if (lc == l || ln_used(lc)) continue;
                ++count;
            }
            return;
        }
        for (uint32_t w = P1 + 1; w < static_cast<uint32_t>(N); ++w) {
            if (pt_used(w)) continue;
            const uint16_t l = prow[w];
            if (ln_used(l)) continue;
            used_pt[w >> 6] |= 1ull << (w & 63);
            used_ln[l >> 6] |= 1ull << (l & 63);
            extend(w, depth + 1);
            used_pt[w >> 6] &= ~(1ull << (w & 63));
            used_ln[l >> 6] &= ~(1ull << (l & 63));
        }
    }
};

}  // namespace

BigInt work_estimate(int n, int k) {
    return boost::multiprecision::pow(BigInt(n), 2 * k) / (2 * k);
}

CycleCount count_cycles_graph(const SimpleGraph& g, int L, int threads) {
    if (L > 20) throw std::invalid_argument("cycle length above 20 is not supported");
    if (L < 3) throw std::invalid_argument("cycle length must be >= 3");
    const auto t0 = Clock::now();
    CycleCount out;
    out.L = L;
    out.k = L / 2;
    out.algo = "graph-dfs";
    if (L % 2 == 1 && is_bipartite(g)) {
        out.count = 0;
        out.odd_length_on_bipartite = true;
        out.seconds = elapsed(t0);
        return out;
    }
    auto per_root = detail::run_tasks<uint64_t>(g.V, threads, [&g, L](size_t r) {
        RootedCycleDfs dfs(g, L);
        dfs.run(static_cast<uint32_t>(r));
        return dfs.count;
    });
    BigInt total = 0;
    for (uint64_t c : per_root) total += c;
    out.count = std::move(total);
    out.seconds = elapsed(t0);
    return out;
}

CycleCount count_gons(const Plane& p, int k, int threads) {
    if (k < 3) throw std::invalid_argument("k-gons need k >= 3");
    const auto t0 = Clock::now();
    CycleCount out;
    out.n = p.n;
    out.k = k;
    out.L = 2 * k;
    out.algo = "plane-gon-dfs";
    if (k > p.N) {
        out.count = 0;
        out.seconds = elapsed(t0);
        return out;
    }
    const int N = p.N;
    // tasks are (P1, P2) prefixes with P1 < P2
    const size_t tasks = static_cast<size_t>(N) * (N - 1) / 2;
    auto per_task = detail::run_tasks<uint64_t>(tasks, threads, [&p, k, N](size_t t) {
        // unrank t -> (a, b), a < b
        size_t rem = t;
        uint32_t a = 0;
        size_t rowlen = static_cast<size_t>(N) - 1;
        while (rem >= rowlen) {
            rem -= rowlen;
            ++a;
            --rowlen;
        }
        const uint32_t b = a + 1 + static_cast<uint32_t>(rem);
        GonDfs dfs(p, k);
        dfs.run(a, b);
        return dfs.count;
    });
    BigInt total = 0;
    for (uint64_t c : per_task) total += c;
    out.count = std::move(total);
    out.seconds = elapsed(t0);
    return out;
}

CycleProfile cycle_profile(const Plane& p, int k_max, int threads, const BigInt& budget) {
    if (k_max < 3) throw std::invalid_argument("k_max must be >= 3");
    CycleProfile prof;
    for (int k = 3; k <= k_max; ++k) {
        if (work_estimate(p.n, k) > budget) {
            prof.truncated = true;
            prof.truncated_at_k = k;
            break;
        }
        prof.counts.push_back(count_gons(p, k, threads));
    }
    return prof;
}

std::string cycle_count_json(const CycleCount& c, bool with_seconds) {
    nlohmann::json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["count"] = c.count.str();
    j["algo"] = c.algo;
    if (with_seconds) j["seconds"] = c.seconds;
    if (c.odd_length_on_bipartite) j["warning"] = "odd cycle length on bipartite graph";
    return j.dump();
}

}  // namespace levigon
