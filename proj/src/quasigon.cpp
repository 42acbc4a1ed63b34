#include "levigon/quasigon.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <json.hpp>

#include "levigon/poly.hpp"
#include "parallel.hpp"

namespace levigon {

QuasiGon line_sequence(const Plane& p, std::vector<uint16_t> points) {
    const int k = static_cast<int>(points.size());
    if (k < 3) throw std::invalid_argument("quasi-gons need at least 3 points");
    for (int i = 0; i < k; ++i) {
        if (points[i] >= p.N) throw std::invalid_argument("point index out of range");
        for (int j = i + 1; j < k; ++j)
            if (points[i] == points[j]) throw std::invalid_argument("points must be pairwise distinct");
    }
    QuasiGon qg;
    qg.points = std::move(points);
    qg.line_seq.resize(k);
    for (int i = 0; i < k; ++i) qg.line_seq[i] = p.line_through(qg.points[i], qg.points[(i + 1) % k]);
    std::vector<uint16_t> distinct(qg.line_seq);
    std::sort(distinct.begin(), distinct.end());
    qg.j = static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
    return qg;
}

IncidenceSubgraph gamma_of(const Plane&, const QuasiGon& qg) {
    const int k = qg.k();
    IncidenceSubgraph g;
    g.points = qg.points;
    std::sort(g.points.begin(), g.points.end());
    g.lines = qg.line_seq;
    std::sort(g.lines.begin(), g.lines.end());
    g.lines.erase(std::unique(g.lines.begin(), g.lines.end()), g.lines.end());
    for (int i = 0; i < k; ++i) {
        const uint16_t before = qg.line_seq[(i + k - 1) % k];
        const uint16_t after = qg.line_seq[i];
        g.edges.emplace_back(qg.points[i], before);
        if (after != before) g.edges.emplace_back(qg.points[i], after);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

QuasiGon apply_perm(const Plane& p, const std::vector<int>& sigma, const QuasiGon& qg) {
    const int k = qg.k();
    if (static_cast<int>(sigma.size()) != k) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> hit(k, false);
    for (int v : sigma) {
        if (v < 0 || v >= k || hit[v]) throw std::invalid_argument("not a bijection on 0..k-1");
        hit[v] = true;
    }
    std::vector<uint16_t> pts(k);
    for (int i = 0; i < k; ++i) pts[i] = qg.points[sigma[i]];
    return line_sequence(p, std::move(pts));
}

bool equivalent(const Plane& p, const QuasiGon& a, const QuasiGon& b) {
    if (a.k() != b.k()) throw std::invalid_argument("quasi-gons of different length");
    return gamma_of(p, a) == gamma_of(p, b);
}

std::vector<std::vector<int>> dihedral_group(int k) {
    std::vector<std::vector<int>> out;
    for (int shift = 0; shift < k; ++shift) {
        std::vector<int> rot(k), rotrev(k);
        for (int i = 0; i < k; ++i) {
            rot[i] = (i + shift) % k;
            rotrev[i] = ((k - 1 - i) + shift) % k;
        }
        out.push_back(std::move(rot));
        out.push_back(std::move(rotrev));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<int>> symmetry_group(const Plane& p, const QuasiGon& qg) {
    const int k = qg.k();
    if (k > 8) throw std::invalid_argument("stabilizer enumeration is limited to k <= 8");

    // edge sets as sorted (point << 16 | line) words; the point sets always
    // agree and the line set is determined by the edges, so edge equality
    // is graph equality
    auto edge_key = [](uint16_t pt, uint16_t ln) {
        return (static_cast<uint32_t>(pt) << 16) | ln;
    };
    const IncidenceSubgraph base = gamma_of(p, qg);
    std::vector<uint32_t> base_edges;
    for (const auto& [pt, ln] : base.edges) base_edges.push_back(edge_key(pt, ln));

    std::vector<int> sigma(k);
    for (int i = 0; i < k; ++i) sigma[i] = i;
    std::vector<uint16_t> pts(k), ls(k);
    std::vector<uint32_t> edges;
    edges.reserve(2 * k);
    std::vector<std::vector<int>> out;
    do {
        for (int i = 0; i < k; ++i) pts[i] = qg.points[sigma[i]];
        for (int i = 0; i < k; ++i) ls[i] = p.pair_row(pts[i])[pts[(i + 1) % k]];
        edges.clear();
        for (int i = 0; i < k; ++i) {
            const uint16_t before = ls[(i + k - 1) % k];
            const uint16_t after = ls[i];
            edges.push_back(edge_key(pts[i], before));
            if (after != before) edges.push_back(edge_key(pts[i], after));
        }
        std::sort(edges.begin(), edges.end());
        if (edges == base_edges) out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

Blocks maximal_blocks(const QuasiGon& qg) {
    const int k = qg.k();
    Blocks b;
    if (qg.j == 1) {
        b.single_block = true;
        return b;
    }
    // start at a cyclic boundary so runs do not wrap
    int start = -1;
    for (int i = 0; i < k; ++i)
        if (qg.line_seq[i] != qg.line_seq[(i + k - 1) % k]) {
            start = i;
            break;
        }
    int i = 0;
    while (i < k) {
        int len = 1;
        while (i + len < k && qg.line_seq[(start + i + len) % k] == qg.line_seq[(start + i) % k]) ++len;
        b.run_lengths.push_back(len);
        i += len;
    }
    return b;
}

BigInt Census::total() const {
    BigInt t = 0;
    for (int j = 1; j <= k; ++j) t += Q[j];
    return t;
}

BigInt Census::a_gamma() const {
    if (A % (2 * k) != 0) throw std::logic_error("adjacent-equal class size is not divisible by 2k");
    return A / (2 * k);
}

namespace {

// Exhaustive ordered-tuple walk for one (P1, P2) prefix. lseq holds the
// lines placed so far; jpart counts distinct lines among them and adjeq
// records whether two consecutive ones coincided.
struct CensusDfs {
    const Plane& p;
    int k;
    int N;
    const uint16_t* closing = nullptr;
    std::vector<uint64_t> used;
    std::array<uint16_t, 20> lseq{};
    std::vector<uint64_t> Q;  // [0..k]
    uint64_t A = 0, B = 0;

    CensusDfs(const Plane& plane, int kk)
        : p(plane), k(kk), N(plane.N), used((plane.N + 63) / 64, 0), Q(kk + 1, 0) {}

    bool pt_used(uint32_t v) const { return (used[v >> 6] >> (v & 63)) & 1; }

    void run(uint32_t a, uint32_t b) {
        closing = p.pair_row(static_cast<uint16_t>(a));
        std::fill(used.begin(), used.end(), 0);
        used[a >> 6] |= 1ull << (a & 63);
        used[b >> 6] |= 1ull << (b & 63);
        lseq[0] = closing[b];
        extend(b, 2, 1, false);
    }

    void extend(uint32_t cur, int depth, int jpart, bool adjeq) {
        const uint16_t* prow = p.pair_row(static_cast<uint16_t>(cur));
        if (depth == k) {
            const uint16_t lc = closing[cur];
            bool fresh = true;
            for (int i = 0; i < k - 1; ++i)
                if (lseq[i] == lc) {
                    fresh = false;
                    break;
                }
            const int j = jpart + (fresh ? 1 : 0);
            ++Q[j];
            if (j == k - 1) {
                if (adjeq || lseq[k - 2] == lc || lc == lseq[0])
                    ++A;
                else
                    ++B;
            }
            return;
        }
        for (uint32_t w = 0; w < static_cast<uint32_t>(N); ++w) {
            if (pt_used(w)) continue;
            const uint16_t l = prow[w];
            bool fresh = true;
            for (int i = 0; i < depth - 1; ++i)
                if (lseq[i] == l) {
                    fresh = false;
                    break;
                }
            lseq[depth - 1] = l;
            used[w >> 6] |= 1ull << (w & 63);
            extend(w, depth + 1, jpart + (fresh ? 1 : 0), adjeq || l == lseq[depth - 2]);
            used[w >> 6] &= ~(1ull << (w & 63));
        }
    }
};

}  // namespace

Census census(const Plane& p, int k, int threads, const BigInt& budget) {
    if (k < 3) throw std::invalid_argument("census needs k >= 3");
    if (k > 16) throw std::invalid_argument("census is limited to k <= 16");
    const BigInt tuples = falling_factorial(BigInt(p.N), k);
    if (tuples > budget) throw BudgetExceeded(tuples, budget);

    Census c;
    c.n = p.n;
    c.k = k;
    c.Q.assign(k + 1, BigInt(0));
    if (k > p.N) return c;  // no tuples at all

    const int N = p.N;
    struct Acc {
        std::vector<uint64_t> Q;
        uint64_t A = 0, B = 0;
    };
    const size_t tasks = static_cast<size_t>(N) * (N - 1);
    auto per_task = detail::run_tasks<Acc>(tasks, threads, [&p, k, N](size_t t) {
        const uint32_t a = static_cast<uint32_t>(t / (N - 1));
        uint32_t b = static_cast<uint32_t>(t % (N - 1));
        if (b >= a) ++b;
        CensusDfs dfs(p, k);
        dfs.run(a, b);
        return Acc{std::move(dfs.Q), dfs.A, dfs.B};
    });
    for (const auto& acc : per_task) {
        for (int j = 0; j <= k; ++j) c.Q[j] += acc.Q[j];
        c.A += acc.A;
        c.B += acc.B;
    }

    if (c.Q[0] != 0) throw std::logic_error("census produced a tuple with no lines");
    if (c.total() != tuples) throw std::logic_error("census does not partition the tuple set");
    if (c.Q[1] != BigInt(N) * falling_factorial(BigInt(p.n + 1), k))
        throw std::logic_error("single-line class has the wrong size");
    if (c.Q[k] % (2 * k) != 0) throw std::logic_error("gon class size is not divisible by 2k");
    if (c.A % (2 * k) != 0) throw std::logic_error("adjacent-equal class size is not divisible by 2k");
    if (c.Q[k - 1] != c.A + c.B) throw std::logic_error("A/B split does not partition Q[k-1]");
    return c;
}

std::map<std::vector<uint16_t>, uint64_t> census_line_sequences(const Plane& p, int k, const BigInt& budget) {
    if (k < 3) throw std::invalid_argument("census needs k >= 3");
    const BigInt tuples = falling_factorial(BigInt(p.N), k);
    if (tuples > budget) throw BudgetExceeded(tuples, budget);
    std::map<std::vector<uint16_t>, uint64_t> out;
    std::vector<uint16_t> tup, lines(k);
    std::vector<bool> used(p.N, false);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            for (int i = 0; i < k; ++i) lines[i] = p.line_through(tup[i], tup[(i + 1) % k]);
            ++out[lines];
            return;
        }
        for (int w = 0; w < p.N; ++w) {
            if (used[w]) continue;
            used[w] = true;
            tup.push_back(static_cast<uint16_t>(w));
            self(self, depth + 1);
            tup.pop_back();
            used[w] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::string census_json(const Census& c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["k"] = c.k;
    nlohmann::json q;
    for (int i = 1; i <= c.k; ++i) q[std::to_string(i)] = c.Q[i].str();
    j["Q"] = q;
    j["A_k"] = c.A.str();
    j["B_k"] = c.B.str();
    return j.dump();
}

bool BoundReport::all_pass() const {
    for (const auto& i : items)
        if (i.status == BoundStatus::fail) return false;
    return true;
}

BoundReport check_bounds(const Census& c, const BigInt& c_prev) {
    const int n = c.n, k = c.k;
    const BigInt N = BigInt(n) * n + n + 1;
    BoundReport rep;
    const bool bracket_ok = n >= k && k >= 4;

    auto push = [&rep](std::string name, const BigInt& lhs, std::string rel, const BigInt& rhs, bool applicable) {
        BoundItem item;
        item.name = std::move(name);
        item.lhs = lhs.str();
        item.relation = std::move(rel);
        item.rhs = rhs.str();
        if (!applicable)
            item.status = BoundStatus::not_applicable;
        else if (item.relation == "<=")
            item.status = lhs <= rhs ? BoundStatus::pass : BoundStatus::fail;
        else
            item.status = lhs == rhs ? BoundStatus::pass : BoundStatus::fail;
        rep.items.push_back(std::move(item));
    };

    const BigInt a_gamma = c.A % (2 * k) == 0 ? c.A / (2 * k) : BigInt(-1);
    push("A-bracket-lower", BigInt(n - k + 2) * (k - 1) * c_prev, "<=", a_gamma, bracket_ok);
    push("A-bracket-upper", a_gamma, "<=", BigInt(n - 1) * (k - 1) * c_prev, bracket_ok);
    push("B-bound", c.B, "<=", BigInt(k - 1) * (k - 2) * falling_factorial(N, k - 1), k >= 4);
    push("Q1-exact", c.Q[1], "==", N * falling_factorial(BigInt(n + 1), k), true);
    for (int j = 2; j <= k - 2; ++j) {
        BigInt rhs = boost::multiprecision::pow(BigInt(j), k - j);
        rhs *= falling_factorial(BigInt(k), j);
        rhs *= binomial(N, j);
        rhs *= boost::multiprecision::pow(BigInt(n - 1), k - j);
        push("Qj-bound-j" + std::to_string(j), c.Q[j], "<=", rhs, bracket_ok);
    }
    return rep;
}

std::string bound_report_json(const BoundReport& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& i : r.items) {
        const char* st = i.status == BoundStatus::pass ? "pass"
                         : i.status == BoundStatus::fail ? "fail"
                                                         : "not_applicable";
        arr.push_back({{"name", i.name}, {"lhs", i.lhs}, {"relation", i.relation}, {"rhs", i.rhs}, {"status", st}});
    }
    nlohmann::json j;
    j["items"] = arr;
    j["ok"] = r.all_pass();
    return j.dump();
}

}  // namespace levigon
