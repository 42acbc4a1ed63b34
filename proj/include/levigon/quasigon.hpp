#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "levigon/bigint.hpp"
#include "levigon/cycles.hpp"
#include "levigon/plane.hpp"

namespace levigon {

/// Ordered sequence of k distinct points with its derived cyclic line
/// sequence (line_seq[i] joins points[i] and points[(i+1) % k]) and the
/// number j of distinct lines. j = k exactly when the sequence is a k-gon.
struct QuasiGon {
    std::vector<uint16_t> points;
    std::vector<uint16_t> line_seq;
    int j = 0;
    int k() const { return static_cast<int>(points.size()); }
};

QuasiGon line_sequence(const Plane& p, std::vector<uint16_t> points);

/// Incidence subgraph of a quasi-gon: point vertices, the distinct lines,
/// and edges joining points[i] to the lines adjacent to it in the sequence
/// (one edge only when the two flanking lines coincide). Stored in
/// canonical sorted form so equality is set equality.
struct IncidenceSubgraph {
    std::vector<uint16_t> points;
    std::vector<uint16_t> lines;
    std::vector<std::pair<uint16_t, uint16_t>> edges;  // (point, line)
    bool operator==(const IncidenceSubgraph&) const = default;
};

IncidenceSubgraph gamma_of(const Plane& p, const QuasiGon& qg);

/// sigma is 0-based: result.points[i] = qg.points[sigma[i]].
QuasiGon apply_perm(const Plane& p, const std::vector<int>& sigma, const QuasiGon& qg);

bool equivalent(const Plane& p, const QuasiGon& a, const QuasiGon& b);

/// All 2k index permutations generated by the cyclic shift and reversal.
std::vector<std::vector<int>> dihedral_group(int k);

/// Full stabilizer of the incidence subgraph under index permutation,
/// enumerated over all k! permutations; k <= 8.
std::vector<std::vector<int>> symmetry_group(const Plane& p, const QuasiGon& qg);

/// Cyclic partition of the line sequence into maximal runs of equal lines.
struct Blocks {
    bool single_block = false;        // j == 1: one cyclic run, no boundary
    std::vector<int> run_lengths;     // sums to k when j >= 2
};

Blocks maximal_blocks(const QuasiGon& qg);

/// Exhaustive classification of all N_(k) ordered k-tuples of distinct
/// points by their number of distinct lines, with the adjacent-equal /
/// no-adjacent-equal split of Q[k-1].
struct Census {
    int n = 0;
    int k = 0;
    std::vector<BigInt> Q;  // Q[j] for j = 1..k (Q[0] unused)
    BigInt A = 0;           // members of Q[k-1] with two equal consecutive lines
    BigInt B = 0;           // the rest of Q[k-1]
    BigInt total() const;
    BigInt a_gamma() const;  // A / 2k (exact)
};

Census census(const Plane& p, int k, int threads = 0, const BigInt& budget = kDefaultBudget);

/// {"n":..,"k":..,"Q":{"1":"..",..},"A_k":"..","B_k":".."}
std::string census_json(const Census& c);

/// Exhaustive single-threaded census that also groups tuples by their full
/// line sequence (test support for the same-sequence multiplicity law).
std::map<std::vector<uint16_t>, uint64_t> census_line_sequences(const Plane& p, int k,
                                                                const BigInt& budget = kDefaultBudget);

enum class BoundStatus { pass, fail, not_applicable };

struct BoundItem {
    std::string name;
    std::string lhs;
    std::string relation;
    std::string rhs;
    BoundStatus status = BoundStatus::not_applicable;
};

struct BoundReport {
    std::vector<BoundItem> items;
    bool all_pass() const;
};

/// Evaluates the A/B bracket against c_prev (the exact (k-1)-gon count),
/// the B bound, and the per-j line-sequence bounds, all in exact integers.
/// Items whose hypotheses fail (n >= k >= 4 where required) are marked
/// not applicable.
BoundReport check_bounds(const Census& c, const BigInt& c_prev);

std::string bound_report_json(const BoundReport& r);

}  // namespace levigon
