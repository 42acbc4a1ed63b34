#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "levigon/cycles.hpp"
#include "levigon/gf.hpp"
#include "oracle.hpp"

using namespace levigon;

namespace {
Plane pg(int p, int e = 1) { return build_pg2(Field::make(p, e)); }

// frozen independently (exhaustive cycle enumeration over the Heawood graph)
const std::map<int, uint64_t> kHeawoodCycles = {{6, 28}, {8, 21}, {10, 84}, {12, 56}, {14, 24}};
}  // namespace

TEST_CASE("Heawood cycle profile: both algorithms and the brute oracle agree") {
    const Plane p = pg(2);
    const LeviGraph lg = build_levi(p);
    for (const auto& [L, expected] : kHeawoodCycles) {
        const CycleCount a = count_cycles_graph(lg.g, L);
        const CycleCount b = count_gons(p, L / 2);
        CHECK(a.count == expected);
        CHECK(b.count == expected);
        if (L <= 10) CHECK(oracle::brute_cycle_count(lg.g, L) == expected);
    }
}

TEST_CASE("PG(2,3): c6 = 234 and c8 = 702") {
    const Plane p = pg(3);
    const LeviGraph lg = build_levi(p);
    CHECK(count_gons(p, 3).count == 234);
    CHECK(count_gons(p, 4).count == 702);
    CHECK(count_cycles_graph(lg.g, 6).count == 234);
    CHECK(count_cycles_graph(lg.g, 8).count == 702);
    CHECK(oracle::brute_cycle_count(lg.g, 6) == 234);
}

TEST_CASE("PG(2,4): c6 = 1120 and c8 = 7560; PG(2,5): c6 = 3875") {
    CHECK(count_gons(pg(2, 2), 3).count == 1120);
    CHECK(count_gons(pg(2, 2), 4).count == 7560);
    CHECK(count_gons(pg(5), 3).count == 3875);
}

TEST_CASE("small fixtures") {
    CHECK(count_cycles_graph(cycle_graph(6), 6).count == 1);
    CHECK(count_cycles_graph(complete_graph(4), 3).count == 4);
    // complete graphs have m_(L) / 2L cycles of length L
    CHECK(count_cycles_graph(complete_graph(7), 3).count == 35);
    CHECK(count_cycles_graph(complete_graph(7), 7).count == 360);
    CHECK(count_cycles_graph(path_graph(5), 3).count == 0);
}

TEST_CASE("odd length on a bipartite graph warns and returns zero") {
    const CycleCount c = count_cycles_graph(cycle_graph(6), 5);
    CHECK(c.count == 0);
    CHECK(c.odd_length_on_bipartite);
    // odd lengths on a non-bipartite graph count normally
    const CycleCount t = count_cycles_graph(complete_graph(5), 5);
    CHECK_FALSE(t.odd_length_on_bipartite);
    CHECK(t.count == 12);  // 5!/10
}

TEST_CASE("length bounds") {
    CHECK_THROWS_AS(count_cycles_graph(complete_graph(4), 21), std::invalid_argument);
    CHECK_THROWS_AS(count_cycles_graph(complete_graph(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(count_gons(pg(2), 2), std::invalid_argument);
}

TEST_CASE("thread count never changes a count") {
    const Plane p = pg(3);
    const BigInt c1 = count_gons(p, 5, 1).count;
    const BigInt c2 = count_gons(p, 5, 2).count;
    const BigInt c3 = count_gons(p, 5, 8).count;
    CHECK(c1 == c2);
    CHECK(c1 == c3);
    const LeviGraph lg = build_levi(p);
    CHECK(count_cycles_graph(lg.g, 10, 1).count == c1);
    CHECK(count_cycles_graph(lg.g, 10, 3).count == c1);
}

TEST_CASE("counts are invariant under dualization") {
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        const Plane pl = pg(p, e);
        const Plane du = dual_plane(pl);
        CHECK(count_gons(pl, 3).count == count_gons(du, 3).count);
        CHECK(count_gons(pl, 4).count == count_gons(du, 4).count);
    }
}

TEST_CASE("profile of the Fano plane") {
    const Plane p = pg(2);
    const CycleProfile prof = cycle_profile(p, 8);
    REQUIRE(prof.counts.size() == 6);  // k = 3..8
    CHECK_FALSE(prof.truncated);
    CHECK(prof.counts[0].count == 28);
    CHECK(prof.counts[1].count == 21);
    CHECK(prof.counts[2].count == 84);
    CHECK(prof.counts[3].count == 56);
    CHECK(prof.counts[4].count == 24);
    CHECK(prof.counts[5].count == 0);  // cycles longer than the vertex count
}

TEST_CASE("profiles truncate at the work budget") {
    const CycleProfile prof = cycle_profile(pg(3), 10, 0, BigInt(100000));
    CHECK(prof.truncated);
    CHECK(prof.truncated_at_k == 6);  // 3^12/12 > 1e5
    CHECK(prof.counts.size() == 3);
}

TEST_CASE("work estimates") {
    CHECK(work_estimate(2, 8) == 4096);
    CHECK(work_estimate(8, 5) == 107374182);  // floor(8^10 / 10)
}

TEST_CASE("JSON records") {
    CycleCount c;
    c.n = 2;
    c.k = 3;
    c.L = 6;
    c.count = 28;
    c.algo = "plane-gon-dfs";
    c.seconds = 0.25;
    CHECK(cycle_count_json(c, false) == R"({"algo":"plane-gon-dfs","count":"28","k":3,"n":2})");
    CHECK(cycle_count_json(c, true).find("seconds") != std::string::npos);
}
