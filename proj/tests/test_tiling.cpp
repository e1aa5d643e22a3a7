#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fibtree/tiling.hpp"
#include "oracles.hpp"

using namespace fibtree;

TEST_CASE("sector counts") {
    CHECK(sector_count(GridKind::pentagrid) == 5);
    CHECK(sector_count(GridKind::heptagrid) == 7);
}

TEST_CASE("global ids cycle round the sectors") {
    // Frozen by hand: ids 0..8 in both grids.
    auto a = tile_address(GridKind::pentagrid, 0);
    CHECK(a.central());
    CHECK(a.sector == 0);
    CHECK(a.node == 0);

    struct Row { int id; std::uint32_t sector; int node; };
    const std::vector<Row> penta = {
        {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}, {5, 5, 1},
        {6, 1, 2}, {7, 2, 2}, {8, 3, 2}, {11, 1, 3},
    };
    for (const auto& row : penta) {
        auto addr = tile_address(GridKind::pentagrid, row.id);
        CAPTURE(row.id);
        CHECK(addr.sector == row.sector);
        CHECK(addr.node == row.node);
        CHECK(tile_global_id(addr) == row.id);
    }
    const std::vector<Row> hepta = {
        {1, 1, 1}, {7, 7, 1}, {8, 1, 2}, {9, 2, 2}, {15, 1, 3},
    };
    for (const auto& row : hepta) {
        auto addr = tile_address(GridKind::heptagrid, row.id);
        CAPTURE(row.id);
        CHECK(addr.sector == row.sector);
        CHECK(addr.node == row.node);
        CHECK(tile_global_id(addr) == row.id);
    }
}

TEST_CASE("tile address serialisation") {
    CHECK(to_string(tile_address(GridKind::pentagrid, 0)) == "g0");
    CHECK(to_string(tile_address(GridKind::pentagrid, 7)) == "s2:n2");
    CHECK(to_string(tile_address(GridKind::heptagrid, 8)) == "s1:n2");

    auto parsed = parse_tile_address(GridKind::pentagrid, "s2:n2");
    CHECK(parsed.sector == 2);
    CHECK(parsed.node == 2);
    CHECK(tile_global_id(parsed) == 7);
    CHECK(parse_tile_address(GridKind::heptagrid, "g0").central());

    CHECK_THROWS_AS(parse_tile_address(GridKind::pentagrid, ""), validation_error);
    CHECK_THROWS_AS(parse_tile_address(GridKind::pentagrid, "s0:n1"), validation_error);
    CHECK_THROWS_AS(parse_tile_address(GridKind::pentagrid, "s6:n1"), validation_error);
    CHECK_THROWS_AS(parse_tile_address(GridKind::heptagrid, "s8:n1"), validation_error);
    CHECK_THROWS_AS(parse_tile_address(GridKind::pentagrid, "s1:n0"), validation_error);
    CHECK_THROWS_AS(parse_tile_address(GridKind::pentagrid, "s1n1"), validation_error);
    CHECK_THROWS_AS(parse_tile_address(GridKind::pentagrid, "g1"), validation_error);
    CHECK_NOTHROW(parse_tile_address(GridKind::heptagrid, "s7:n1"));
}

TEST_CASE("address bijection over a large range") {
    for (auto grid : {GridKind::pentagrid, GridKind::heptagrid}) {
        std::set<std::pair<std::uint32_t, std::uint64_t>> seen;
        for (std::uint64_t g = 0; g <= 10000; ++g) {
            auto addr = tile_address(grid, g);
            CHECK(tile_global_id(addr) == g);
            CHECK(seen.insert({addr.sector, std::uint64_t(addr.node)}).second);
            if (g > 0) {
                CHECK(addr.sector >= 1);
                CHECK(addr.sector <= sector_count(grid));
                CHECK(addr.node >= 1);
            }
            auto reparsed = parse_tile_address(grid, to_string(addr));
            CHECK(reparsed == addr);
        }
    }
    CHECK_THROWS_AS(tile_address(GridKind::pentagrid, Integer(-1)), validation_error);
}

TEST_CASE("rightmost branch of the sector tree") {
    CHECK(rightmost_branch(0) == 1);
    CHECK(rightmost_branch(1) == 4);
    CHECK(rightmost_branch(2) == 12);
    CHECK(rightmost_branch(3) == 33);
    CHECK(rightmost_branch(4) == 88);
    // Each branch node is the rightmost son of the previous one.
    auto tree = oracle::BruteTree::grow('W', 8);
    for (std::uint32_t k = 1; k <= 8; ++k) {
        auto sons = tree.sons_of(std::uint64_t(rightmost_branch(k - 1)));
        CHECK(Integer(sons.back()) == rightmost_branch(k));
    }
}

TEST_CASE("band assignments of the first nodes") {
    struct Row { std::uint64_t node; std::uint32_t strip; std::uint64_t rank; std::uint32_t lvl; };
    const std::vector<Row> expected = {
        {1, 0, 1, 0},
        {2, 0, 2, 1},  {3, 0, 3, 1},
        {4, 1, 1, 0},
        {5, 0, 4, 2},  {6, 0, 5, 2}, {7, 0, 6, 2}, {8, 0, 7, 2}, {9, 0, 8, 2},
        {10, 1, 2, 1}, {11, 1, 3, 1},
        {12, 2, 1, 0},
        {13, 0, 9, 3}, {25, 0, 21, 3},
        {26, 1, 4, 2}, {30, 1, 8, 2},
        {31, 2, 2, 1}, {32, 2, 3, 1},
        {33, 3, 1, 0},
        {88, 4, 1, 0},
    };
    for (const auto& row : expected) {
        CAPTURE(row.node);
        auto a = strip_index(row.node);
        CHECK(a.strip == row.strip);
        CHECK(a.index_in_strip == row.rank);
        CHECK(a.level_in_strip == row.lvl);
    }
}

TEST_CASE("bands partition the tree and ranks are dense") {
    // Reference partition: band of v = largest j such that the branch node
    // at level j is an ancestor (or v itself); ranks by id order.
    auto tree = oracle::BruteTree::grow('W', 8);
    std::map<std::uint32_t, std::vector<std::uint64_t>> members;
    for (std::uint64_t v = 1; v <= tree.node_count(); ++v) {
        std::uint32_t band = 0;
        for (std::uint32_t j = 0; j < tree.level_last.size(); ++j) {
            std::uint64_t branch = tree.level_last[j];
            std::uint64_t walk = v;
            while (walk > branch) walk = tree.father[walk];
            if (walk == branch) band = j;
        }
        members[band].push_back(v);
    }
    for (const auto& [band, nodes] : members) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            CAPTURE(band); CAPTURE(nodes[i]);
            auto a = strip_index(nodes[i]);
            CHECK(a.strip == band);
            CHECK(a.index_in_strip == i + 1);
        }
    }

    // Band n holds fib(2(j-n)) nodes at absolute level j: the sizes of the
    // tree pattern's levels.
    for (std::uint32_t band = 0; band <= 3; ++band) {
        std::map<std::uint32_t, std::uint64_t> per_level;
        for (auto v : members[band]) {
            std::uint32_t lvl = 0;
            for (std::uint64_t walk = v; tree.father[walk] != 0; walk = tree.father[walk])
                ++lvl;
            ++per_level[lvl];
        }
        for (const auto& [lvl, count] : per_level) {
            CAPTURE(band); CAPTURE(lvl);
            CHECK(Integer(count) == fib(2 * (lvl - band)));
        }
    }
}

TEST_CASE("bands replay the tree pattern's statuses") {
    // Local rank m >= 2 has the pattern's status; the band root (rank 1)
    // keeps only two sons inside its band.
    auto white = oracle::BruteTree::grow('W', 7);
    auto pattern = oracle::BruteTree::grow('B', 7);
    for (std::uint64_t v = 1; v <= white.level_last[6]; ++v) {
        auto a = strip_index(v);
        std::uint64_t m = std::uint64_t(a.index_in_strip);
        if (m >= 2) {
            CAPTURE(v); CAPTURE(m);
            CHECK(white.status[v] == pattern.status[m]);
        } else {
            std::uint64_t in_band = 0;
            for (auto son : white.sons_of(v))
                if (strip_index(son).strip == a.strip) ++in_band;
            CAPTURE(v);
            CHECK(in_band == 2);
        }
    }
}

TEST_CASE("band verification is clean with one known warning") {
    auto report = verify_strip_partition(7);
    CHECK(report.clean());
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].key == "strip-leading-tile");
}

TEST_CASE("table form of the band assignment") {
    auto table = TreeTable::build(TreeKind::white, 4);
    auto a = strip_index(table, 26);
    CHECK(a.strip == 1);
    CHECK(a.index_in_strip == 4);
    CHECK_THROWS_AS(strip_index(table, 0), validation_error);
    CHECK_THROWS_AS(strip_index(table, 89), validation_error); // out of range
    auto black = TreeTable::build(TreeKind::black, 3);
    CHECK_THROWS_AS(strip_index(black, 5), validation_error); // wrong kind
}

TEST_CASE("deep nodes need a deeper cap") {
    BuildLimits limits;
    limits.max_depth = 4;
    CHECK_NOTHROW(strip_index(88, limits));
    CHECK_THROWS_AS(strip_index(89, limits), depth_error);
}
