#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyconf/tiling.hpp"

using namespace polyconf;

namespace {
std::mt19937_64 rng(314159);
}

TEST_CASE("is_cotiler: interval tiles the line") {
    auto tile = ClusterTile::of(1, {{0}, {1}, {2}});
    auto c = CoTilerSet::of(1, {{3}});
    auto v = is_cotiler(tile, c);
    CHECK(v.tiles);

    auto miss = ClusterTile::of(1, {{0}, {1}});
    auto v2 = is_cotiler(miss, c);
    REQUIRE_FALSE(v2.tiles);
    CHECK(*v2.cover_count != 1);
    CHECK(*v2.position == ExpVec{2});
}

TEST_CASE("is_cotiler: 2D L-triomino style tile against a slanted lattice") {
    auto tile = ClusterTile::of(2, {{0, 0}, {1, 0}, {0, 1}});
    auto c = CoTilerSet::of(2, {{1, 1}, {3, 0}});
    CHECK(is_cotiler(tile, c).tiles);
    // brute-force cover count agrees: every point in a box is covered once
    auto ind = c.indicator;
    for_each_point(Box::cube(2, -6, 6), [&](const ExpVec& p) {
        int covered = 0;
        for (const auto& cell : tile.cells)
            covered += ind.coefficient(vec_sub(p, cell)) == 1;
        CHECK(covered == 1);
    });

    auto bad = CoTilerSet::of(2, {{1, 1}, {4, 0}});
    CHECK_FALSE(is_cotiler(tile, bad).tiles);
}

TEST_CASE("tiling_identity_check") {
    auto tile = ClusterTile::of(1, {{0}, {1}, {2}});
    CHECK(tiling_identity_check(tile, CoTilerSet::of(1, {{3}})).max_deviation == 0);

    // a co-tiler that is too sparse leaves uncovered points
    auto sparse = tiling_identity_check(tile, CoTilerSet::of(1, {{4}}));
    CHECK(sparse.max_deviation > 0);
    CHECK(sparse.worst_position.has_value());

    auto pair2d = tiling_identity_check(ClusterTile::of(2, {{0, 0}, {1, 0}, {0, 1}}),
                                        CoTilerSet::of(2, {{1, 1}, {3, 0}}));
    CHECK(pair2d.max_deviation == 0);
}

TEST_CASE("prime_periodicity_check") {
    auto tile = ClusterTile::of(1, {{0}, {1}, {2}});
    auto periods = prime_periodicity_check(tile, CoTilerSet::of(1, {{3}}));
    CHECK(periods == std::vector<ExpVec>{{-6}, {-3}, {3}, {6}});

    auto tile2 = ClusterTile::of(1, {{0}, {1}});
    auto p2 = prime_periodicity_check(tile2, CoTilerSet::of(1, {{2}}));
    CHECK(p2 == std::vector<ExpVec>{{-2}, {2}});

    auto tri = ClusterTile::of(2, {{0, 0}, {1, 0}, {0, 1}});
    auto cot = CoTilerSet::of(2, {{1, 1}, {3, 0}});
    auto p3 = prime_periodicity_check(tri, cot);
    CHECK(p3.size() == 6);  // 3(v-u) over ordered pairs, deduplicated
    auto ind = cot.indicator;
    for (const auto& period : p3) {
        auto v = verify_annihilator(difference_poly(period, 2), ind, Box::cube(2, 0, 0));
        CHECK(v.status == AnnihilationVerdict::Status::ProvenZero);
    }

    auto four = ClusterTile::of(1, {{0}, {1}, {2}, {3}});
    CHECK_THROWS_AS(prime_periodicity_check(four, CoTilerSet::of(1, {{4}})), std::invalid_argument);
    CHECK_THROWS_AS(prime_periodicity_check(tile, CoTilerSet::of(1, {{4}})), std::domain_error);
}

TEST_CASE("is_cotiler: co-tilers given as general binary configurations") {
    // D = {0,2} tiles Z with C = {0,1} + 4Z, a union of two cosets
    auto tile = ClusterTile::of(1, {{0}, {2}});
    auto ind = Configuration::full_periodic_values(1, {{4}}, {Int(1), Int(1), Int(0), Int(0)},
                                                   std::vector<Int>{Int(0), Int(1)});
    auto c = CoTilerSet::of_config(ind);
    CHECK(is_cotiler(tile, c).tiles);
    CHECK(tiling_identity_check(tile, c).max_deviation == 0);

    auto lat_only = CoTilerSet::of(1, {{4}});
    CHECK_FALSE(is_cotiler(tile, lat_only).tiles);

    CHECK_THROWS_AS(CoTilerSet::of_config(Configuration::constant(1, 2)), std::invalid_argument);
    auto beatty = Configuration::beatty(2, 1, 1, 5, 2, {1, 0});
    CHECK_THROWS_AS(CoTilerSet::of_config(beatty), std::invalid_argument);
}

TEST_CASE("property: co-tilers of the tile and its negation coincide") {
    std::uniform_int_distribution<std::int64_t> coord(-2, 2), det(1, 4);
    for (int t = 0; t < 100; ++t) {
        std::vector<ExpVec> cells{{0, 0}};
        while (cells.size() < 3) {
            cells.push_back({coord(rng), coord(rng)});
            cells = canonical_shape(cells);
        }
        auto tile = ClusterTile::of(2, cells);
        std::vector<ExpVec> neg;
        for (const auto& p : tile.cells) neg.push_back(vec_neg(p));
        auto mtile = ClusterTile::of(2, neg);
        auto c = CoTilerSet::of(2, {{det(rng), coord(rng)}, {0, det(rng)}});
        CHECK(is_cotiler(tile, c).tiles == is_cotiler(mtile, c).tiles);
    }
}

TEST_CASE("property: verified tilings cover the fundamental domain exactly once") {
    // exhaustive search over small lattices for tiling partners of a fixed tile
    auto tile = ClusterTile::of(2, {{0, 0}, {1, 0}, {0, 1}});
    int found = 0;
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
            for (std::int64_t d = 1; d <= 3; ++d) {
                auto c = CoTilerSet::of(2, {{a, b}, {0, d}});
                if (c.lattice.index() != 3) continue;
                auto v = is_cotiler(tile, c);
                if (!v.tiles) continue;
                ++found;
                auto ind = c.indicator;
                for (const auto& rep : c.lattice.coset_reps()) {
                    int covered = 0;
                    for (const auto& cell : tile.cells)
                        covered += ind.coefficient(vec_sub(rep, cell)) == 1;
                    CHECK(covered == 1);
                }
            }
        }
    }
    CHECK(found > 0);
}
