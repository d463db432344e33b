#include <doctest.h>

#include <set>

#include "charplie/field.hpp"
#include "charplie/rootdata.hpp"

using namespace charplie;

TEST_CASE("root counts and length split") {
    struct Row {
        Family fam;
        int rank, roots, longs;
    };
    for (const Row& r : {Row{Family::B, 2, 8, 4}, Row{Family::B, 3, 18, 12}, Row{Family::C, 3, 18, 6},
                         Row{Family::G2, 2, 12, 6}, Row{Family::F4, 4, 48, 24}}) {
        RootSystem rs = RootSystem::build(r.fam, r.rank);
        CHECK(rs.num_roots() == r.roots);
        int longs = 0;
        for (int i = 0; i < rs.num_positive(); ++i)
            if (rs.positive(i).is_long) longs += 2;
        CHECK(longs == r.longs);
        CHECK(rs.num_roots() - longs == r.roots - r.longs);
    }
}

TEST_CASE("Weyl closure: simple reflections permute the root set") {
    for (auto [fam, rank] : {std::pair{Family::B, 4}, {Family::C, 3}, {Family::F4, 4}, {Family::G2, 2}}) {
        RootSystem rs = RootSystem::build(fam, rank);
        std::set<std::vector<int>> all;
        for (int i = 0; i < rs.num_positive(); ++i) {
            all.insert(rs.root_coeffs(i));
            all.insert(rs.root_coeffs(neg_ref(i)));
        }
        for (int node = 0; node < rank; ++node) {
            std::set<std::vector<int>> img;
            for (const auto& v : all) {
                long long pr = 0;
                for (int j = 0; j < rank; ++j)
                    pr += (long long)rs.cartan()[std::size_t(node)][std::size_t(j)] * v[std::size_t(j)];
                std::vector<int> w = v;
                w[std::size_t(node)] -= int(pr);
                img.insert(w);
            }
            CHECK(img == all);
        }
    }
}

TEST_CASE("special characteristic per family") {
    CHECK(special_characteristic(Family::G2) == 3);
    CHECK(special_characteristic(Family::F4) == 2);
    CHECK(special_characteristic(Family::B) == 2);
    CHECK(special_characteristic(Family::C) == 2);
}

TEST_CASE("node lengths follow the fixed numbering") {
    RootSystem b3 = RootSystem::build(Family::B, 3);
    CHECK(b3.node_is_short(0));
    CHECK(!b3.node_is_short(1));
    RootSystem c3 = RootSystem::build(Family::C, 3);
    CHECK(!c3.node_is_short(0));
    CHECK(c3.node_is_short(1));
    CHECK(c3.node_is_short(2));
    RootSystem f4 = RootSystem::build(Family::F4, 4);
    CHECK(!f4.node_is_short(0));
    CHECK(!f4.node_is_short(1));
    CHECK(f4.node_is_short(2));
    CHECK(f4.node_is_short(3));
    RootSystem g2 = RootSystem::build(Family::G2, 2);
    CHECK(!g2.node_is_short(0));
    CHECK(g2.node_is_short(1));
}

TEST_CASE("split_weight") {
    RootSystem b3 = RootSystem::build(Family::B, 3);
    Weight l{{1, 0, 0}};
    WeightSplit s = split_weight(b3, l);
    CHECK(s.short_part == l);
    CHECK(s.long_part.is_zero());

    Weight zero{{0, 0, 0}};
    WeightSplit z = split_weight(b3, zero);
    CHECK(z.short_part.is_zero());
    CHECK(z.long_part.is_zero());

    RootSystem c3 = RootSystem::build(Family::C, 3);
    Weight l2{{1, 0, 1}};
    WeightSplit s2 = split_weight(c3, l2);
    CHECK(!s2.short_part.is_zero());
    CHECK(!s2.long_part.is_zero());
    for (int i = 0; i < 3; ++i)
        CHECK(s2.short_part.coords[std::size_t(i)] + s2.long_part.coords[std::size_t(i)] ==
              l2.coords[std::size_t(i)]);
    CHECK_THROWS_AS(split_weight(c3, Weight{{-1, 0, 0}}), error);
}

TEST_CASE("restricted_split") {
    Weight l{{3, 0}};
    RestrictedSplit s = restricted_split(l, 2);
    CHECK(s.lambda0 == Weight{{1, 0}});
    CHECK(s.lambda1 == Weight{{1, 0}});
    CHECK(s.r == 1);

    RestrictedSplit t = restricted_split(Weight{{0, 4}}, 3);
    CHECK(t.lambda0 == Weight{{0, 1}});
    CHECK(t.lambda1 == Weight{{0, 1}});

    RestrictedSplit u = restricted_split(Weight{{1, 1}}, 2);
    CHECK(u.lambda0 == Weight{{1, 1}});
    CHECK(u.lambda1.is_zero());
}

TEST_CASE("short-root pairings on the root lattice of type B are even") {
    RootSystem b4 = RootSystem::build(Family::B, 4);
    std::vector<int> shorts;
    for (int i = 0; i < b4.num_positive(); ++i)
        if (!b4.positive(i).is_long) shorts.push_back(i);
    // simple roots as lattice elements
    for (int node = 0; node < 4; ++node) {
        std::vector<int> lam(4, 0);
        lam[std::size_t(node)] = 1;
        for (int s : shorts) CHECK(pairing_parity_check(b4, lam, s) % 2 == 0);
    }
    // zero weight
    CHECK(pairing_parity_check(b4, {0, 0, 0, 0}, shorts[0]) == 0);
    // 200 random root-lattice weights
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> lam(4);
        for (auto& c : lam) c = int(rng.next() % 21) - 10;
        for (int s : shorts) CHECK(pairing_parity_check(b4, lam, s) % 2 == 0);
    }
}

TEST_CASE("root lattice membership") {
    RootSystem b3 = RootSystem::build(Family::B, 3);
    CHECK(!b3.in_root_lattice(Weight{{1, 0, 0}}));   // spin weight
    CHECK(b3.in_root_lattice(Weight{{0, 1, 0}}));
    CHECK(b3.in_root_lattice(Weight{{0, 1, 1}}));
    CHECK(b3.in_root_lattice(b3.root_as_weight(b3.highest_root())));
    RootSystem c3 = RootSystem::build(Family::C, 3);
    CHECK(c3.in_root_lattice(Weight{{1, 0, 1}})); // the 48-dim weight of C_3 factors through PSp_6
}

TEST_CASE("highest root is long and dominant") {
    for (auto [fam, rank] : {std::pair{Family::B, 5}, {Family::C, 4}, {Family::F4, 4}, {Family::G2, 2}}) {
        RootSystem rs = RootSystem::build(fam, rank);
        int hr = rs.highest_root();
        CHECK(rs.root_is_long(hr));
        CHECK(is_dominant(rs.root_as_weight(hr)));
    }
}

TEST_CASE("rank guards") {
    CHECK_THROWS_AS(RootSystem::build(Family::B, 1), unsupported_error);
    CHECK_THROWS_AS(RootSystem::build(Family::F4, 5), unsupported_error);
    CHECK_THROWS_AS(RootSystem::build(Family::G2, 3), unsupported_error);
}
