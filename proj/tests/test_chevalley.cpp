#include <doctest.h>

#include "charplie/chevalley.hpp"

using namespace charplie;

namespace {

LieAlgebra make(Family fam, int rank) {
    RootSystem rs = RootSystem::build(fam, rank);
    return LieAlgebra::build(rs, special_characteristic(fam));
}

Element random_element(const LieAlgebra& g, const Field& f, Rng& rng) {
    Element x = g.zero_element(f);
    for (auto& c : x.coords) c = f.sample(rng);
    return x;
}

} // namespace

TEST_CASE("dimensions") {
    CHECK(make(Family::C, 3).dim() == 21);
    CHECK(make(Family::B, 4).dim() == 36);
    CHECK(make(Family::F4, 4).dim() == 52);
    CHECK(make(Family::G2, 2).dim() == 14);
}

TEST_CASE("bracket basics") {
    LieAlgebra g = make(Family::G2, 2);
    const Field& f = g.base_field();
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        Element x = random_element(g, f, rng);
        CHECK(g.bracket(x, x).is_zero());
    }
    // Cartan is abelian
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(g.bracket(g.basis_element(g.h_index(i), f), g.basis_element(g.h_index(j), f)).is_zero());
    // [h, e_alpha] is the pairing multiple of e_alpha
    for (int i = 0; i < g.num_pos(); ++i)
        for (int node = 0; node < 2; ++node) {
            Element br = g.bracket(g.basis_element(g.h_index(node), f), g.basis_element(g.e_index(i), f));
            long long pr = 0;
            for (int u = 0; u < 2; ++u)
                pr += (long long)g.roots().cartan()[std::size_t(node)][std::size_t(u)] *
                      g.roots().positive(i).coeffs[std::size_t(u)];
            Element expect = g.basis_element(g.e_index(i), f);
            for (auto& c : expect.coords) c = f.mul(c, f.from_int(pr));
            CHECK(br.coords == expect.coords);
        }
}

TEST_CASE("p-power table and classification") {
    for (auto [fam, rank] : {std::pair{Family::C, 3}, {Family::B, 3}, {Family::G2, 2}}) {
        LieAlgebra g = make(fam, rank);
        const Field& f = g.base_field();
        // root elements are nilpotent
        for (int i = 0; i < g.num_pos(); ++i) {
            Element e = g.basis_element(g.e_index(i), f);
            CHECK(g.p_power(e).is_zero());
            CHECK(g.classify(e) == ElementClass::nilpotent);
        }
        // coroot basis elements are toral
        for (int node = 0; node < rank; ++node) {
            Element h = g.basis_element(g.h_index(node), f);
            CHECK(g.p_power(h).coords == h.coords);
            CHECK(g.classify(h) == ElementClass::toral);
        }
    }
}

TEST_CASE("restrictedness on random elements") {
    for (auto [fam, rank] : {std::pair{Family::C, 3}, {Family::G2, 2}}) {
        LieAlgebra g = make(fam, rank);
        Field ext = Field::make(g.p(), 4);
        Rng rng(11);
        for (int t = 0; t < 100; ++t) {
            Element x = random_element(g, ext, rng);
            Mat adx = g.ad(x);
            CHECK(g.ad(g.p_power(x)) == adx.pow(std::uint64_t(g.p())));
        }
    }
}

TEST_CASE("distinguished subalgebra dimensions") {
    struct Row {
        Family fam;
        int rank, dim_n, dim_m, dim_z;
    };
    for (const Row& r : {Row{Family::B, 2, 5, 6, 1}, Row{Family::B, 3, 7, 7, 1}, Row{Family::B, 4, 9, 10, 1},
                         Row{Family::B, 5, 11, 11, 1}, Row{Family::B, 6, 13, 14, 1},
                         Row{Family::C, 3, 14, 15, 1}, Row{Family::C, 4, 27, 28, 1},
                         Row{Family::C, 5, 44, 45, 1}, Row{Family::C, 6, 65, 66, 1},
                         Row{Family::F4, 4, 26, 26, 0}, Row{Family::G2, 2, 7, 7, 0}}) {
        LieAlgebra g = make(r.fam, r.rank);
        const Distinguished& d = g.distinguished();
        CHECK(d.n.dim() == r.dim_n);
        CHECK(d.m.dim() == r.dim_m);
        CHECK(d.z.dim() == r.dim_z);
        CHECK(d.m.space.contains(d.n.space));
        CHECK(d.m.space.contains(d.z.space));
    }
}

TEST_CASE("center membership in n follows the parity rule for type C") {
    for (int n = 3; n <= 6; ++n) {
        LieAlgebra g = make(Family::C, n);
        CHECK(g.distinguished().z_in_n == (n % 2 == 0));
    }
    // for type B the center is the Heisenberg center, always inside n
    for (int n = 2; n <= 5; ++n) CHECK(make(Family::B, n).distinguished().z_in_n);
}

TEST_CASE("long/short structural identities") {
    for (auto [fam, rank] : {std::pair{Family::B, 3}, {Family::B, 4}, {Family::C, 3}, {Family::C, 4},
                             {Family::F4, 4}, {Family::G2, 2}}) {
        LieAlgebra g = make(fam, rank);
        const Distinguished& d = g.distinguished();
        Subspace zlong = g.center_of(d.g_long.space);
        // z(g_long) + n = m and g_long meet m = z(g_long)
        CHECK(sum(zlong, d.n.space) == d.m.space);
        CHECK(intersect(d.g_long.space, d.m.space) == zlong);
        // [g_short, g_short] = n
        std::vector<Element> gen;
        const Field& f = g.base_field();
        for (int i = 0; i < d.g_short.dim(); ++i)
            for (int j = i + 1; j < d.g_short.dim(); ++j)
                gen.push_back(g.bracket(d.g_short.basis_element(i), d.g_short.basis_element(j)));
        Subspace derived = Subspace::from_rows(f, g.dim(), [&] {
            std::vector<Vec> rows;
            for (auto& e : gen) rows.push_back(e.coords);
            return rows;
        }());
        CHECK(derived == d.n.space);
    }
}

TEST_CASE("Heisenberg structure for type B") {
    for (int n = 2; n <= 5; ++n) {
        LieAlgebra g = make(Family::B, n);
        const Distinguished& d = g.distinguished();
        CHECK(d.n.dim() == 2 * n + 1);
        // [h,h] = z(h), 1-dimensional
        const Field& f = g.base_field();
        std::vector<Vec> rows;
        for (int i = 0; i < d.n.dim(); ++i)
            for (int j = i + 1; j < d.n.dim(); ++j)
                rows.push_back(g.bracket(d.n.basis_element(i), d.n.basis_element(j)).coords);
        Subspace derived = Subspace::from_rows(f, g.dim(), rows);
        Subspace zh = g.center_of(d.n.space);
        CHECK(zh.dim() == 1);
        CHECK(derived == zh);
        CHECK(zh == d.z.space); // z(h) = z(g) for type B
    }
}

TEST_CASE("very special differential: B<->C, F4, G2") {
    for (auto [fam, rank] : {std::pair{Family::C, 3}, {Family::B, 3}, {Family::F4, 4}, {Family::G2, 2}}) {
        LieAlgebra src = make(fam, rank);
        LieAlgebra tgt = make(dual_family(fam), rank);
        VerySpecialMap d = very_special_differential(src, tgt); // builder verifies hom + kernel
        // image dimension = dim g - dim n
        CHECK(d.matrix.rank() == src.dim() - src.distinguished().n.dim());
        if (fam == Family::C) {
            // sp_2n -> spin_2n+1 has image the Heisenberg algebra, dim 2n+1
            CHECK(d.matrix.rank() == 2 * rank + 1);
        }
        // composing the two very special isogenies differentiates to zero
        VerySpecialMap d2 = very_special_differential(tgt, src);
        CHECK((d2.matrix * d.matrix).is_zero());
    }
}

TEST_CASE("ad_one_param is an automorphism fixing e_alpha") {
    for (auto [fam, rank] : {std::pair{Family::C, 3}, {Family::G2, 2}}) {
        LieAlgebra g = make(fam, rank);
        Field ext = Field::make(g.p(), 8);
        Rng rng(77);
        // t = 0 gives the identity
        CHECK(g.ad_one_param(0, ext.zero(), ext) == Mat::identity(ext, g.dim()));
        for (int t = 0; t < 12; ++t) {
            int ref = int(rng.next() % std::uint64_t(g.num_pos()));
            if (rng.next() & 1) ref = neg_ref(ref);
            FieldElement tv = ext.sample(rng);
            Mat A = g.ad_one_param(ref, tv, ext);
            CHECK(A.rank() == g.dim());
            Element ea = g.basis_element(g.e_index(ref), ext);
            CHECK(A.apply(ea.coords) == ea.coords);
            Element x = random_element(g, ext, rng), y = random_element(g, ext, rng);
            Element lhs = g.element(ext, A.apply(g.bracket(x, y).coords));
            Element rhs = g.bracket(g.element(ext, A.apply(x.coords)), g.element(ext, A.apply(y.coords)));
            CHECK(lhs.coords == rhs.coords);
        }
    }
}

TEST_CASE("generated subalgebras") {
    LieAlgebra g = make(Family::B, 3);
    const Field& f = g.base_field();
    // one Cartan element: 1-dimensional abelian
    CHECK(g.generated_subalgebra({g.basis_element(g.h_index(0), f)}).dim() == 1);
    // e_alpha, e_-alpha span an sl_2-type triple
    CHECK(g.generated_subalgebra({g.basis_element(g.e_index(0), f),
                                  g.basis_element(g.e_index(neg_ref(0)), f)})
              .dim() == 3);
    // all short-root elements generate n
    std::vector<Element> shorts;
    for (int i = 0; i < g.num_pos(); ++i) {
        if (g.roots().root_is_long(i)) continue;
        shorts.push_back(g.basis_element(g.e_index(i), f));
        shorts.push_back(g.basis_element(g.e_index(neg_ref(i)), f));
    }
    Subalg cl = g.generated_subalgebra(shorts);
    CHECK(cl.dim() == 7);
    CHECK(cl.space == g.distinguished().n.space);
}

TEST_CASE("centralizers") {
    LieAlgebra g = make(Family::C, 3);
    const Field& f = g.base_field();
    CHECK(g.centralizer(g.zero_element(f)).dim() == g.dim());
    // a regular Cartan element centralizes at least the Cartan
    Element h = g.zero_element(f);
    for (int node = 0; node < 3; ++node) h.coords[std::size_t(g.h_index(node))] = f.one();
    Subalg c = g.centralizer(h);
    for (int node = 0; node < 3; ++node)
        CHECK(c.space.contains_vector(g.basis_element(g.h_index(node), f).coords));
}

TEST_CASE("single-generator ideals contain n or sit inside z") {
    for (auto [fam, rank] : {std::pair{Family::B, 3}, {Family::C, 3}, {Family::G2, 2}}) {
        LieAlgebra g = make(fam, rank);
        const Distinguished& d = g.distinguished();
        Field ext = Field::make(g.p(), 8);
        Rng rng(500 + int(fam));
        Subspace nlift = d.n.space.lift(ext);
        Subspace zlift = d.z.space.lift(ext);
        for (int t = 0; t < 500; ++t) {
            Element x = random_element(g, ext, rng);
            Subalg ideal = g.ideal_generated(x);
            bool ok = ideal.space.contains(nlift) || zlift.contains(ideal.space);
            CHECK(ok);
        }
    }
}

TEST_CASE("non-special characteristic is flagged") {
    RootSystem rs = RootSystem::build(Family::G2, 2);
    LieAlgebra g = LieAlgebra::build(rs, 2); // allowed, but not special
    CHECK(!g.special());
    CHECK_THROWS_AS(g.distinguished(), unsupported_error);
}
