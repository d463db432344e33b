#include <doctest.h>

#include "charplie/stabmod.hpp"

using namespace charplie;

namespace {

LieAlgebra make(Family fam, int rank) {
    return LieAlgebra::build(RootSystem::build(fam, rank), special_characteristic(fam));
}

Weight wt(std::vector<int> c) { return Weight{std::move(c)}; }

SampleConfig quick(std::uint64_t seed, int trials = 3, int degree = 16) {
    SampleConfig c;
    c.seed = seed;
    c.trials = trials;
    c.field_degree = degree;
    return c;
}

} // namespace

TEST_CASE("stabilizer of the zero vector is everything") {
    LieAlgebra c3 = make(Family::C, 3);
    GModule nat = defining_module(c3);
    Field ext = Field::make(2, 8);
    Vec zero(std::size_t(nat.dim), FieldElement{});
    CHECK(stabilizer(nat, zero, ext).dim() == c3.dim());
}

TEST_CASE("symplectic group is transitive on nonzero vectors") {
    // any nonzero vector of the natural module has stabilizer of dim 2n^2-n
    LieAlgebra c3 = make(Family::C, 3);
    GModule nat = defining_module(c3);
    Field ext = Field::make(2, 8);
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        Vec v(std::size_t(nat.dim));
        bool nz = false;
        for (auto& e : v) {
            e = ext.sample(rng);
            nz = nz || e.lo || e.hi;
        }
        if (!nz) continue;
        CHECK(stabilizer(nat, v, ext).dim() == 15);
    }
    // including a plain basis vector over the prime field
    Vec e0(std::size_t(nat.dim), FieldElement{});
    e0[0] = c3.base_field().one();
    CHECK(stabilizer(nat, e0, c3.base_field()).dim() == 15);
}

TEST_CASE("verdict rules") {
    CHECK(verdict_of(0, 0) == Verdict::generically_free);
    CHECK(verdict_of(27, 27) == Verdict::virtually_free);
    CHECK(verdict_of(8, 0) == Verdict::neither);
    CHECK_THROWS_AS(verdict_of(3, 5), invariant_error);
}

TEST_CASE("witness and report invariants") {
    LieAlgebra b4 = make(Family::B, 4);
    GModule s = spin_module(b4);
    StabilizerReport r = generic_stabilizer(s, quick(99, 3, 16));
    CHECK(r.min_dim == 21);
    CHECK(r.dim_ker == 0);
    CHECK(r.witness.dim() == 21);
    CHECK(r.witness_trial >= 0);
    CHECK(r.intersections.at("n_v") == 0);
    CHECK(r.intersections.at("m_v") == 1);
    for (int d : r.trial_dims) CHECK(d >= r.min_dim);
}

TEST_CASE("determinism under a fixed seed") {
    LieAlgebra c3 = make(Family::C, 3);
    GModule sp = irreducible(c3, wt({1, 0, 0}));
    StabilizerReport a = generic_stabilizer(sp, quick(1234));
    StabilizerReport b = generic_stabilizer(sp, quick(1234));
    CHECK(a.trial_dims == b.trial_dims);
    CHECK(a.witness_vector == b.witness_vector);
    CHECK(a.witness.space == b.witness.space);
    StabilizerReport c = generic_stabilizer(sp, quick(1235));
    CHECK(!(a.witness_vector == c.witness_vector));
}

TEST_CASE("substabilizer profile of a free action is zero") {
    LieAlgebra b2 = make(Family::B, 2);
    GModule v = direct_sum_copies(spin_module(b2), 4);
    StabilizerReport r = generic_stabilizer(v, quick(7));
    CHECK(r.verdict == Verdict::generically_free);
    for (const auto& [name, dim] : r.intersections) CHECK(dim == 0);
}

TEST_CASE("stabilizer dimension is non-increasing in the number of copies") {
    for (int n = 2; n <= 4; ++n) {
        LieAlgebra g = make(Family::B, n);
        GModule s = spin_module(g);
        int prev = g.dim() + 1;
        for (int c = 1; c <= 4; ++c) {
            GModule v = direct_sum_copies(s, c);
            StabilizerReport r = generic_stabilizer(v, quick(40 + std::uint64_t(16 * n + c), 2, 16));
            CHECK(r.min_dim <= prev);
            prev = r.min_dim;
        }
    }
}

TEST_CASE("semicontinuity: larger field degree never increases the minimum") {
    LieAlgebra c3 = make(Family::C, 3);
    for (auto w : {wt({1, 0, 0}), wt({0, 1, 0})}) {
        GModule v = irreducible(c3, w);
        StabilizerReport small = generic_stabilizer(v, quick(61, 3, 8));
        StabilizerReport large = generic_stabilizer(v, quick(62, 3, 20));
        CHECK(large.min_dim <= small.min_dim);
    }
}

TEST_CASE("zero module reports the vacuous verdict") {
    LieAlgebra b3 = make(Family::B, 3);
    GModule s = spin_module(b3);
    GModule z = sub_module(s, Subspace::zero(b3.base_field(), s.dim), "zero");
    StabilizerReport r = generic_stabilizer(z, quick(1));
    CHECK(r.zero_module);
    CHECK(r.verdict == Verdict::generically_free);
}
