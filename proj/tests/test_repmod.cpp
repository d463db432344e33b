#include <doctest.h>

#include <set>

#include "charplie/repmod.hpp"

using namespace charplie;

namespace {

LieAlgebra make(Family fam, int rank) {
    return LieAlgebra::build(RootSystem::build(fam, rank), special_characteristic(fam));
}

Weight wt(std::vector<int> c) { return Weight{std::move(c)}; }

} // namespace

TEST_CASE("defining modules") {
    // symplectic: invariance x^T J + J x = 0 for every basis image
    LieAlgebra c3 = make(Family::C, 3);
    GModule nat = defining_module(c3);
    CHECK(nat.dim == 6);
    const Field& f = c3.base_field();
    Mat J(f, 6, 6);
    for (int i = 0; i < 3; ++i) {
        J.set(i, 3 + i, f.one());
        J.set(3 + i, i, f.neg(f.one()));
    }
    for (int b = 0; b < c3.dim(); ++b) {
        const Mat& x = nat.action[std::size_t(b)];
        CHECK((x.transpose() * J + J * x).is_zero());
    }

    // orthogonal Weyl module: 1-dim radical, 2n-dim head
    LieAlgebra b3 = make(Family::B, 3);
    GModule weyl = natural_weyl_module(b3);
    CHECK(weyl.dim == 7);
    GModule head = irreducible(b3, wt({0, 0, 1}));
    CHECK(head.dim == 6);

    LieAlgebra b4 = make(Family::B, 4);
    CHECK(irreducible(b4, wt({0, 0, 0, 1})).dim == 8);

    CHECK(defining_module(make(Family::F4, 4)).dim == 26);
    CHECK(defining_module(make(Family::G2, 2)).dim == 7);
}

TEST_CASE("spin modules") {
    LieAlgebra b3 = make(Family::B, 3);
    GModule s3 = spin_module(b3);
    CHECK(s3.dim == 8);
    LieAlgebra b4 = make(Family::B, 4);
    GModule s4 = spin_module(b4);
    CHECK(s4.dim == 16);
    CHECK(*s4.highest_weight == wt({1, 0, 0, 0}));
    // minuscule-type weight diagram: 2^n distinct weights, multiplicity 1
    auto dec = s4.weight_decomposition();
    CHECK(dec.size() == 16);
    for (const auto& [w, space] : dec) CHECK(space.dim() == 1);
}

TEST_CASE("adjoint modules and submodule chains") {
    LieAlgebra c3 = make(Family::C, 3);
    const Distinguished& d = c3.distinguished();
    CHECK(d.n.dim() == 14);
    CHECK(d.m.dim() == 15);
    CHECK(c3.dim() == 21);
    CHECK(d.m.space.contains(d.n.space));

    LieAlgebra b2 = make(Family::B, 2);
    GModule adj = adjoint_module(b2);
    CHECK(adj.dim == 10);
    CHECK(b2.distinguished().n.dim() == 5);

    // G_2: ideals generated by single basis elements land on n (or all of g)
    LieAlgebra g2 = make(Family::G2, 2);
    const Field& f3 = g2.base_field();
    Subalg n2 = g2.distinguished().n;
    CHECK(n2.dim() == 7);
    int hits_n = 0;
    for (int i = 0; i < g2.dim(); ++i) {
        Subalg ideal = g2.ideal_generated(g2.basis_element(i, f3));
        bool is_n = ideal.space == n2.space;
        bool is_g = ideal.dim() == g2.dim();
        CHECK((is_n || is_g));
        if (is_n) ++hits_n;
    }
    CHECK(hits_n > 0);
}

TEST_CASE("wedge^2 of the symplectic module") {
    LieAlgebra c3 = make(Family::C, 3);
    GModule nat = defining_module(c3);
    GModule w2 = exterior_power(nat, 2);
    CHECK(w2.dim == 15);
    // invariant line (the symplectic form) plus a 14-dimensional submodule
    const Field& f = c3.base_field();
    Subspace inv = fixed_space_subalg(w2, Subspace::full(f, c3.dim()));
    CHECK(inv.dim() == 1);
    GModule sub14 = hw_submodule(w2, wt({0, 1, 0}));
    CHECK(sub14.dim == 14);
    GModule head = irreducible_head(sub14);
    CHECK(head.dim == 14);
}

TEST_CASE("tensor with the trivial module is the identity") {
    LieAlgebra b2 = make(Family::B, 2);
    GModule s = spin_module(b2);
    GModule t = tensor(s, trivial_module(b2));
    CHECK(t.dim == s.dim);
    for (int b = 0; b < b2.dim(); ++b) CHECK(t.action[std::size_t(b)] == s.action[std::size_t(b)]);
}

TEST_CASE("sym^2 of the G_2 natural module contains the 27-dimensional factor") {
    LieAlgebra g2 = make(Family::G2, 2);
    GModule s2 = sym_square(defining_module(g2));
    CHECK(s2.dim == 28);
    GModule m27 = irreducible(g2, wt({0, 2}));
    CHECK(m27.dim == 27);
    CHECK(kernel_of_action(m27).dim() == 0);
}

TEST_CASE("hw_submodule of a full module returns the module") {
    LieAlgebra b3 = make(Family::B, 3);
    GModule s = spin_module(b3);
    GModule h = hw_submodule(s, wt({1, 0, 0}));
    CHECK(h.dim == 8);
    GModule hh = irreducible_head(h);
    CHECK(hh.dim == 8); // already irreducible: zero radical
    CHECK_THROWS_AS(hw_submodule(s, wt({0, 1, 0})), unsupported_error);
}

TEST_CASE("spin (x) spin of B_3 and its top submodule") {
    LieAlgebra b3 = make(Family::B, 3);
    GModule s = spin_module(b3);
    GModule ss = tensor(s, s);
    CHECK(ss.dim == 64);
    GModule sub = hw_submodule(ss, wt({2, 0, 0}));
    CHECK(sub.dim > 0);
    CHECK(sub.dim < 64);
    GModule head = irreducible_head(sub);
    CHECK(head.dim > 0);
}

TEST_CASE("contravariant form invariants") {
    LieAlgebra b2 = make(Family::B, 2);
    GModule weyl = natural_weyl_module(b2);
    GModule hm = hw_submodule(weyl, wt({0, 1}));
    CHECK(hm.dim == 5);
    ContravariantForm form = contravariant_form(hm);
    CHECK(form.gram == form.gram.transpose());
    // <e_gamma u, w> = <u, e_-gamma w> for every root
    for (int r = 0; r < b2.num_pos(); ++r) {
        const Mat& Ap = hm.action[std::size_t(b2.e_index(r))];
        const Mat& Am = hm.action[std::size_t(b2.e_index(neg_ref(r)))];
        CHECK(Ap.transpose() * form.gram == form.gram * Am);
    }
    // radical of the form = kernel of the Gram matrix: 1-dim for the Weyl module
    CHECK(kernel(form.gram).dim() == 1);
}

TEST_CASE("irreducible heads match the stated dimensions") {
    LieAlgebra b4 = make(Family::B, 4);
    GModule w3 = exterior_power(natural_weyl_module(b4), 3);
    CHECK(w3.dim == 84);
    GModule m48 = irreducible(b4, wt({0, 1, 0, 0}));
    CHECK(m48.dim == 48);
}

TEST_CASE("pullbacks along the very special differential") {
    // sp_6 pullback of the 8-dim spin module: 14-dim action kernel
    LieAlgebra c3 = make(Family::C, 3);
    GModule sp = irreducible(c3, wt({1, 0, 0}));
    CHECK(sp.dim == 8);
    CHECK(kernel_of_action(sp).dim() == 14);
    Subspace vn = fixed_space_subalg(sp, c3.distinguished().n.space);
    CHECK(vn.dim() == sp.dim); // n acts as zero by construction

    // spin_7 pullback of the symplectic natural module kills n
    LieAlgebra b3 = make(Family::B, 3);
    LieAlgebra c3b = make(Family::C, 3);
    VerySpecialMap d = very_special_differential(b3, c3b);
    GModule nat6 = pullback(d, irreducible(c3b, wt({0, 0, 1})));
    CHECK(nat6.dim == 6);
    Subalg ker = kernel_of_action(nat6);
    CHECK(ker.space == b3.distinguished().n.space);
}

TEST_CASE("fixed spaces") {
    LieAlgebra b4 = make(Family::B, 4);
    GModule s = spin_module(b4);
    const Field& f = b4.base_field();
    CHECK(fixed_space(s, b4.zero_element(f)).dim() == s.dim);
    CHECK(fixed_space_subalg(s, b4.distinguished().n.space).dim() == 0);
    CHECK(fixed_space_subalg(s, b4.distinguished().z.space).dim() == 0);
}

TEST_CASE("kernels of catalog modules") {
    LieAlgebra b3 = make(Family::B, 3);
    CHECK(kernel_of_action(spin_module(b3)).dim() == 0); // faithful
    // highest weights in the root lattice kill n
    for (auto w : {wt({0, 1, 0}), wt({0, 0, 1}), wt({0, 1, 1})}) {
        CHECK(b3.roots().in_root_lattice(w));
        GModule V = irreducible(b3, w);
        CHECK(kernel_of_action(V).space.contains(b3.distinguished().n.space));
    }
}

TEST_CASE("Steinberg-type factorization of catalog dimensions") {
    LieAlgebra c3 = make(Family::C, 3);
    WeightSplit s = split_weight(c3.roots(), wt({1, 0, 1}));
    CHECK(irreducible_dim(c3, wt({1, 0, 1})) ==
          irreducible_dim(c3, s.short_part) * irreducible_dim(c3, s.long_part));
    LieAlgebra b3 = make(Family::B, 3);
    WeightSplit s2 = split_weight(b3.roots(), wt({1, 0, 1}));
    CHECK(irreducible_dim(b3, wt({1, 0, 1})) == 48);
    CHECK(irreducible_dim(b3, s2.short_part) * irreducible_dim(b3, s2.long_part) == 48);
}

TEST_CASE("non-restricted weights reduce to multiplicities") {
    LieAlgebra b2 = make(Family::B, 2);
    auto r = nonrestricted_reduce(b2, wt({1, 2}));
    CHECK(r.lambda0 == wt({1, 0}));
    CHECK(r.multiplicity == 4); // dim of the 4-dim natural head
    GModule m = module_for_weight(b2, wt({1, 2}));
    CHECK(m.dim == 4 * 4);

    auto r2 = nonrestricted_reduce(b2, wt({1, 1}));
    CHECK(r2.lambda0 == wt({1, 1}));
    CHECK(r2.multiplicity == 1);

    auto r3 = nonrestricted_reduce(b2, wt({0, 1}));
    CHECK(r3.multiplicity == 1);
}

TEST_CASE("catalog rejects unsupported weights explicitly") {
    LieAlgebra c4 = make(Family::C, 4);
    CHECK_THROWS_AS(irreducible(c4, wt({1, 1, 1, 1})), unsupported_error);
    LieAlgebra g2 = make(Family::G2, 2);
    CHECK_THROWS_AS(irreducible(g2, wt({1, 1})), unsupported_error);
}

TEST_CASE("duals and sums keep the builder invariants") {
    LieAlgebra c3 = make(Family::C, 3);
    GModule nat = defining_module(c3);
    GModule d = dual_module(nat);
    CHECK(d.dim == nat.dim);
    GModule s = direct_sum_copies(nat, 3);
    CHECK(s.dim == 18);
    // weights negate under duality
    std::multiset<std::vector<int>> wplus, wminus;
    for (const auto& w : nat.weights) wplus.insert(w.coords);
    for (const auto& w : d.weights) {
        std::vector<int> neg = w.coords;
        for (auto& x : neg) x = -x;
        wminus.insert(neg);
    }
    CHECK(wplus == wminus);
}
