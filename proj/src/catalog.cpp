#include "charplie/repmod.hpp"

namespace charplie {

namespace {

Weight fw(const LieAlgebra& g, int node1based, int mult = 1) {
    Weight w = g.roots().zero_weight();
    w.coords[std::size_t(node1based - 1)] = mult;
    return w;
}

bool eq(const Weight& a, const Weight& b) { return a.coords == b.coords; }

void assert_dim(const GModule& m, int expect, const char* what) {
    if (m.dim != expect)
        throw invariant_error(std::string("catalog: ") + what + " has dimension " +
                              std::to_string(m.dim) + ", expected " + std::to_string(expect));
}

GModule head_of(const GModule& ambient, const Weight& lambda) {
    return irreducible_head(hw_submodule(ambient, lambda));
}

} // namespace

GModule irreducible(const LieAlgebra& g, const Weight& lambda) {
    const RootSystem& rs = g.roots();
    int n = rs.rank();
    if (int(lambda.coords.size()) != n) throw unsupported_error("irreducible: weight has wrong rank");
    if (!is_dominant(lambda)) throw unsupported_error("irreducible: weight is not dominant");
    if (!is_restricted(lambda, g.p()))
        throw unsupported_error("irreducible: weight is not restricted (use module_for_weight)");
    if (lambda.is_zero()) return trivial_module(g);

    switch (rs.family()) {
        case Family::B: {
            if (eq(lambda, fw(g, 1))) {
                GModule m = spin_module(g);
                assert_dim(m, 1 << n, "spin module");
                return m;
            }
            if (eq(lambda, fw(g, n))) {
                GModule m = head_of(natural_weyl_module(g), lambda);
                assert_dim(m, 2 * n, "natural head");
                return m;
            }
            if (n >= 3 && eq(lambda, fw(g, n - 1)))
                return head_of(adjoint_module(g), lambda);
            if ((n == 4 || n == 5) && eq(lambda, fw(g, n - 2))) {
                GModule m = head_of(exterior_power(natural_weyl_module(g), 3), lambda);
                assert_dim(m, n == 4 ? 48 : 100, "wedge^3-type module");
                return m;
            }
            if (n == 3) {
                Weight w23 = fw(g, 2);
                w23.coords[2] = 1;
                if (eq(lambda, w23)) {
                    GModule m = head_of(tensor(irreducible(g, fw(g, 2)), irreducible(g, fw(g, 3))), lambda);
                    assert_dim(m, 64, "B3 module of weight (0,1,1)");
                    return m;
                }
            }
            {
                Weight w1n = fw(g, 1);
                w1n.coords[std::size_t(n - 1)] += 1;
                if (eq(lambda, w1n) && (n == 2 || n == 3)) {
                    GModule m = head_of(tensor(spin_module(g), irreducible(g, fw(g, n))), lambda);
                    assert_dim(m, n == 2 ? 16 : 48, "spin (x) natural module");
                    return m;
                }
            }
            break;
        }
        case Family::C: {
            if (eq(lambda, fw(g, 1))) {
                // pull the spin module back along the very special isogeny
                RootSystem rsB = RootSystem::build(Family::B, n);
                LieAlgebra gB = LieAlgebra::build(rsB, g.p());
                VerySpecialMap d = very_special_differential(g, gB);
                GModule m = pullback(d, spin_module(gB));
                assert_dim(m, 1 << n, "spin pullback");
                return m;
            }
            if (eq(lambda, fw(g, n))) {
                GModule m = head_of(defining_module(g), lambda);
                assert_dim(m, 2 * n, "symplectic natural module");
                return m;
            }
            if (eq(lambda, fw(g, n - 1))) {
                GModule m = head_of(exterior_power(defining_module(g), 2), lambda);
                int sn = 2 * n * n - n - 1 - (n % 2 == 0 ? 1 : 0);
                if (n >= 3) assert_dim(m, sn, "wedge^2 head");
                return m;
            }
            if ((n == 4 || n == 5) && eq(lambda, fw(g, n - 2)))
                return head_of(exterior_power(defining_module(g), 3), lambda);
            if (n == 3) {
                Weight w13 = fw(g, 1);
                w13.coords[2] = 1;
                if (eq(lambda, w13)) {
                    GModule m =
                        head_of(tensor(irreducible(g, fw(g, 1)), irreducible(g, fw(g, 3))), lambda);
                    assert_dim(m, 48, "C3 module of weight (1,0,1)");
                    return m;
                }
            }
            break;
        }
        case Family::F4: {
            if (eq(lambda, fw(g, 4))) {
                GModule m = defining_module(g);
                assert_dim(m, 26, "F4 natural module");
                return m;
            }
            if (eq(lambda, fw(g, 1))) {
                GModule m = quotient_module(adjoint_module(g), g.distinguished().n.space, "g/n(F4)");
                assert_dim(m, 26, "F4 adjoint head");
                m.highest_weight = lambda;
                return m;
            }
            break;
        }
        case Family::G2: {
            if (eq(lambda, fw(g, 2))) {
                GModule m = defining_module(g);
                assert_dim(m, 7, "G2 natural module");
                return m;
            }
            if (eq(lambda, fw(g, 1))) {
                GModule m = quotient_module(adjoint_module(g), g.distinguished().n.space, "g/n(G2)");
                assert_dim(m, 7, "G2 adjoint head");
                m.highest_weight = lambda;
                return m;
            }
            if (eq(lambda, fw(g, 2, 2))) {
                GModule m = head_of(sym_square(defining_module(g)), lambda);
                assert_dim(m, 27, "G2 module of weight (0,2)");
                return m;
            }
            if (eq(lambda, fw(g, 1, 2))) {
                RootSystem rs2 = RootSystem::build(Family::G2, 2);
                LieAlgebra g2 = LieAlgebra::build(rs2, g.p());
                VerySpecialMap d = very_special_differential(g, g2);
                GModule m = pullback(d, irreducible(g2, fw(g2, 2, 2)));
                assert_dim(m, 27, "G2 module of weight (2,0)");
                return m;
            }
            break;
        }
    }
    throw unsupported_error("irreducible: weight " + lambda.str() + " is outside the catalog for " +
                            family_name(rs.family()) + std::to_string(n));
}

long long irreducible_dim(const LieAlgebra& g, const Weight& lambda) {
    if (lambda.is_zero()) return 1;
    if (is_restricted(lambda, g.p())) return irreducible(g, lambda).dim;
    RestrictedSplit s = restricted_split(lambda, g.p());
    return irreducible_dim(g, s.lambda0) * irreducible_dim(g, s.lambda1);
}

NonRestrictedReduction nonrestricted_reduce(const LieAlgebra& g, const Weight& lambda) {
    if (!is_dominant(lambda)) throw unsupported_error("nonrestricted_reduce: weight not dominant");
    if (is_restricted(lambda, g.p())) return {lambda, 1};
    RestrictedSplit s = restricted_split(lambda, g.p());
    return {s.lambda0, irreducible_dim(g, s.lambda1)};
}

GModule module_for_weight(const LieAlgebra& g, const Weight& lambda) {
    NonRestrictedReduction r = nonrestricted_reduce(g, lambda);
    GModule base = irreducible(g, r.lambda0);
    if (r.multiplicity == 1) return base;
    return direct_sum_copies(base, int(r.multiplicity));
}

} // namespace charplie
