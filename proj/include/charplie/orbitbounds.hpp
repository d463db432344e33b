#pragma once

#include <string>

#include "charplie/repmod.hpp"

namespace charplie {

// Closed-form conjugacy-class and centralizer dimensions in the defining
// ambient groups, plus the dimension thresholds used by the verification
// suites.  Orbit dimensions always come from these formulas; Lie centralizers
// only cross-check one direction (centralizer schemes need not be smooth).

/// dim x^{Sp_2n} for the largest square-zero class of rank r: r(2n+1) - r^2.
long long sp_sqzero_orbit_dim(int n, int r);

/// Centralizer dimension for that class: 2n-r + C(2n-r,2) + C(r,2).
long long sp_sqzero_centralizer(int n, int r);

struct SoOddNilpotentDims {
    long long centralizer = 0; // C(2n+1-r,2) + C(r,2)
    long long orbit = 0;       // dim so_{2n+1} - centralizer
    long long bound = 0;       // r(2n+1-r)
};
SoOddNilpotentDims so_odd_centralizer(int n, int r);

/// Orbit dimension of the toral class of SO_{2n+1}/Spin_{2n+1} whose
/// centralizer has type D_r x B_{n-r}.
long long toral_orbit_dim_B(int n, int r);

enum class ClassKind { sqzero, toral_B, toral_sp, long_root, short_root };

struct ClassLabel {
    Family family = Family::C;
    int rank = 0;
    ClassKind kind = ClassKind::sqzero;
    int r = 0; // rank of the class parameter (matrix rank / eigenspace half-dim / D_r part)
};

/// Number of conjugates that generate a subalgebra containing n (type C).
long long generation_count(const ClassLabel& c);

/// An explicit element of the class, verified: p-power behavior, matrix rank
/// in the defining module, and the required n/m membership pattern.
Element representative(const LieAlgebra& g, const ClassLabel& c);

struct MotherInequality {
    long long orbit_dim = 0;
    int fixed_dim = 0;
    int dim_v = 0;
    bool holds = false;
    long long margin = 0; // dim V - orbit - fixed
};

/// dim x^G + dim V^x < dim V, with dim V^x computed exactly.
MotherInequality mother_inequality(const GModule& V, const Element& x, long long orbit_dim);

struct HeisCriteria {
    bool crit1 = false; // 4n + dim V^{z(h)} < dim V
    bool crit2 = false; // V^h = 0 and 4n^2 < dim V
    int dim_v = 0;
    int dim_fix_center = 0;
    int dim_fix_h = 0;
};

/// Evaluates the Heisenberg criteria for a module of B_n, or of C_n on which
/// n acts as zero (hypothesis checked).
HeisCriteria heis_criteria(const GModule& V);

/// Named dimension thresholds.  prop is one of: long_root, short_root,
/// FG_dim, C_faithful, B_faithful, B_vs, B_quo.  `adjoint_form` selects the
/// PSp-type bound where the statement distinguishes it.
long long threshold(const std::string& prop, Family fam, int rank, bool adjoint_form = false);

/// Second-smallest nontrivial irreducible dimension for Sp_2n:
/// 2n^2-n-1 (n odd), 2n^2-n-2 (n even); n >= 3.
long long second_min_dim_C(int n);

/// Draws `count` random conjugates of the class representative and tests
/// whether they generate a subalgebra containing n; repeated over 10 draws,
/// success is existential.
bool generation_experiment(const LieAlgebra& g, const ClassLabel& c, int count, std::uint64_t seed);

/// Same experiment against the full algebra instead of n.
bool generation_experiment_full(const LieAlgebra& g, const ClassLabel& c, int count,
                                std::uint64_t seed);

} // namespace charplie
