#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charplie/chevalley.hpp"

namespace charplie {

/// Representation of a LieAlgebra: one action matrix per basis element, over
/// the prime field.  When `weights` is nonempty it records an integral weight
/// per basis vector of the module (exact, not mod p); every construction in
/// this file preserves that grading when it can.
struct GModule {
    const LieAlgebra* g = nullptr;
    int dim = 0;
    std::vector<Mat> action;
    std::string provenance;
    std::vector<Weight> weights;
    std::optional<Weight> highest_weight;
    int hw_index = -1; // basis index of the hw vector when it is a unit vector
    Vec hw_vector;     // hw vector in module coordinates (empty if unmarked)

    bool has_weights() const { return !weights.empty(); }
    bool has_hw() const { return !hw_vector.empty(); }

    /// Action matrix of an arbitrary element, over the element's field.
    Mat act(const Element& x) const;

    /// Weight-space decomposition: distinct integral weights with the span of
    /// each (requires weights).
    std::vector<std::pair<Weight, Subspace>> weight_decomposition() const;
};

/// Builder-level consistency check: bracket compatibility on all basis pairs,
/// p-power compatibility on the basis, Cartan action diagonal with the
/// declared weights.  Throws invariant_error.
void verify_gmodule(const GModule& m);

// -- concrete modules --------------------------------------------------------

/// Natural/defining module: C_n -> 2n-dim symplectic; B_n -> (2n+1)-dim Weyl
/// orthogonal module; F_4/G_2 -> the 26/7-dim natural module realized as n
/// with the adjoint action.
GModule defining_module(const LieAlgebra& g);

/// The (2n+1)-dimensional orthogonal Weyl module of B_n.
GModule natural_weyl_module(const LieAlgebra& g);

/// Spin module of B_n, dimension 2^n, basis indexed by subsets of {1..n}.
GModule spin_module(const LieAlgebra& g);

GModule adjoint_module(const LieAlgebra& g);
GModule trivial_module(const LieAlgebra& g);

// -- functorial constructions ------------------------------------------------

GModule tensor(const GModule& a, const GModule& b);
GModule exterior_power(const GModule& m, int k);
GModule sym_square(const GModule& m);
GModule direct_sum(const GModule& a, const GModule& b);
GModule direct_sum_copies(const GModule& m, int copies);
GModule dual_module(const GModule& m);

/// Submodule on an invariant subspace (throws if not invariant).
GModule sub_module(const GModule& m, const Subspace& s, const std::string& name);

/// Quotient by an invariant subspace.
GModule quotient_module(const GModule& m, const Subspace& s, const std::string& name);

/// Source algebra acting through the very special isogeny differential.
GModule pullback(const VerySpecialMap& dpi, const GModule& target_module);

// -- highest-weight machinery -------------------------------------------------

/// Submodule generated by a weight-lambda vector killed by all raising
/// operators; throws unsupported_error when no such vector exists.
GModule hw_submodule(const GModule& ambient, const Weight& lambda);

/// Contravariant Gram data on a highest-weight module.
struct ContravariantForm {
    Mat gram; // in the module's own basis
};

/// Quotient of a highest-weight module by the radical of its contravariant
/// form; verified to have no proper nonzero submodule generated by a weight
/// vector.
GModule irreducible_head(const GModule& hw_module);

/// The contravariant form of a highest-weight module (mostly for tests).
ContravariantForm contravariant_form(const GModule& hw_module);

// -- fixed spaces and kernels --------------------------------------------------

Subspace fixed_space(const GModule& v, const Element& x);
/// Joint kernel of a subspace h of g acting on v (h given in g-coordinates,
/// over any extension of the prime field).
Subspace fixed_space_subalg(const GModule& v, const Subspace& h);

/// {x in g : x acts as zero}; always an ideal (verified).
Subalg kernel_of_action(const GModule& v);

// -- catalog -------------------------------------------------------------------

/// Irreducible module with restricted dominant highest weight, assembled from
/// the supported recipe catalog; throws unsupported_error outside it.
GModule irreducible(const LieAlgebra& g, const Weight& lambda);

/// Dimension of L(lambda) for catalog weights (recursing through the
/// Steinberg-type factorization for non-restricted lambda).
long long irreducible_dim(const LieAlgebra& g, const Weight& lambda);

struct NonRestrictedReduction {
    Weight lambda0;
    long long multiplicity = 1;
};

/// lambda -> (lambda_0, dim L(lambda_1)); at the Lie algebra level the module
/// is the direct sum of that many copies of L(lambda_0).
NonRestrictedReduction nonrestricted_reduce(const LieAlgebra& g, const Weight& lambda);

/// Materializes the module for an arbitrary dominant weight as
/// multiplicity * L(lambda_0).
GModule module_for_weight(const LieAlgebra& g, const Weight& lambda);

} // namespace charplie
