#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "charplie/linalg.hpp"
#include "charplie/rootdata.hpp"
#include "charplie/zmat.hpp"

namespace charplie {

class LieAlgebra;

/// Element of a LieAlgebra (or of its scalar extension to a bigger field).
struct Element {
    const LieAlgebra* algebra = nullptr;
    Field field;
    Vec coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (c.lo || c.hi) return false;
        return true;
    }
};

/// Bracket-closed subspace of a LieAlgebra (possibly over an extension field).
struct Subalg {
    const LieAlgebra* algebra = nullptr;
    Subspace space;

    int dim() const { return space.dim(); }
    Element basis_element(int i) const;
};

/// The distinguished subalgebras attached to a special-characteristic algebra.
struct Distinguished {
    Subalg n;       // kernel of the very special isogeny differential
    Subalg z;       // center of g
    Subalg m;       // unique maximal invariant subspace, z(g_long) + n
    Subalg g_long;  // Cartan + long root vectors
    Subalg g_short; // Cartan + short root vectors
    bool z_in_n = false;
};

enum class ElementClass { nilpotent, toral, semisimple, other };

/// Simple Lie algebra over GF(p) in a Chevalley basis: e_alpha for every root
/// plus the simple coroots h_1..h_n.  Structure constants are computed over
/// the integers with the extraspecial-pair sign convention (roots ordered by
/// height, then lexicographically by coefficient vector) and reduced mod p.
class LieAlgebra {
public:
    static LieAlgebra build(const RootSystem& rs, int p);

    const RootSystem& roots() const { return rs_; }
    int p() const { return p_; }
    const Field& base_field() const { return base_; }
    int dim() const { return dim_; }
    int num_pos() const { return npos_; }
    bool special() const { return special_; }

    // basis layout: [0,N) = e_{+i}, [N,2N) = e_{-i}, [2N,2N+rank) = h
    int e_index(int root_ref) const {
        return is_positive_ref(root_ref) ? root_ref : npos_ + pos_index(root_ref);
    }
    int h_index(int node) const { return 2 * npos_ + node; }
    bool basis_is_cartan(int b) const { return b >= 2 * npos_; }
    /// Root reference of a non-Cartan basis index.
    int basis_root_ref(int b) const { return b < npos_ ? b : neg_ref(b - npos_); }

    /// Integral bracket of two basis elements: list of (basis index, coeff).
    const std::vector<std::pair<int, int>>& bracket_z(int i, int j) const {
        return table_[std::size_t(i) * dim_ + j];
    }

    /// Structure constant N_{alpha,beta} over Z (0 when alpha+beta is not a root).
    int structure_N(int refA, int refB) const;

    /// Extraspecial decomposition of a non-simple positive root: gamma =
    /// delta + beta with delta simple, plus N_{delta,beta}.
    struct Extraspecial {
        int xi = -1;  // root ref of the simple part
        int eta = -1; // root ref of the complement
        int n_value = 0;
    };
    const Extraspecial& extraspecial(int pos_idx) const;
    bool pos_is_simple(int pos_idx) const { return rs_.positive(pos_idx).height == 1; }
    int simple_node(int pos_idx) const;
    int pos_index_for_node(int node) const { return simple_pos_[std::size_t(node)]; }

    Element zero_element(const Field& f) const;
    Element basis_element(int basis, const Field& f) const;
    Element element(const Field& f, Vec coords) const;

    Element bracket(const Element& x, const Element& y) const;
    Mat ad_basis(int basis, const Field& f) const;
    Mat ad(const Element& x) const;

    Element p_power(const Element& x) const;
    ElementClass classify(const Element& x) const;

    Subalg centralizer(const Element& x) const;
    Subalg generated_subalgebra(const std::vector<Element>& seeds) const;
    Subalg ideal_generated(const Element& x) const;
    bool subspace_bracket_closed(const Subspace& s) const;

    /// Ad x_alpha(t) = sum_k t^k (ad e_alpha)^k / k!, an automorphism.
    Mat ad_one_param(int root_ref, const FieldElement& t, const Field& f) const;

    /// Distinguished subalgebras; requires special characteristic.
    const Distinguished& distinguished() const;

    /// Center of an arbitrary bracket-closed subspace (centralizer inside it).
    Subspace center_of(const Subspace& s) const;

private:
    RootSystem rs_;
    int p_ = 2;
    Field base_;
    bool special_ = false;
    int npos_ = 0, dim_ = 0;
    std::vector<std::vector<std::pair<int, int>>> table_; // dim*dim sparse Z brackets
    std::vector<Extraspecial> extras_;                    // per positive root (unset for simples)
    std::vector<int> simple_pos_;                         // node -> positive index
    mutable std::unique_ptr<Distinguished> dist_;

    void build_table();
    void verify_jacobi() const;
    void verify_restricted() const;
};

/// Differential of the very special isogeny from `source` onto `target`
/// (C_n -> B_n, B_n -> C_n, F_4 -> F_4, G_2 -> G_2, same p).  Long root
/// vectors map onto short root vectors of the dual system, short root vectors
/// to zero; verified to be a homomorphism with kernel n.
struct VerySpecialMap {
    const LieAlgebra* source = nullptr;
    const LieAlgebra* target = nullptr;
    Mat matrix;                    // dim(target) x dim(source), over GF(p)
    std::vector<int> cartan_image; // node -> target node (or -1), integral level

    Element apply(const Element& x) const;
};

VerySpecialMap very_special_differential(const LieAlgebra& source, const LieAlgebra& target);

/// Dual family under the very special isogeny.
Family dual_family(Family f);

} // namespace charplie
