#pragma once

#include <string>
#include <vector>

#include "charplie/error.hpp"

namespace charplie {

enum class Family { B, C, F4, G2 };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Dominant (or arbitrary) weight in fundamental-weight coordinates, in the
/// external numbering used throughout this project (see RootSystem).
struct Weight {
    std::vector<int> coords;

    bool operator==(const Weight&) const = default;
    bool is_zero() const {
        for (int c : coords)
            if (c) return false;
        return true;
    }
    std::string str() const;
};

/// A root, stored as its integer coefficient vector over the simple roots.
struct Root {
    std::vector<int> coeffs;
    int height = 0;   // sum of coefficients
    bool is_long = false;
};

/// Root references: ref >= 0 names positive[ref]; ref < 0 names the negative
/// of positive[-ref-1].
inline int neg_ref(int ref) { return -ref - 1; }
inline int pos_index(int ref) { return ref >= 0 ? ref : -ref - 1; }
inline bool is_positive_ref(int ref) { return ref >= 0; }

/// Roots, coroots and weights for B_n, C_n, F_4, G_2.
///
/// Node numbering: the double/triple bond joins nodes 1 and 2 for B_n, C_n,
/// G_2 (node 1 short for B, long for C and G_2) and nodes 2,3 for F_4 (1,2
/// long; 3,4 short).  Consequently for B_n the spin weight is omega_1 and the
/// natural weight is omega_n; for C_n the natural weight is omega_n.  The map
/// to the Bourbaki numbering is node i -> n+1-i for B, C, G_2 and the
/// identity for F_4.
class RootSystem {
public:
    static RootSystem build(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }

    /// cartan[i][j] = <delta_j, delta_i^vee>, 0-based nodes.
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    /// Half squared lengths of the simple roots (1 short; 2 long; 3 for G_2 long).
    const std::vector<int>& half_norms() const { return d_; }

    bool node_is_short(int i) const { return d_[std::size_t(i)] == 1; }

    int num_positive() const { return int(positive_.size()); }
    int num_roots() const { return 2 * num_positive(); }
    const Root& positive(int i) const { return positive_[std::size_t(i)]; }

    /// Coefficient vector of a (possibly negative) root reference.
    std::vector<int> root_coeffs(int ref) const;

    bool root_is_long(int ref) const { return positive_[std::size_t(pos_index(ref))].is_long; }

    int half_norm(int ref) const { return positive_[std::size_t(pos_index(ref))].is_long ? d_long_ : 1; }

    /// Positive-root index of the given coefficient vector, or -1.
    int find_positive(const std::vector<int>& coeffs) const;

    /// Root reference for a coefficient vector of either sign; throws if the
    /// vector is not a root.
    int find_root(const std::vector<int>& coeffs) const;

    /// alpha^vee as an integer vector over the simple coroots.
    std::vector<int> coroot_coeffs(int ref) const;

    /// <lambda, alpha^vee> for lambda in fundamental coordinates.
    long long pairing(const Weight& lambda, int ref) const;

    /// The root as a weight (fundamental coordinates).
    Weight root_as_weight(int ref) const;

    /// Index of the highest root (always long in these systems).
    int highest_root() const;

    /// Whether a weight lies in the root lattice.
    bool in_root_lattice(const Weight& lambda) const;

    Weight fundamental_weight(int node) const;
    Weight zero_weight() const;

private:
    Family family_ = Family::B;
    int rank_ = 0;
    int d_long_ = 2;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<Root> positive_;
};

/// 3 for G_2, otherwise 2.
int special_characteristic(Family f);

/// lambda = lambda_s + lambda_l split across short/long fundamental weights.
struct WeightSplit {
    Weight short_part, long_part;
};
WeightSplit split_weight(const RootSystem& rs, const Weight& lambda);

/// lambda = lambda_0 + p^r lambda_1 with lambda_0 = lambda mod p (restricted),
/// r = 1 canonically.
struct RestrictedSplit {
    Weight lambda0, lambda1;
    int r = 1;
};
RestrictedSplit restricted_split(const Weight& lambda, int p);

bool is_dominant(const Weight& lambda);
bool is_restricted(const Weight& lambda, int p);

/// <alpha^vee, lambda> for lambda given in simple-root coordinates and alpha a
/// short root of a type-B system; the value is asserted even.
long long pairing_parity_check(const RootSystem& rs, const std::vector<int>& lambda_root_coords,
                               int short_root_ref);

} // namespace charplie
