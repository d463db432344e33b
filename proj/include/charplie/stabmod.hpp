#pragma once

#include <map>
#include <string>
#include <vector>

#include "charplie/repmod.hpp"

namespace charplie {

/// Sampling plan for generic-stabilizer runs.
struct SampleConfig {
    int field_degree = 20;
    int trials = 5;
    std::uint64_t seed = 0;
};

enum class Verdict { generically_free, virtually_free, neither };

std::string verdict_name(Verdict v);

/// Result of a generic-stabilizer run.  The witness minimum is exact and
/// certifies an upper bound for the generic stabilizer dimension; confidence
/// that it is not an undercount comes from the independent trials.
struct StabilizerReport {
    SampleConfig config;
    bool zero_module = false;
    std::vector<int> trial_dims;
    int min_dim = 0;
    int witness_trial = -1;
    Subalg witness;                           // over GF(p^field_degree)
    Vec witness_vector;
    int dim_ker = 0;                          // dim ker d rho
    std::map<std::string, int> intersections; // n_v, m_v, z_v, glong_v, gshort_v
    Verdict verdict = Verdict::generically_free;
};

/// Stabilizer of one vector: kernel of x -> d rho(x) v, verified
/// bracket-closed.  v lives over an extension of the prime field.
Subalg stabilizer(const GModule& V, const Vec& v, const Field& ext);

StabilizerReport generic_stabilizer(const GModule& V, const SampleConfig& cfg);

/// generically_free iff min_dim = 0; virtually_free iff min_dim = dim ker;
/// throws invariant_error when min_dim < dim ker.
Verdict verdict_of(int min_dim, int ker_dim);

/// Dimensions of h intersect g_v for the named subalgebras of g.
std::map<std::string, int> substabilizer_profile(
    const StabilizerReport& report,
    const std::vector<std::pair<std::string, Subspace>>& subalgebras);

} // namespace charplie
