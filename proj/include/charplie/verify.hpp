#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace charplie {

/// One verified claim: a stable id, a human-readable statement, the observed
/// values, and the outcome.
struct Claim {
    std::string id;
    std::string desc;
    bool pass = false;
    std::string detail;
    double ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Claim> claims;

    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }
};

/// Criterion runners, numbered as in the acceptance suite.
void criterion_vfree_table(std::vector<Claim>& out, std::uint64_t seed);   // 1
void criterion_spin_typeB(std::vector<Claim>& out, std::uint64_t seed);    // 2
void criterion_spin_sums(std::vector<Claim>& out, std::uint64_t seed);     // 3
void criterion_fg_naturals(std::vector<Claim>& out, std::uint64_t seed);   // 4
void criterion_g2_27(std::vector<Claim>& out, std::uint64_t seed);         // 5
void criterion_typeB_catalog(std::vector<Claim>& out, std::uint64_t seed); // 6
void criterion_typeC_catalog(std::vector<Claim>& out, std::uint64_t seed); // 7
void criterion_structure(std::vector<Claim>& out, std::uint64_t seed);     // 8
void criterion_formulas(std::vector<Claim>& out, std::uint64_t seed);      // 9
void criterion_properties(std::vector<Claim>& out, std::uint64_t seed);    // 10
void criterion_counterexample(std::vector<Claim>& out, std::uint64_t seed);// 11

std::vector<std::string> suite_names();

/// Runs a named suite: one of ivfree, structure, typeB, typeC, FG,
/// counterexample, bounds, all.
VerificationReport run_suite(const std::string& name, std::uint64_t seed);

} // namespace charplie
