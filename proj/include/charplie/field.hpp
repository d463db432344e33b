#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "charplie/error.hpp"

namespace charplie {

/// Element of GF(p^k) in polynomial-basis form, p in {2,3}, k <= 64.
///
/// For p = 2 the coefficient of x^i is bit i of `lo` (`hi` is unused and zero).
/// For p = 3 the coefficient of x^i is (lo>>i & 1) + 2*(hi>>i & 1); the digit
/// value 3 never occurs in canonical form.
struct FieldElement {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool operator==(const FieldElement&) const = default;
};

/// Deterministic splittable RNG (splitmix64). One stream per owner.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Derives an independent child stream; the parent stream is unchanged.
    Rng split(std::uint64_t salt) const {
        Rng mixer(state_ ^ (salt * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
        return Rng(mixer.next());
    }

    std::uint64_t seed_state() const { return state_; }

private:
    std::uint64_t state_;
};

/// GF(p^k) with a fixed modulus taken from the shipped table: the monic
/// irreducible of degree k over GF(p) whose non-leading coefficient vector has
/// the smallest base-p integer encoding.  Same (p,k) always yields the same
/// field.
class Field {
public:
    Field() = default; // GF(2)

    static Field make(int p, int k);

    static const char* table_version() { return "charplie-modtable-v1"; }

    int p() const { return p_; }
    int k() const { return k_; }

    bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    FieldElement zero() const { return {}; }
    FieldElement one() const { return {1, 0}; }
    bool is_zero(const FieldElement& a) const { return a.lo == 0 && a.hi == 0; }

    /// Embeds an integer via the prime subfield.
    FieldElement from_int(long long v) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;

    /// a^e with e >= 0.
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// Uniform over all p^k elements; exact, via rejection for p = 3.
    FieldElement sample(Rng& rng) const;

    /// One hex digit per coefficient, x^0 first (little-endian).
    std::string to_hex(const FieldElement& a) const;
    FieldElement from_hex(const std::string& s) const;

    /// Coefficient of x^i of the modulus (0 <= i < k; leading term is monic).
    int modulus_coeff(int i) const;

    /// Digit i of an element (0..p-1).
    int coeff(const FieldElement& a, int i) const {
        return int((a.lo >> i) & 1) + 2 * int((a.hi >> i) & 1);
    }

private:
    Field(int p, int k, std::uint64_t mlo, std::uint64_t mhi)
        : p_(p), k_(k), mod_lo_(mlo), mod_hi_(mhi) {}

    int p_ = 2;
    int k_ = 1;
    std::uint64_t mod_lo_ = 0; // non-leading modulus coefficients, same packing as FieldElement
    std::uint64_t mod_hi_ = 0;
};

} // namespace charplie
