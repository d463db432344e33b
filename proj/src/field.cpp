#include "charplie/field.hpp"

#include <cstring>

namespace charplie {

#include "modulus_table.inc"

namespace {

// ---- bitsliced GF(3) digit vectors -----------------------------------------
// Digit i of (lo,hi) is (lo>>i & 1) + 2*(hi>>i & 1); the encoding 3 is invalid.

struct Tri {
    std::uint64_t lo = 0, hi = 0;
};

inline Tri tri_add(Tri a, Tri b) {
    // digitwise sum mod 3 on valid encodings
    std::uint64_t l = (~a.lo & ~a.hi & b.lo) | (a.lo & ~b.lo & ~b.hi) | (a.hi & b.hi);
    std::uint64_t h = (~a.lo & ~a.hi & b.hi) | (a.hi & ~b.lo & ~b.hi) | (a.lo & b.lo);
    return {l, h};
}

inline Tri tri_neg(Tri a) { return {a.hi, a.lo}; }

// 128-digit vector for products before reduction
struct Tri2 {
    Tri w[2];

    int digit(int i) const {
        const Tri& t = w[i >> 6];
        int s = i & 63;
        return int((t.lo >> s) & 1) + 2 * int((t.hi >> s) & 1);
    }
};

inline Tri2 tri2_shift(Tri a, int s) {
    Tri2 r;
    if (s == 0) {
        r.w[0] = a;
    } else if (s < 64) {
        r.w[0] = {a.lo << s, a.hi << s};
        r.w[1] = {a.lo >> (64 - s), a.hi >> (64 - s)};
    } else {
        r.w[1] = {a.lo << (s - 64), a.hi << (s - 64)};
    }
    return r;
}

inline void tri2_add_inplace(Tri2& acc, const Tri2& b) {
    acc.w[0] = tri_add(acc.w[0], b.w[0]);
    acc.w[1] = tri_add(acc.w[1], b.w[1]);
}

inline Tri2 tri2_neg(Tri2 a) {
    a.w[0] = tri_neg(a.w[0]);
    a.w[1] = tri_neg(a.w[1]);
    return a;
}

// ---- generic polynomial helpers for the extended Euclid inverse ------------

constexpr int kMaxDeg = 130;

struct Poly {
    std::array<std::uint8_t, kMaxDeg> c{};
    int deg = -1; // -1 for zero

    void fix_degree() {
        deg = -1;
        for (int i = kMaxDeg - 1; i >= 0; --i)
            if (c[i]) { deg = i; break; }
    }
};

Poly poly_from_element(const Field& F, FieldElement a) {
    Poly r;
    for (int i = 0; i < F.k(); ++i) r.c[i] = std::uint8_t(F.coeff(a, i));
    r.fix_degree();
    return r;
}

Poly poly_modulus(const Field& F) {
    Poly r;
    for (int i = 0; i < F.k(); ++i) r.c[i] = std::uint8_t(F.modulus_coeff(i));
    r.c[F.k()] = 1;
    r.fix_degree();
    return r;
}

// a -= s * x^shift * b  (mod p)
void poly_submul(Poly& a, int p, int s, int shift, const Poly& b) {
    if (s == 0 || b.deg < 0) return;
    for (int i = 0; i <= b.deg; ++i) {
        int v = a.c[i + shift] - s * b.c[i];
        v %= p;
        if (v < 0) v += p;
        a.c[i + shift] = std::uint8_t(v);
    }
    a.fix_degree();
}

int inv_mod_p(int v, int p) { return (p == 2) ? 1 : (v == 1 ? 1 : 2); }

} // namespace

Field Field::make(int p, int k) {
    if (p != 2 && p != 3)
        throw unsupported_error("field_create: characteristic must be 2 or 3, got " + std::to_string(p));
    if (k < 1 || k > 64)
        throw unsupported_error("field_create: extension degree must be in [1,64], got " + std::to_string(k));
    if (p == 2) return Field(2, k, kModTableP2[k - 1], 0);
    return Field(3, k, kModTableP3Lo[k - 1], kModTableP3Hi[k - 1]);
}

int Field::modulus_coeff(int i) const {
    if (i < 0 || i >= k_) throw error("modulus_coeff: index out of range");
    return int((mod_lo_ >> i) & 1) + 2 * int((mod_hi_ >> i) & 1);
}

FieldElement Field::from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    if (r == 0) return zero();
    if (r == 1) return one();
    return {0, 1}; // digit 2, only reachable for p = 3
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    if (p_ == 2) return {a.lo ^ b.lo, 0};
    Tri t = tri_add({a.lo, a.hi}, {b.lo, b.hi});
    return {t.lo, t.hi};
}

FieldElement Field::neg(const FieldElement& a) const {
    if (p_ == 2) return a;
    return {a.hi, a.lo};
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    if (p_ == 2) {
        // carryless schoolbook into 128 bits, then reduce by the modulus
        std::uint64_t plo = 0, phi = 0;
        std::uint64_t x = a.lo;
        int i = 0;
        while (x) {
            if (x & 1) {
                plo ^= b.lo << i;
                if (i) phi ^= b.lo >> (64 - i);
            }
            x >>= 1;
            ++i;
        }
        for (int d = 126; d >= k_; --d) {
            bool set = (d >= 64) ? ((phi >> (d - 64)) & 1) : ((plo >> d) & 1);
            if (!set) continue;
            int s = d - k_;
            // clear x^d and add modulus tail at shift s (monic head cancels x^d)
            if (d >= 64) phi ^= 1ULL << (d - 64); else plo ^= 1ULL << d;
            if (s < 64) {
                plo ^= mod_lo_ << s;
                if (s) phi ^= mod_lo_ >> (64 - s);
            } else {
                phi ^= mod_lo_ << (s - 64);
            }
        }
        return {plo, 0};
    }

    // p = 3
    Tri2 acc;
    for (int i = 0; i < k_; ++i) {
        int d = coeff(a, i);
        if (!d) continue;
        Tri bb = {b.lo, b.hi};
        if (d == 2) bb = tri_neg(bb);
        tri2_add_inplace(acc, tri2_shift(bb, i));
    }
    Tri modfull = {mod_lo_, mod_hi_};
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        int dv = acc.digit(d);
        if (!dv) continue;
        // x^k = -m(x), so subtract dv*(x^d) by adding -dv*(x^k + m) << (d-k)
        Tri headtail = modfull;
        // include the monic head at position k
        Tri2 f = tri2_shift(headtail, d - k_);
        Tri2 head = tri2_shift({1, 0}, d); // the x^d term itself
        tri2_add_inplace(f, head);
        if (dv == 1) f = tri2_neg(f);
        tri2_add_inplace(acc, f);
    }
    return {acc.w[0].lo, acc.w[0].hi};
}

FieldElement Field::inv(const FieldElement& a) const {
    if (is_zero(a)) throw error("field inverse of zero");
    // extended Euclid in GF(p)[x]: u*a + v*f = gcd
    Poly r0 = poly_modulus(*this), r1 = poly_from_element(*this, a);
    FieldElement t0 = zero(), t1 = one();
    while (r1.deg > 0) {
        // divide r0 by r1, applying the same ops to (t0,t1)
        while (r0.deg >= r1.deg) {
            int q = (r0.c[r0.deg] * inv_mod_p(r1.c[r1.deg], p_)) % p_;
            int shift = r0.deg - r1.deg;
            poly_submul(r0, p_, q, shift, r1);
            // t0 -= q * x^shift * t1  (as field elements: x = polynomial basis shift)
            FieldElement xs = one();
            for (int i = 0; i < shift; ++i) xs = mul(xs, FieldElement{2, 0}); // times x
            FieldElement qf = from_int(q);
            t0 = sub(t0, mul(mul(qf, xs), t1));
            if (r0.deg < 0) break;
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
    if (r1.deg != 0)
        throw invariant_error("field inverse: modulus not irreducible?");
    // scale so the gcd constant becomes 1
    int c = r1.c[0];
    FieldElement scale = from_int(inv_mod_p(c, p_));
    return mul(scale, t1);
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    FieldElement r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElement Field::sample(Rng& rng) const {
    if (p_ == 2) {
        std::uint64_t mask = (k_ == 64) ? ~0ULL : ((1ULL << k_) - 1);
        return {rng.next() & mask, 0};
    }
    FieldElement r;
    int got = 0;
    while (got < k_) {
        std::uint64_t w = rng.next();
        for (int j = 0; j < 32 && got < k_; ++j) {
            int d = int(w & 3);
            w >>= 2;
            if (d == 3) continue; // reject for exact uniformity
            r.lo |= std::uint64_t(d & 1) << got;
            r.hi |= std::uint64_t(d >> 1) << got;
            ++got;
        }
    }
    return r;
}

std::string Field::to_hex(const FieldElement& a) const {
    std::string s(std::size_t(k_), '0');
    for (int i = 0; i < k_; ++i) s[i] = char('0' + coeff(a, i));
    return s;
}

FieldElement Field::from_hex(const std::string& s) const {
    if (int(s.size()) != k_) throw error("from_hex: expected " + std::to_string(k_) + " digits");
    FieldElement r;
    for (int i = 0; i < k_; ++i) {
        int d = s[i] - '0';
        if (d < 0 || d >= p_) throw error("from_hex: digit out of range");
        r.lo |= std::uint64_t(d & 1) << i;
        r.hi |= std::uint64_t(d >> 1) << i;
    }
    return r;
}

} // namespace charplie
