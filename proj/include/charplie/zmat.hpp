#pragma once

#include <cstdint>
#include <vector>

#include "charplie/error.hpp"
#include "charplie/linalg.hpp"

namespace charplie {

/// Small dense integer matrix; scratch type for integral structure constants,
/// divided powers and model-building, before reduction mod p.
struct ZMat {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    static ZMat identity(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    long long& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    long long at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    bool is_zero() const {
        for (long long v : a)
            if (v) return false;
        return true;
    }

    ZMat operator*(const ZMat& o) const {
        if (cols != o.rows) throw error("ZMat*: shape mismatch");
        ZMat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                long long v = at(i, k);
                if (!v) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    ZMat operator-(const ZMat& o) const {
        ZMat r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
        return r;
    }

    ZMat operator+(const ZMat& o) const {
        ZMat r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
        return r;
    }

    ZMat bracket(const ZMat& o) const { return *this * o - o * *this; }

    /// Entrywise exact division; throws if any entry is not divisible.
    ZMat divided(long long q) const {
        ZMat r = *this;
        for (auto& v : r.a) {
            if (v % q) throw invariant_error("ZMat::divided: inexact division");
            v /= q;
        }
        return r;
    }

    Mat mod_p(const Field& f) const {
        Mat m(f, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                long long v = at(i, j) % f.p();
                if (v) m.set(i, j, f.from_int(v));
            }
        return m;
    }
};

} // namespace charplie
