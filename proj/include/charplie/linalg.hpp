#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charplie/field.hpp"

namespace charplie {

using Vec = std::vector<FieldElement>;

/// Dense matrix over a Field.  Rows over GF(2) proper (k = 1) are bit-packed
/// and eliminated with word-level XOR; every other field uses the generic
/// scalar path.  Pivoting is deterministic (first nonzero), so all derived
/// bases are bit-reproducible.
class Mat {
public:
    Mat() : Mat(Field(), 0, 0) {}
    Mat(const Field& f, int rows, int cols);

    static Mat identity(const Field& f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    FieldElement get(int r, int c) const;
    void set(int r, int c, const FieldElement& v);

    bool is_zero() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    bool operator==(const Mat& o) const;

    Mat scaled(const FieldElement& c) const;
    Mat transpose() const;
    Mat pow(std::uint64_t e) const;

    /// Matrix-vector product (v as column).
    Vec apply(const Vec& v) const;

    /// Row-echelon reduce (RREF).  Returns the reduced matrix; pivot columns
    /// (one per nonzero row) are appended to *pivots when given.
    Mat rref(std::vector<int>* pivots = nullptr) const;

    int rank() const;

    /// Re-embeds entries into an extension field with the same characteristic.
    Mat lift(const Field& ext) const;

    Vec row_vec(int r) const;
    void set_row(int r, const Vec& v);

    /// Dump format: header "p k rows cols", then one hex row per matrix row
    /// (entries concatenated, k digits each, x^0 first).
    std::string dump() const;
    static Mat parse(const std::string& text);

private:
    friend class Subspace;

    bool packed() const { return packed_; }
    int words_per_row() const { return wpr_; }
    std::uint64_t* row_ptr(int r) { return bits_.data() + std::size_t(r) * wpr_; }
    const std::uint64_t* row_ptr(int r) const { return bits_.data() + std::size_t(r) * wpr_; }

    Field field_;
    int rows_ = 0, cols_ = 0;
    bool packed_ = false;
    int wpr_ = 0;
    std::vector<std::uint64_t> bits_; // packed storage
    std::vector<FieldElement> a_;     // generic storage
};

/// Linear subspace of k^ambient, stored as the unique RREF basis (rows span).
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(const Field& f, int ambient);
    static Subspace full(const Field& f, int ambient);
    static Subspace from_rows(const Field& f, int ambient, const std::vector<Vec>& rows);
    static Subspace from_matrix_rows(const Mat& m);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Field& field() const { return basis_.field(); }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(int i) const { return basis_.row_vec(i); }

    bool contains_vector(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// v reduced modulo the subspace (canonical coset representative).
    Vec reduce(const Vec& v) const;

    /// Surjection k^ambient -> k^(ambient-dim) with kernel exactly this
    /// subspace (coordinates at the non-pivot columns after reduction).
    Mat quotient_map() const;

    Subspace lift(const Field& ext) const;

    bool operator==(const Subspace& o) const;

private:
    int ambient_ = 0;
    Mat basis_; // RREF, no zero rows
};

Subspace kernel(const Mat& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Solves A x = b exactly; nullopt when inconsistent.
std::optional<Vec> solve(const Mat& A, const Vec& b);

/// Incremental row-echelon accumulator for closure computations.  Rows are
/// kept forward-reduced with unit pivots, ordered by pivot column.
class EchelonBasis {
public:
    EchelonBasis(const Field& f, int ambient) : field_(f), ambient_(ambient) {}

    /// Reduces v against the current rows; inserts the remainder if nonzero.
    /// Returns true when the vector enlarged the span.
    bool insert(Vec v);
    bool contains(const Vec& v) const;
    int dim() const { return int(rows_.size()); }
    int ambient_dim() const { return ambient_; }
    const Vec& row(int i) const { return rows_[std::size_t(i)]; }
    Subspace to_subspace() const;

private:
    Field field_;
    int ambient_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

} // namespace charplie
