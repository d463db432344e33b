#include "charplie/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace charplie {

namespace {

void check_same_field(const Field& a, const Field& b, const char* what) {
    if (a != b) throw error(std::string(what) + ": field mismatch");
}

} // namespace

Mat::Mat(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), packed_(f.p() == 2 && f.k() == 1) {
    if (rows < 0 || cols < 0) throw error("Mat: negative dimensions");
    if (packed_) {
        wpr_ = (cols + 63) / 64;
        bits_.assign(std::size_t(rows) * wpr_, 0);
    } else {
        a_.assign(std::size_t(rows) * cols, FieldElement{});
    }
}

Mat Mat::identity(const Field& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

FieldElement Mat::get(int r, int c) const {
    if (packed_) {
        std::uint64_t w = row_ptr(r)[c >> 6];
        return {(w >> (c & 63)) & 1, 0};
    }
    return a_[std::size_t(r) * cols_ + c];
}

void Mat::set(int r, int c, const FieldElement& v) {
    if (packed_) {
        std::uint64_t bit = 1ULL << (c & 63);
        if (v.lo & 1)
            row_ptr(r)[c >> 6] |= bit;
        else
            row_ptr(r)[c >> 6] &= ~bit;
    } else {
        a_[std::size_t(r) * cols_ + c] = v;
    }
}

bool Mat::is_zero() const {
    if (packed_) {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }
    for (const auto& e : a_)
        if (e.lo || e.hi) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           bits_ == o.bits_ && a_ == o.a_;
}

Mat Mat::operator+(const Mat& o) const {
    check_same_field(field_, o.field_, "Mat+");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("Mat+: shape mismatch");
    Mat r = *this;
    if (packed_) {
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] ^= o.bits_[i];
    } else {
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
    }
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    check_same_field(field_, o.field_, "Mat-");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("Mat-: shape mismatch");
    Mat r = *this;
    if (packed_) {
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] ^= o.bits_[i];
    } else {
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
    }
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    check_same_field(field_, o.field_, "Mat*");
    if (cols_ != o.rows_) throw error("Mat*: inner dimension mismatch");
    Mat r(field_, rows_, o.cols_);
    if (packed_) {
        for (int i = 0; i < rows_; ++i) {
            std::uint64_t* out = r.row_ptr(i);
            const std::uint64_t* ai = row_ptr(i);
            for (int j = 0; j < cols_; ++j) {
                if ((ai[j >> 6] >> (j & 63)) & 1) {
                    const std::uint64_t* bj = o.row_ptr(j);
                    for (int w = 0; w < r.wpr_; ++w) out[w] ^= bj[w];
                }
            }
        }
        return r;
    }
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const FieldElement aij = a_[std::size_t(i) * cols_ + j];
            if (!aij.lo && !aij.hi) continue;
            for (int c = 0; c < o.cols_; ++c) {
                FieldElement t = field_.mul(aij, o.a_[std::size_t(j) * o.cols_ + c]);
                auto& dst = r.a_[std::size_t(i) * o.cols_ + c];
                dst = field_.add(dst, t);
            }
        }
    return r;
}

Mat Mat::scaled(const FieldElement& c) const {
    Mat r = *this;
    if (packed_) {
        if (!(c.lo & 1)) return Mat(field_, rows_, cols_);
        return r;
    }
    for (auto& e : r.a_) e = field_.mul(e, c);
    return r;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, get(i, j));
    return r;
}

Mat Mat::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw error("Mat::pow: square matrix required");
    Mat r = identity(field_, rows_);
    Mat b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw error("Mat::apply: size mismatch");
    Vec r(rows_, FieldElement{});
    if (packed_) {
        for (int i = 0; i < rows_; ++i) {
            const std::uint64_t* ai = row_ptr(i);
            std::uint64_t acc = 0;
            for (int j = 0; j < cols_; ++j)
                if ((ai[j >> 6] >> (j & 63)) & 1) acc ^= v[j].lo & 1;
            r[i] = {acc, 0};
        }
        return r;
    }
    for (int i = 0; i < rows_; ++i) {
        FieldElement acc{};
        for (int j = 0; j < cols_; ++j) {
            const FieldElement& aij = a_[std::size_t(i) * cols_ + j];
            if (!aij.lo && !aij.hi) continue;
            acc = field_.add(acc, field_.mul(aij, v[j]));
        }
        r[i] = acc;
    }
    return r;
}

Mat Mat::rref(std::vector<int>* pivots) const {
    Mat m = *this;
    int pr = 0; // next pivot row
    for (int c = 0; c < cols_ && pr < rows_; ++c) {
        // deterministic pivot: first row with nonzero entry in column c
        int sel = -1;
        for (int r = pr; r < rows_; ++r) {
            FieldElement v = m.get(r, c);
            if (v.lo || v.hi) { sel = r; break; }
        }
        if (sel < 0) continue;
        if (sel != pr) {
            if (m.packed_) {
                for (int w = 0; w < m.wpr_; ++w) std::swap(m.row_ptr(sel)[w], m.row_ptr(pr)[w]);
            } else {
                for (int j = 0; j < cols_; ++j) {
                    FieldElement t = m.get(sel, j);
                    m.set(sel, j, m.get(pr, j));
                    m.set(pr, j, t);
                }
            }
        }
        if (!m.packed_) {
            FieldElement piv = m.get(pr, c);
            if (!(piv == field_.one())) {
                FieldElement ip = field_.inv(piv);
                for (int j = c; j < cols_; ++j) m.set(pr, j, field_.mul(ip, m.get(pr, j)));
            }
        }
        if (m.packed_) {
            const std::uint64_t* prow = m.row_ptr(pr);
            for (int r = 0; r < rows_; ++r) {
                if (r == pr) continue;
                if ((m.row_ptr(r)[c >> 6] >> (c & 63)) & 1) {
                    std::uint64_t* rr = m.row_ptr(r);
                    for (int w = 0; w < m.wpr_; ++w) rr[w] ^= prow[w];
                }
            }
        } else {
            for (int r = 0; r < rows_; ++r) {
                if (r == pr) continue;
                FieldElement f = m.get(r, c);
                if (!f.lo && !f.hi) continue;
                for (int j = c; j < cols_; ++j)
                    m.set(r, j, field_.sub(m.get(r, j), field_.mul(f, m.get(pr, j))));
            }
        }
        if (pivots) pivots->push_back(c);
        ++pr;
    }
    return m;
}

int Mat::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return int(piv.size());
}

Mat Mat::lift(const Field& ext) const {
    if (ext.p() != field_.p()) throw error("Mat::lift: characteristic mismatch");
    if (ext == field_) return *this;
    Mat r(ext, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            FieldElement v = get(i, j);
            // prime-subfield digits embed verbatim in the polynomial basis
            r.set(i, j, v);
        }
    return r;
}

Vec Mat::row_vec(int r) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = get(r, j);
    return v;
}

void Mat::set_row(int r, const Vec& v) {
    if (int(v.size()) != cols_) throw error("Mat::set_row: size mismatch");
    for (int j = 0; j < cols_; ++j) set(r, j, v[j]);
}

std::string Mat::dump() const {
    std::ostringstream os;
    os << field_.p() << ' ' << field_.k() << ' ' << rows_ << ' ' << cols_ << '\n';
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) os << field_.to_hex(get(i, j));
        os << '\n';
    }
    return os.str();
}

Mat Mat::parse(const std::string& text) {
    std::istringstream is(text);
    int p, k, rows, cols;
    if (!(is >> p >> k >> rows >> cols)) throw error("Mat::parse: bad header");
    Field f = Field::make(p, k);
    Mat m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        std::string line;
        if (!(is >> line)) throw error("Mat::parse: missing row");
        if (int(line.size()) != cols * k) throw error("Mat::parse: bad row length");
        for (int j = 0; j < cols; ++j) m.set(i, j, f.from_hex(line.substr(std::size_t(j) * k, k)));
    }
    return m;
}

// ---------------------------------------------------------------------------

Subspace Subspace::zero(const Field& f, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat(f, 0, ambient);
    return s;
}

Subspace Subspace::full(const Field& f, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat::identity(f, ambient);
    return s;
}

Subspace Subspace::from_matrix_rows(const Mat& m) {
    std::vector<int> piv;
    Mat r = m.rref(&piv);
    Subspace s;
    s.ambient_ = m.cols();
    s.basis_ = Mat(m.field(), int(piv.size()), m.cols());
    for (int i = 0; i < int(piv.size()); ++i) s.basis_.set_row(i, r.row_vec(i));
    return s;
}

Subspace Subspace::from_rows(const Field& f, int ambient, const std::vector<Vec>& rows) {
    Mat m(f, int(rows.size()), ambient);
    for (int i = 0; i < int(rows.size()); ++i) m.set_row(i, rows[i]);
    return from_matrix_rows(m);
}

Vec Subspace::reduce(const Vec& v) const {
    const Field& f = field();
    Vec r = v;
    for (int i = 0; i < dim(); ++i) {
        // pivot of row i = first nonzero column (rows are RREF)
        int pc = -1;
        for (int j = 0; j < ambient_; ++j) {
            FieldElement e = basis_.get(i, j);
            if (e.lo || e.hi) { pc = j; break; }
        }
        FieldElement c = r[pc];
        if (!c.lo && !c.hi) continue;
        for (int j = pc; j < ambient_; ++j)
            r[j] = f.sub(r[j], f.mul(c, basis_.get(i, j)));
    }
    return r;
}

bool Subspace::contains_vector(const Vec& v) const {
    Vec r = reduce(v);
    for (const auto& e : r)
        if (e.lo || e.hi) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw error("Subspace::contains: ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains_vector(other.basis_vector(i))) return false;
    return true;
}

Mat Subspace::quotient_map() const {
    const Field& f = field();
    std::vector<int> piv;
    basis_.rref(&piv); // basis is already RREF; recompute pivots
    std::vector<bool> is_piv(std::size_t(ambient_), false);
    for (int c : piv) is_piv[std::size_t(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < ambient_; ++c)
        if (!is_piv[std::size_t(c)]) free_cols.push_back(c);
    Mat q(f, int(free_cols.size()), ambient_);
    for (int c = 0; c < ambient_; ++c) {
        Vec e(std::size_t(ambient_), FieldElement{});
        e[std::size_t(c)] = f.one();
        Vec red = reduce(e);
        for (int r = 0; r < int(free_cols.size()); ++r) q.set(r, c, red[std::size_t(free_cols[r])]);
    }
    return q;
}

Subspace Subspace::lift(const Field& ext) const {
    Subspace s;
    s.ambient_ = ambient_;
    s.basis_ = basis_.lift(ext);
    return s;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const Mat& m) {
    const Field& f = m.field();
    std::vector<int> piv;
    Mat r = m.rref(&piv);
    std::vector<bool> is_piv(std::size_t(m.cols()), false);
    for (int c : piv) is_piv[std::size_t(c)] = true;
    std::vector<Vec> rows;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_piv[std::size_t(c)]) continue;
        Vec v(std::size_t(m.cols()), FieldElement{});
        v[std::size_t(c)] = f.one();
        for (int i = 0; i < int(piv.size()); ++i)
            v[std::size_t(piv[i])] = f.neg(r.get(i, c));
        rows.push_back(std::move(v));
    }
    return Subspace::from_rows(f, m.cols(), rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw error("Subspace sum: ambient mismatch");
    Mat m(a.field(), a.dim() + b.dim(), a.ambient_dim());
    for (int i = 0; i < a.dim(); ++i) m.set_row(i, a.basis_vector(i));
    for (int i = 0; i < b.dim(); ++i) m.set_row(a.dim() + i, b.basis_vector(i));
    return Subspace::from_matrix_rows(m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    // Zassenhaus: rows [a|a] and [b|0]; echelon rows with zero left half carry
    // an intersection basis in the right half.
    if (a.ambient_dim() != b.ambient_dim()) throw error("Subspace intersect: ambient mismatch");
    const Field& f = a.field();
    int n = a.ambient_dim();
    Mat m(f, a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i) {
        Vec v = a.basis_vector(i);
        for (int j = 0; j < n; ++j) {
            m.set(i, j, v[std::size_t(j)]);
            m.set(i, n + j, v[std::size_t(j)]);
        }
    }
    for (int i = 0; i < b.dim(); ++i) {
        Vec v = b.basis_vector(i);
        for (int j = 0; j < n; ++j) m.set(a.dim() + i, j, v[std::size_t(j)]);
    }
    Mat r = m.rref();
    std::vector<Vec> rows;
    for (int i = 0; i < r.rows(); ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j) {
            FieldElement e = r.get(i, j);
            if (e.lo || e.hi) left_zero = false;
        }
        if (!left_zero) continue;
        Vec right(std::size_t(n), FieldElement{});
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            right[std::size_t(j)] = r.get(i, n + j);
            if (right[std::size_t(j)].lo || right[std::size_t(j)].hi) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(right));
    }
    return Subspace::from_rows(f, n, rows);
}

bool EchelonBasis::insert(Vec v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        FieldElement c = v[std::size_t(pivots_[i])];
        if (!c.lo && !c.hi) continue;
        const Vec& r = rows_[i];
        for (int j = pivots_[i]; j < ambient_; ++j)
            v[std::size_t(j)] = field_.sub(v[std::size_t(j)], field_.mul(c, r[std::size_t(j)]));
    }
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
        if (v[std::size_t(j)].lo || v[std::size_t(j)].hi) { pc = j; break; }
    if (pc < 0) return false;
    FieldElement ip = field_.inv(v[std::size_t(pc)]);
    for (int j = pc; j < ambient_; ++j) v[std::size_t(j)] = field_.mul(ip, v[std::size_t(j)]);
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    std::size_t at = std::size_t(it - pivots_.begin());
    pivots_.insert(it, pc);
    rows_.insert(rows_.begin() + long(at), std::move(v));
    return true;
}

bool EchelonBasis::contains(const Vec& v) const {
    Vec w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        FieldElement c = w[std::size_t(pivots_[i])];
        if (!c.lo && !c.hi) continue;
        const Vec& r = rows_[i];
        for (int j = pivots_[i]; j < ambient_; ++j)
            w[std::size_t(j)] = field_.sub(w[std::size_t(j)], field_.mul(c, r[std::size_t(j)]));
    }
    for (const auto& e : w)
        if (e.lo || e.hi) return false;
    return true;
}

Subspace EchelonBasis::to_subspace() const {
    return Subspace::from_rows(field_, ambient_, rows_);
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
    if (int(b.size()) != A.rows()) throw error("solve: size mismatch");
    const Field& f = A.field();
    Mat aug(f, A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.set(i, j, A.get(i, j));
        aug.set(i, A.cols(), b[std::size_t(i)]);
    }
    std::vector<int> piv;
    Mat r = aug.rref(&piv);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] == A.cols()) return std::nullopt; // pivot in RHS column: inconsistent
    Vec x(std::size_t(A.cols()), FieldElement{});
    for (std::size_t i = 0; i < piv.size(); ++i) x[std::size_t(piv[i])] = r.get(int(i), A.cols());
    return x;
}

} // namespace charplie
