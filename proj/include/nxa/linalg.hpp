/**
 * @file linalg.hpp
 * @brief Dense exact-rational vectors, matrices and the elimination kernel.
 *
 * Everything here works over the exact Scalar type: no floating point, no
 * tolerances.  Elimination uses the deterministic first-nonzero pivot rule
 * (columns scanned left to right, rows top to bottom), so echelon forms,
 * kernels, particular solutions and span closures are reproducible across
 * runs and platforms.
 */
#pragma once

#include "nxa/rational.hpp"

#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nxa {

/// Dense column vector of Scalars.
using Vec = std::vector<Scalar>;

// ---------------------------------------------------------------------------
// Vec helpers
// ---------------------------------------------------------------------------

/// Zero vector of length n.
inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

/// Standard basis vector e_i in dimension n.
inline Vec unit_vec(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("unit_vec: index out of range");
    Vec v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec +: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec -: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline Vec operator-(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

/// Euclidean pairing sum_i a_i b_i (no conjugation; exact).
inline Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// ---------------------------------------------------------------------------
// Mat
// ---------------------------------------------------------------------------

/// Dense rows x cols matrix of Scalars with exact arithmetic.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Build a matrix from row vectors (all the same length).
    static Mat from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Mat(0, 0);
        Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols())
                throw std::invalid_argument("Mat::from_rows: ragged rows");
            for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) { return a_[idx(r, c)]; }
    const Scalar& operator()(int r, int c) const { return a_[idx(r, c)]; }

    Vec row(int r) const {
        Vec v(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) v[static_cast<std::size_t>(j)] = (*this)(r, j);
        return v;
    }

    Vec col(int c) const {
        Vec v(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, c);
        return v;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Scalar trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace: not square");
        Scalar s = 0;
        for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    /// Matrix-vector product (v a column vector of length cols()).
    Vec apply(const Vec& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
        Vec r(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) {
            Scalar s = 0;
            for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)] = s;
        }
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat *: size mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o(k, j) == 0) continue;
                    r(i, j) += aik * o(k, j);
                }
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat +: size mismatch");
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat -: size mismatch");
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Mat operator-() const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    friend Mat operator*(const Scalar& c, const Mat& m) {
        Mat r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
        return r;
    }

  private:
    std::size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("Mat: index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }
    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// Commutator AB - BA.
inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Mat m;                        ///< reduced row echelon form
    std::vector<int> pivot_cols;  ///< pivot column of each nonzero row
    int rank = 0;
};

/// Reduced row echelon form. Pivot rule: scan columns left to right, take the
/// first (topmost unprocessed) row whose entry in that column is nonzero.
inline Echelon rref(Mat m) {
    Echelon e;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Scalar f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    e.m = std::move(m);
    return e;
}

inline int rank_of(const Mat& m) { return rref(m).rank; }

/// One particular solution of A x = b (free variables set to zero), or
/// nullopt when the system is inconsistent.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    Echelon e = rref(std::move(aug));
    Vec x(static_cast<std::size_t>(a.cols()));
    for (int r = 0; r < e.rank; ++r) {
        int pc = e.pivot_cols[static_cast<std::size_t>(r)];
        if (pc == a.cols()) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
        x[static_cast<std::size_t>(pc)] = e.m(r, a.cols());
    }
    return x;
}

/// Basis of the null space of A, one vector per free column, in increasing
/// free-column order (deterministic).
inline std::vector<Vec> kernel_basis(const Mat& a) {
    Echelon e = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int pc : e.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        Vec v(static_cast<std::size_t>(a.cols()));
        v[static_cast<std::size_t>(c)] = 1;
        for (int r = 0; r < e.rank; ++r)
            v[static_cast<std::size_t>(e.pivot_cols[static_cast<std::size_t>(r)])] = -e.m(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact inverse, or nullopt when A is singular (or not square).
inline std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    int n = a.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref(std::move(aug));
    if (e.rank < n || e.pivot_cols[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
    return inv;
}

/// Exact determinant via Gaussian elimination with the first-nonzero pivot rule.
inline Scalar det(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    Scalar d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Scalar inv = 1 / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Scalar f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

/// Coefficients c[0..n] of the characteristic polynomial
/// det(lambda I - A) = sum_k c[k] lambda^k (monic: c[n] = 1), computed by the
/// exact trace-recurrence method.
inline std::vector<Scalar> charpoly(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: not square");
    int n = a.rows();
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    Mat m = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        Scalar ck = -m.trace() / k;
        c[static_cast<std::size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) m(i, i) += ck;
    }
    return c;
}

/// Evaluate a coefficient vector (as returned by charpoly) at x by Horner.
inline Scalar poly_eval(const std::vector<Scalar>& coeffs, const Scalar& x) {
    Scalar v = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
    return v;
}

// ---------------------------------------------------------------------------
// Incremental span / closure
// ---------------------------------------------------------------------------

/// Maintains a subspace basis in reduced echelon form; supports exact
/// membership-reducing insertion in deterministic order.
class SpanBuilder {
  public:
    explicit SpanBuilder(int ambient_dim) : n_(ambient_dim) {}

    int ambient_dim() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduce v against the current basis; if a nonzero remainder is left,
    /// insert it (normalized, echelon order kept) and return it. Returns
    /// nullopt when v was already in the span.
    std::optional<Vec> add(Vec v) {
        if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("SpanBuilder::add: size mismatch");
        reduce(v);
        int lead = leading_index(v);
        if (lead < 0) return std::nullopt;
        Scalar inv = 1 / v[static_cast<std::size_t>(lead)];
        for (auto& x : v) x *= inv;
        // eliminate the new pivot from existing rows, then insert in pivot order
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Scalar f = rows_[r][static_cast<std::size_t>(lead)];
            if (f == 0) continue;
            for (int j = 0; j < n_; ++j) rows_[r][static_cast<std::size_t>(j)] -= f * v[static_cast<std::size_t>(j)];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), v);
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return v;
    }

    /// True if v lies in the current span.
    bool contains(Vec v) const {
        reduce(v);
        return leading_index(v) < 0;
    }

    /// Echelonized basis rows, ordered by pivot column.
    const std::vector<Vec>& basis() const { return rows_; }

    const std::vector<int>& pivots() const { return pivots_; }

  private:
    void reduce(Vec& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Scalar f = v[static_cast<std::size_t>(pivots_[r])];
            if (f == 0) continue;
            for (int j = 0; j < n_; ++j) v[static_cast<std::size_t>(j)] -= f * rows_[r][static_cast<std::size_t>(j)];
        }
    }
    static int leading_index(const Vec& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    }
    int n_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

/// Smallest subspace containing the seeds and stable under every operator in
/// ops, as an echelonized basis.  Worklist closure, deterministic.  If
/// max_dim >= 0, stops growing once the rank reaches max_dim (useful with
/// max_dim = ambient dimension: reaching it proves the closure is everything).
inline std::vector<Vec> span_closure(const std::vector<Vec>& seeds, const std::vector<Mat>& ops,
                                     int ambient_dim, int max_dim = -1) {
    SpanBuilder sb(ambient_dim);
    std::deque<Vec> work;
    for (const auto& s : seeds)
        if (auto ins = sb.add(s)) work.push_back(*ins);
    while (!work.empty()) {
        if (max_dim >= 0 && sb.rank() >= max_dim) break;
        Vec v = std::move(work.front());
        work.pop_front();
        for (const auto& op : ops) {
            if (auto ins = sb.add(op.apply(v))) {
                work.push_back(*ins);
                if (max_dim >= 0 && sb.rank() >= max_dim) return sb.basis();
            }
        }
    }
    return sb.basis();
}

/// Orthogonal complement of the span of the given rows with respect to the
/// standard Euclidean pairing (exact), as an echelonized basis.
inline std::vector<Vec> perp_complement(const std::vector<Vec>& rows, int ambient_dim) {
    if (rows.empty()) {
        std::vector<Vec> full;
        for (int i = 0; i < ambient_dim; ++i) full.push_back(unit_vec(ambient_dim, i));
        return full;
    }
    return kernel_basis(Mat::from_rows(rows));
}

}  // namespace nxa
