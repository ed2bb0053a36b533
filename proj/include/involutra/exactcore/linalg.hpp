#pragma once

/// @file linalg.hpp
/// @brief Dense exact linear algebra over a finite field: reduced row echelon
/// form with deterministic leftmost pivoting, kernels, images, affine solves
/// with canonical witnesses, and subspace calculus (membership, intersection,
/// sum, quotient with coset representatives).

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "involutra/exactcore/field.hpp"

namespace involutra::exactcore {

/// @brief Dense matrix over a finite field.  A matrix represents the linear
/// map x -> M*x on column vectors; basis collections are stored as rows.
class Mat {
  public:
    Mat(FiniteField field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)),
          rows_(rows),
          cols_(cols),
          a_(rows * cols, 0) {}

    static Mat identity(const FiniteField& field, std::size_t n) {
        Mat m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// @brief Build a matrix from row vectors; `cols` disambiguates the
    /// empty collection.
    static Mat from_rows(const FiniteField& field,
                         const std::vector<std::vector<Fel>>& rows,
                         std::size_t cols) {
        Mat m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("matrix: ragged row list");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const FiniteField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fel& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Fel at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Fel> row(std::size_t i) const {
        return std::vector<Fel>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix: dimension mismatch in product");
        Mat c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Fel aik = a.at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) = a.field_.add(c.at(i, j),
                                              a.field_.mul(aik, b.at(k, j)));
            }
        return c;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix: dimension mismatch in sum");
        Mat c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i)
            c.a_[i] = a.field_.add(c.a_[i], b.a_[i]);
        return c;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix: dimension mismatch in difference");
        Mat c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i)
            c.a_[i] = a.field_.sub(c.a_[i], b.a_[i]);
        return c;
    }

    Mat scaled(Fel s) const {
        Mat c = *this;
        for (auto& v : c.a_) v = field_.mul(v, s);
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::vector<Fel> apply(const std::vector<Fel>& x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("matrix: dimension mismatch in apply");
        std::vector<Fel> y(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0)
                    y[i] = field_.add(y[i], field_.mul(at(i, j), x[j]));
        return y;
    }

    static Mat stack_vertical(const Mat& a, const Mat& b) {
        if (a.cols_ != b.cols_)
            throw std::invalid_argument("matrix: dimension mismatch in vertical stack");
        Mat c(a.field_, a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.at(a.rows_ + i, j) = b.at(i, j);
        return c;
    }

    static Mat stack_horizontal(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_)
            throw std::invalid_argument("matrix: dimension mismatch in horizontal stack");
        Mat c(a.field_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.at(i, a.cols_ + j) = b.at(i, j);
        }
        return c;
    }

  private:
    FiniteField field_;
    std::size_t rows_, cols_;
    std::vector<Fel> a_;
};

/// @brief Reduced row echelon form together with its pivot columns.
struct RrefResult {
    Mat mat;
    std::vector<std::size_t> pivots;
};

/// @brief Gauss-Jordan elimination with deterministic pivoting: columns are
/// scanned left to right and the first nonzero row below the cursor wins.
inline RrefResult rref(Mat m) {
    const FiniteField& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(r, j));
        const Fel s = F.inv(m.at(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(r, j) = F.mul(m.at(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Fel f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

/// @brief Reduce `v` modulo the row space of an RREF basis; the result has
/// zero coordinates at all pivot columns, making it the canonical coset
/// representative.
inline std::vector<Fel> reduce_by(const RrefResult& basis, std::vector<Fel> v) {
    const FiniteField& F = basis.mat.field();
    if (v.size() != basis.mat.cols())
        throw std::invalid_argument("reduce_by: dimension mismatch");
    for (std::size_t r = 0; r < basis.pivots.size(); ++r) {
        const Fel coef = v[basis.pivots[r]];
        if (coef == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = F.sub(v[j], F.mul(coef, basis.mat.at(r, j)));
    }
    return v;
}

/// @brief Canonical basis (RREF rows) of the right kernel {x : M x = 0}.
inline Mat kernel_basis(const Mat& m) {
    const FiniteField& F = m.field();
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const std::size_t p : red.pivots) is_pivot[p] = true;
    std::vector<std::vector<Fel>> rows;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Fel> v(m.cols(), 0);
        v[c] = 1;
        for (std::size_t r = 0; r < red.pivots.size(); ++r)
            v[red.pivots[r]] = F.neg(red.mat.at(r, c));
        rows.push_back(std::move(v));
    }
    return rref(Mat::from_rows(F, rows, m.cols())).mat;
}

/// @brief RREF basis of the row space, with zero rows dropped.
inline Mat row_space_basis(const Mat& m) {
    const RrefResult red = rref(m);
    Mat out(m.field(), red.pivots.size(), m.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = red.mat.at(i, j);
    return out;
}

/// @brief RREF basis of the image (column space) of the map x -> M x.
inline Mat image_basis(const Mat& m) { return row_space_basis(m.transpose()); }

/// @brief Solve M x = target exactly.  Returns the canonical witness: the
/// particular solution reduced by the kernel so its coordinates at all kernel
/// pivot columns vanish; nullopt when the system is inconsistent.
inline std::optional<std::vector<Fel>> linear_solve(const Mat& m,
                                                    const std::vector<Fel>& target) {
    const FiniteField& F = m.field();
    if (target.size() != m.rows())
        throw std::invalid_argument("linear_solve: dimension mismatch");
    Mat aug(F, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = target[i];
    }
    const RrefResult red = rref(std::move(aug));
    for (const std::size_t p : red.pivots)
        if (p == m.cols()) return std::nullopt;
    std::vector<Fel> x(m.cols(), 0);
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
        x[red.pivots[r]] = red.mat.at(r, m.cols());
    const Mat ker = kernel_basis(m);
    if (ker.rows() > 0) x = reduce_by({ker, rref(ker).pivots}, std::move(x));
    return x;
}

inline bool same_span(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) return false;
    return row_space_basis(a) == row_space_basis(b);
}

/// @brief A linear subspace of k^ambient held as a canonical RREF basis.
class Subspace {
  public:
    Subspace(const FiniteField& field, std::size_t ambient)
        : basis_(field, 0, ambient) {}

    static Subspace from_span(const Mat& vectors) {
        Subspace s(vectors.field(), vectors.cols());
        s.basis_ = row_space_basis(vectors);
        return s;
    }

    static Subspace full(const FiniteField& field, std::size_t ambient) {
        return from_span(Mat::identity(field, ambient));
    }

    const Mat& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }

    bool contains(const std::vector<Fel>& v) const {
        const auto r = reduce_by({basis_, pivot_cols()}, v);
        for (const Fel x : r)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.basis_.rows(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    /// Canonical representative of v + this subspace.
    std::vector<Fel> project(const std::vector<Fel>& v) const {
        return reduce_by({basis_, pivot_cols()}, v);
    }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.ambient() != b.ambient())
            throw std::invalid_argument("subspace: ambient dimension mismatch");
        return from_span(Mat::stack_vertical(a.basis_, b.basis_));
    }

    /// @brief Zassenhaus intersection: row-reduce [A|A; B|0] and harvest the
    /// right blocks of rows whose left block vanished.
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient() != b.ambient())
            throw std::invalid_argument("subspace: ambient dimension mismatch");
        const FiniteField& F = a.basis_.field();
        const std::size_t n = a.ambient();
        Mat top = Mat::stack_horizontal(a.basis_, a.basis_);
        Mat bottom = Mat::stack_horizontal(b.basis_, Mat(F, b.basis_.rows(), n));
        const RrefResult red = rref(Mat::stack_vertical(top, bottom));
        std::vector<std::vector<Fel>> rows;
        for (std::size_t i = 0; i < red.mat.rows(); ++i) {
            bool left_zero = true;
            for (std::size_t j = 0; j < n && left_zero; ++j)
                if (red.mat.at(i, j) != 0) left_zero = false;
            if (!left_zero) continue;
            std::vector<Fel> v(n, 0);
            bool nonzero = false;
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = red.mat.at(i, n + j);
                nonzero = nonzero || v[j] != 0;
            }
            if (nonzero) rows.push_back(std::move(v));
        }
        return from_span(Mat::from_rows(F, rows, n));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }

  private:
    std::vector<std::size_t> pivot_cols() const {
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            for (std::size_t j = 0; j < basis_.cols(); ++j)
                if (basis_.at(i, j) != 0) {
                    p.push_back(j);
                    break;
                }
        return p;
    }

    Mat basis_;
};

/// @brief Quotient of `space` by a contained subspace: coset representatives
/// (canonical, with vanishing coordinates at the denominator's pivots) plus a
/// projection map.
struct QuotientSpace {
    Subspace denominator;
    std::vector<std::vector<Fel>> reps;  ///< basis of a complement, RREF rows

    std::size_t dim() const { return reps.size(); }

    std::vector<Fel> project(const std::vector<Fel>& v) const {
        return denominator.project(v);
    }
};

inline QuotientSpace quotient(const Subspace& space, const Subspace& by) {
    if (space.ambient() != by.ambient())
        throw std::invalid_argument("quotient: ambient dimension mismatch");
    if (!space.contains(by))
        throw std::invalid_argument("quotient: denominator is not contained in the space");
    std::vector<std::vector<Fel>> reduced;
    for (std::size_t i = 0; i < space.basis().rows(); ++i) {
        auto v = by.project(space.basis().row(i));
        bool nonzero = false;
        for (const Fel x : v) nonzero = nonzero || x != 0;
        if (nonzero) reduced.push_back(std::move(v));
    }
    const Mat reps =
        row_space_basis(Mat::from_rows(space.basis().field(), reduced, space.ambient()));
    QuotientSpace q{by, {}};
    for (std::size_t i = 0; i < reps.rows(); ++i) q.reps.push_back(reps.row(i));
    return q;
}

/// @brief Visit every vector in the span of `basis` rows (all q^dim
/// coefficient tuples), in lexicographic coefficient order starting from 0.
inline void for_each_in_span(const Mat& basis,
                             const std::function<void(const std::vector<Fel>&)>& fn) {
    const FiniteField& F = basis.field();
    const std::size_t k = basis.rows();
    std::vector<Fel> coeff(k, 0);
    std::vector<Fel> v(basis.cols(), 0);
    const auto bump = [&](std::size_t i, Fel from, Fel to) {
        const Fel delta = F.sub(to, from);
        if (delta == 0) return;
        for (std::size_t j = 0; j < basis.cols(); ++j)
            v[j] = F.add(v[j], F.mul(delta, basis.at(i, j)));
    };
    while (true) {
        fn(v);
        std::size_t i = 0;
        for (; i < k; ++i) {
            const Fel cur = coeff[i];
            const Fel next = static_cast<Fel>((cur + 1u) % F.order());
            bump(i, cur, next);
            coeff[i] = next;
            if (next != 0) break;  // no carry
        }
        if (i == k) break;
    }
}

}  // namespace involutra::exactcore
