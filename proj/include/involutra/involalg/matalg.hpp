#pragma once

/// @file matalg.hpp
/// @brief Matrix algebras Mat_n(R) over a commutative coefficient ring, with
/// exact inverses via base-field linear solves, reduced traces, entrywise
/// ring morphisms, Kronecker products, and the row-major vectorization that
/// the linear-algebra layer consumes.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "involutra/exactcore/algebra.hpp"
#include "involutra/exactcore/field.hpp"
#include "involutra/exactcore/linalg.hpp"

namespace involutra::involalg {

using exactcore::AlgebraHom;
using exactcore::CommAlgebra;
using exactcore::Fel;
using exactcore::FiniteField;
using exactcore::Mat;

class MatAlgebra;

/// @brief Element of Mat_n(R): n*n entries, each an R-coordinate vector.
class MatElt {
  public:
    MatElt(std::shared_ptr<const MatAlgebra> alg, std::size_t n,
           std::size_t ring_dim)
        : alg_(std::move(alg)),
          n_(n),
          e_(n * n, std::vector<Fel>(ring_dim, 0)) {}

    const std::shared_ptr<const MatAlgebra>& algebra_ptr() const { return alg_; }
    std::size_t n() const { return n_; }

    std::vector<Fel>& entry(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const std::vector<Fel>& entry(std::size_t i, std::size_t j) const {
        return e_[i * n_ + j];
    }

    friend bool operator==(const MatElt& a, const MatElt& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MatElt& a, const MatElt& b) { return !(a == b); }

  private:
    std::shared_ptr<const MatAlgebra> alg_;
    std::size_t n_;
    std::vector<std::vector<Fel>> e_;
};

/// @brief The algebra Mat_n(R) for a commutative ring R over GF(p^e).
///
/// Vectorization is row-major over entries and ring coordinates:
/// index(i, j, r) = (i*n + j)*dim(R) + r.
class MatAlgebra : public std::enable_shared_from_this<MatAlgebra> {
  public:
    static std::shared_ptr<const MatAlgebra> make(
        std::shared_ptr<const CommAlgebra> ring, std::size_t n) {
        if (!ring) throw std::invalid_argument("matrix algebra: null coefficient ring");
        if (n == 0) throw std::invalid_argument("matrix algebra: need n >= 1");
        return std::shared_ptr<const MatAlgebra>(new MatAlgebra(std::move(ring), n));
    }

    const CommAlgebra& ring() const { return *ring_; }
    const std::shared_ptr<const CommAlgebra>& ring_ptr() const { return ring_; }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return n_ * n_ * ring_->dim(); }
    const FiniteField& field() const { return ring_->field(); }

    std::size_t index(std::size_t i, std::size_t j, std::size_t r) const {
        return (i * n_ + j) * ring_->dim() + r;
    }

    MatElt zero() const {
        return MatElt(shared_from_this(), n_, ring_->dim());
    }

    MatElt identity() const {
        MatElt m = zero();
        for (std::size_t i = 0; i < n_; ++i) m.entry(i, i) = ring_->unit();
        return m;
    }

    /// Scalar matrix r * I for a ring element r.
    MatElt scalar(const std::vector<Fel>& r) const {
        MatElt m = zero();
        for (std::size_t i = 0; i < n_; ++i) m.entry(i, i) = r;
        return m;
    }

    MatElt scalar(Fel c) const { return scalar(ring_->scalar(c)); }

    std::vector<Fel> vec(const MatElt& m) const {
        check(m);
        std::vector<Fel> v(dim(), 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const auto& ent = m.entry(i, j);
                for (std::size_t r = 0; r < ring_->dim(); ++r)
                    v[index(i, j, r)] = ent[r];
            }
        return v;
    }

    MatElt unvec(const std::vector<Fel>& v) const {
        if (v.size() != dim())
            throw std::invalid_argument("matrix algebra: vector has wrong dimension");
        MatElt m = zero();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t r = 0; r < ring_->dim(); ++r)
                    m.entry(i, j)[r] = v[index(i, j, r)];
        return m;
    }

    MatElt add(const MatElt& a, const MatElt& b) const {
        check(a);
        check(b);
        MatElt c = zero();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                c.entry(i, j) = ring_->add(a.entry(i, j), b.entry(i, j));
        return c;
    }

    MatElt sub(const MatElt& a, const MatElt& b) const {
        check(a);
        check(b);
        MatElt c = zero();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                c.entry(i, j) = ring_->sub(a.entry(i, j), b.entry(i, j));
        return c;
    }

    MatElt mul(const MatElt& a, const MatElt& b) const {
        check(a);
        check(b);
        MatElt c = zero();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const auto& aik = a.entry(i, k);
                bool zero_entry = true;
                for (const Fel x : aik) zero_entry = zero_entry && x == 0;
                if (zero_entry) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    c.entry(i, j) = ring_->add(c.entry(i, j),
                                               ring_->mul(aik, b.entry(k, j)));
            }
        return c;
    }

    MatElt scale(Fel s, const MatElt& a) const {
        check(a);
        MatElt c = zero();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                c.entry(i, j) = ring_->scale(s, a.entry(i, j));
        return c;
    }

    MatElt scale_ring(const std::vector<Fel>& r, const MatElt& a) const {
        check(a);
        MatElt c = zero();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                c.entry(i, j) = ring_->mul(r, a.entry(i, j));
        return c;
    }

    /// Reduced trace of Mat_n(R): the sum of the diagonal entries.
    std::vector<Fel> trd(const MatElt& a) const {
        check(a);
        std::vector<Fel> t = ring_->zero();
        for (std::size_t i = 0; i < n_; ++i) t = ring_->add(t, a.entry(i, i));
        return t;
    }

    /// @brief k-linear matrix of left multiplication by `a` on the
    /// vectorized algebra.
    Mat left_mult_matrix(const MatElt& a) const {
        return mult_matrix_impl(a, /*left=*/true);
    }

    /// @brief k-linear matrix of right multiplication by `a`.
    Mat right_mult_matrix(const MatElt& a) const {
        return mult_matrix_impl(a, /*left=*/false);
    }

    /// @brief Exact two-sided inverse via a base-field linear solve, or
    /// nullopt when `a` is not invertible.
    std::optional<MatElt> inverse(const MatElt& a) const {
        check(a);
        const auto sol = exactcore::linear_solve(left_mult_matrix(a),
                                                 vec(identity()));
        if (!sol) return std::nullopt;
        MatElt inv = unvec(*sol);
        if (mul(inv, a) != identity()) return std::nullopt;
        return inv;
    }

    /// @brief Push every entry through a coefficient-ring morphism; `target`
    /// must be Mat_n over the morphism's codomain.
    MatElt map_entries(const MatElt& a, const AlgebraHom& hom,
                       const std::shared_ptr<const MatAlgebra>& target) const {
        check(a);
        if (hom.domain() != *ring_)
            throw std::invalid_argument(
                "matrix algebra: morphism domain differs from the coefficient ring");
        if (!target || target->n() != n_ || target->ring() != hom.codomain())
            throw std::invalid_argument(
                "matrix algebra: target does not match the morphism codomain");
        MatElt out = target->zero();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out.entry(i, j) = hom.apply(a.entry(i, j));
        return out;
    }

    /// @brief Central elements are exactly the scalar matrices r * I; returns
    /// the ring element when `a` is one.
    std::optional<std::vector<Fel>> central_scalar(const MatElt& a) const {
        check(a);
        const auto& d0 = a.entry(0, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (i == j) {
                    if (a.entry(i, j) != d0) return std::nullopt;
                } else {
                    for (const Fel x : a.entry(i, j))
                        if (x != 0) return std::nullopt;
                }
            }
        return d0;
    }

    /// @brief RREF basis (rows of vectorized elements) of the center R * I.
    Mat center_basis() const {
        std::vector<std::vector<Fel>> rows;
        for (std::size_t r = 0; r < ring_->dim(); ++r) {
            std::vector<Fel> er(ring_->dim(), 0);
            er[r] = 1;
            rows.push_back(vec(scalar(er)));
        }
        return exactcore::row_space_basis(
            Mat::from_rows(field(), rows, dim()));
    }

    friend bool operator==(const MatAlgebra& a, const MatAlgebra& b) {
        return a.n_ == b.n_ && *a.ring_ == *b.ring_;
    }
    friend bool operator!=(const MatAlgebra& a, const MatAlgebra& b) {
        return !(a == b);
    }

  private:
    MatAlgebra(std::shared_ptr<const CommAlgebra> ring, std::size_t n)
        : ring_(std::move(ring)), n_(n) {}

    void check(const MatElt& m) const {
        if (m.n() != n_)
            throw std::invalid_argument("matrix algebra: element has wrong size");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (m.entry(i, j).size() != ring_->dim())
                    throw std::invalid_argument(
                        "matrix algebra: entry has wrong coefficient dimension");
    }

    Mat mult_matrix_impl(const MatElt& a, bool left) const {
        check(a);
        Mat m(field(), dim(), dim());
        for (std::size_t col = 0; col < dim(); ++col) {
            std::vector<Fel> e(dim(), 0);
            e[col] = 1;
            const MatElt basis = unvec(e);
            const MatElt prod = left ? mul(a, basis) : mul(basis, a);
            const auto v = vec(prod);
            for (std::size_t row = 0; row < dim(); ++row) m.at(row, col) = v[row];
        }
        return m;
    }

    std::shared_ptr<const CommAlgebra> ring_;
    std::size_t n_;
};

/// @brief Kronecker product of two matrices over the SAME coefficient ring:
/// Mat_{n1}(R) x Mat_{n2}(R) -> Mat_{n1 n2}(R), entries multiplied in R.
inline MatElt kronecker_same_ring(const MatElt& a, const MatElt& b,
                                  const std::shared_ptr<const MatAlgebra>& target) {
    const auto& A = *a.algebra_ptr();
    const auto& B = *b.algebra_ptr();
    if (A.ring() != B.ring())
        throw std::invalid_argument("kronecker: factors over different rings");
    const std::size_t n1 = A.n(), n2 = B.n();
    if (!target || target->n() != n1 * n2 || target->ring() != A.ring())
        throw std::invalid_argument(
            "kronecker: target algebra does not match the factor sizes");
    MatElt out = target->zero();
    for (std::size_t i1 = 0; i1 < n1; ++i1)
        for (std::size_t j1 = 0; j1 < n1; ++j1)
            for (std::size_t i2 = 0; i2 < n2; ++i2)
                for (std::size_t j2 = 0; j2 < n2; ++j2)
                    out.entry(i1 * n2 + i2, j1 * n2 + j2) =
                        A.ring().mul(a.entry(i1, j1), b.entry(i2, j2));
    return out;
}

/// @brief Kronecker product Mat_{n1}(R1) x Mat_{n2}(R2) -> Mat_{n1 n2}(R1 (x) R2)
/// with block index (i1*n2 + i2, j1*n2 + j2) and tensor-basis coefficient ring.
inline MatElt kronecker(const MatElt& a, const MatElt& b,
                        const std::shared_ptr<const MatAlgebra>& target) {
    const auto& A = *a.algebra_ptr();
    const auto& B = *b.algebra_ptr();
    const std::size_t n1 = A.n(), n2 = B.n();
    const std::size_t d1 = A.ring().dim(), d2 = B.ring().dim();
    if (!target || target->n() != n1 * n2 || target->ring().dim() != d1 * d2)
        throw std::invalid_argument(
            "kronecker: target algebra does not match the factor sizes");
    const FiniteField& F = A.field();
    MatElt out = target->zero();
    for (std::size_t i1 = 0; i1 < n1; ++i1)
        for (std::size_t j1 = 0; j1 < n1; ++j1) {
            const auto& ea = a.entry(i1, j1);
            for (std::size_t i2 = 0; i2 < n2; ++i2)
                for (std::size_t j2 = 0; j2 < n2; ++j2) {
                    const auto& eb = b.entry(i2, j2);
                    auto& dst = out.entry(i1 * n2 + i2, j1 * n2 + j2);
                    for (std::size_t ka = 0; ka < d1; ++ka) {
                        if (ea[ka] == 0) continue;
                        for (std::size_t kb = 0; kb < d2; ++kb) {
                            if (eb[kb] == 0) continue;
                            const std::size_t k = ka * d2 + kb;
                            dst[k] = F.add(dst[k], F.mul(ea[ka], eb[kb]));
                        }
                    }
                }
        }
    return out;
}

}  // namespace involutra::involalg
