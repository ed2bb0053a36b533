#pragma once

/// @file involution.hpp
/// @brief Involutions on matrix algebras (adjoints to bilinear forms, the
/// second-diagonal and canonical symplectic involutions, tensor products,
/// explicit linear actions), their symmetric/skew/alternating/symmetrized
/// submodules, form classification, and quadratic pairs.

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
#include "involutra/involalg/matalg.hpp"

namespace involutra::involalg {

using exactcore::Subspace;

enum class InvolutionKind {
    adjoint_to_form,
    second_diagonal,
    canonical_symplectic,
    tensor_product,
    explicit_linear,
};

inline std::string to_string(InvolutionKind k) {
    switch (k) {
        case InvolutionKind::adjoint_to_form: return "adjoint_to_form";
        case InvolutionKind::second_diagonal: return "second_diagonal";
        case InvolutionKind::canonical_symplectic: return "canonical_symplectic";
        case InvolutionKind::tensor_product: return "tensor_product";
        case InvolutionKind::explicit_linear: return "explicit_linear";
    }
    return "unknown";
}

/// @brief Entrywise transpose of a ring matrix (the coefficient ring is
/// untouched).
inline MatElt transpose_entries(const MatElt& a) {
    const auto alg = a.algebra_ptr();
    MatElt t = alg->zero();
    for (std::size_t i = 0; i < alg->n(); ++i)
        for (std::size_t j = 0; j < alg->n(); ++j) t.entry(i, j) = a.entry(j, i);
    return t;
}

/// @brief An involution on Mat_n(R), stored as its base-field linear action
/// on vectorized elements plus the construction recipe (kind and, when the
/// involution is adjoint to one, the n x n Gram matrix over the base field).
class Involution {
  public:
    /// @brief Adjoint involution a -> G^{-1} a^T G for an invertible Gram
    /// matrix with base-field entries.
    static Involution adjoint_to_form(std::shared_ptr<const MatAlgebra> alg,
                                      const Mat& gram,
                                      InvolutionKind kind = InvolutionKind::adjoint_to_form) {
        if (gram.rows() != alg->n() || gram.cols() != alg->n())
            throw std::invalid_argument("involution: Gram matrix has wrong size");
        if (gram.field() != alg->field())
            throw std::invalid_argument("involution: Gram matrix over wrong field");
        const MatElt g = embed_scalar_matrix(alg, gram);
        const auto ginv = alg->inverse(g);
        if (!ginv)
            throw std::invalid_argument("involution: Gram matrix is not invertible");
        Involution inv(std::move(alg), kind, gram);
        inv.action_ = inv.build_action([&](const MatElt& a) {
            return inv.alg_->mul(*ginv,
                                 inv.alg_->mul(transpose_entries(a), g));
        });
        inv.require_involutive();
        return inv;
    }

    /// @brief Transpose involution: adjoint to the identity form.
    static Involution transpose(std::shared_ptr<const MatAlgebra> alg) {
        const Mat id = Mat::identity(alg->field(), alg->n());
        return adjoint_to_form(std::move(alg), id);
    }

    /// @brief Adjoint to the second diagonal (anti-diagonal of ones); for
    /// n = 2 this swaps the diagonal, [[a,b],[c,d]] -> [[d,b],[c,a]].
    static Involution second_diagonal(std::shared_ptr<const MatAlgebra> alg) {
        Mat j(alg->field(), alg->n(), alg->n());
        for (std::size_t i = 0; i < alg->n(); ++i)
            j.at(i, alg->n() - 1 - i) = 1;
        return adjoint_to_form(std::move(alg), j, InvolutionKind::second_diagonal);
    }

    /// @brief The canonical symplectic involution q -> Trd(q) - q on Mat_2;
    /// equal to the adjoint of [[0,1],[-1,0]].
    static Involution canonical_symplectic(std::shared_ptr<const MatAlgebra> alg) {
        if (alg->n() != 2)
            throw std::invalid_argument(
                "involution: the canonical symplectic involution needs n = 2");
        const FiniteField& F = alg->field();
        Mat g(F, 2, 2);
        g.at(0, 1) = 1;
        g.at(1, 0) = F.neg(1);
        return adjoint_to_form(std::move(alg), g,
                               InvolutionKind::canonical_symplectic);
    }

    /// @brief Tensor product of two involutions with Gram matrices; acts on
    /// the Kronecker-product algebra and is adjoint to the Kronecker product
    /// of the factor forms.
    static Involution tensor_product(const Involution& s1, const Involution& s2,
                                     std::shared_ptr<const MatAlgebra> target) {
        if (!s1.gram_ || !s2.gram_)
            throw std::invalid_argument(
                "involution: tensor factors need Gram matrices");
        const FiniteField& F = s1.alg_->field();
        const std::size_t n1 = s1.alg_->n(), n2 = s2.alg_->n();
        if (target->n() != n1 * n2)
            throw std::invalid_argument("involution: tensor target has wrong size");
        Mat g(F, n1 * n2, n1 * n2);
        for (std::size_t i1 = 0; i1 < n1; ++i1)
            for (std::size_t j1 = 0; j1 < n1; ++j1)
                for (std::size_t i2 = 0; i2 < n2; ++i2)
                    for (std::size_t j2 = 0; j2 < n2; ++j2)
                        g.at(i1 * n2 + i2, j1 * n2 + j2) =
                            F.mul(s1.gram_->at(i1, j1), s2.gram_->at(i2, j2));
        return adjoint_to_form(std::move(target), g,
                               InvolutionKind::tensor_product);
    }

    /// @brief An involution given directly by its linear action; validated as
    /// a unital anti-automorphism of order two.
    static Involution explicit_linear(std::shared_ptr<const MatAlgebra> alg,
                                      Mat action) {
        if (action.rows() != alg->dim() || action.cols() != alg->dim())
            throw std::invalid_argument("involution: action matrix has wrong size");
        Involution inv(std::move(alg), InvolutionKind::explicit_linear,
                       std::nullopt);
        inv.action_ = std::move(action);
        inv.require_involutive();
        if (inv.apply(inv.alg_->identity()) != inv.alg_->identity())
            throw std::invalid_argument("involution: the unit is not fixed");
        const std::size_t d = inv.alg_->dim();
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                std::vector<exactcore::Fel> ea(d, 0), eb(d, 0);
                ea[a] = 1;
                eb[b] = 1;
                const MatElt xa = inv.alg_->unvec(ea), xb = inv.alg_->unvec(eb);
                const MatElt lhs = inv.apply(inv.alg_->mul(xa, xb));
                const MatElt rhs = inv.alg_->mul(inv.apply(xb), inv.apply(xa));
                if (lhs != rhs)
                    throw std::invalid_argument(
                        "involution: the action is not an anti-automorphism "
                        "(fails at basis pair (" +
                        std::to_string(a) + ", " + std::to_string(b) + "))");
            }
        return inv;
    }

    const std::shared_ptr<const MatAlgebra>& algebra_ptr() const { return alg_; }
    const MatAlgebra& algebra() const { return *alg_; }
    InvolutionKind kind() const { return kind_; }
    const std::optional<Mat>& gram() const { return gram_; }
    const Mat& action() const { return action_; }

    MatElt apply(const MatElt& a) const {
        return alg_->unvec(action_.apply(alg_->vec(a)));
    }

    /// @brief Rebuild this involution on Mat_n over a larger coefficient
    /// ring.  Only recipe-backed kinds extend; an explicit linear action does
    /// not determine an extension.
    Involution extend_to(std::shared_ptr<const MatAlgebra> target) const {
        if (target->n() != alg_->n())
            throw std::invalid_argument("involution: extension must keep n");
        if (target->field() != alg_->field())
            throw std::invalid_argument("involution: extension must keep the base field");
        if (kind_ == InvolutionKind::explicit_linear || !gram_)
            throw std::domain_error(
                "unsupported: an explicit linear involution does not determine "
                "an extension to a larger coefficient ring");
        return adjoint_to_form(std::move(target), *gram_, kind_);
    }

  private:
    Involution(std::shared_ptr<const MatAlgebra> alg, InvolutionKind kind,
               std::optional<Mat> gram)
        : alg_(std::move(alg)),
          kind_(kind),
          gram_(std::move(gram)),
          action_(alg_->field(), 0, 0) {}

    template <typename Fn>
    Mat build_action(Fn&& fn) const {
        const std::size_t d = alg_->dim();
        Mat m(alg_->field(), d, d);
        for (std::size_t col = 0; col < d; ++col) {
            std::vector<exactcore::Fel> e(d, 0);
            e[col] = 1;
            const auto v = alg_->vec(fn(alg_->unvec(e)));
            for (std::size_t row = 0; row < d; ++row) m.at(row, col) = v[row];
        }
        return m;
    }

    void require_involutive() const {
        if (action_ * action_ != Mat::identity(alg_->field(), alg_->dim()))
            throw std::invalid_argument("involution: the action does not square "
                                        "to the identity");
    }

    std::shared_ptr<const MatAlgebra> alg_;
    InvolutionKind kind_;
    std::optional<Mat> gram_;
    Mat action_;
};

/// @brief Flags of the underlying bilinear form, following the usual
/// conventions: in characteristic 2 a form can be simultaneously symmetric,
/// weakly symplectic, and alternating.
struct FormClassification {
    bool symmetric = false;           ///< G = G^T
    bool weakly_symplectic = false;   ///< G = -G^T
    bool alternating = false;         ///< G = -G^T with zero diagonal
    bool orthogonal = false;          ///< symmetric and not alternating
    bool symplectic = false;          ///< alternating
    bool overlap = false;             ///< symmetric and alternating at once
};

/// @throws std::domain_error when the involution carries no Gram matrix.
inline FormClassification classify_involution(const Involution& inv) {
    if (!inv.gram())
        throw std::domain_error(
            "classification requires an involution adjoint to a bilinear form");
    const Mat& g = *inv.gram();
    const FiniteField& F = g.field();
    FormClassification c;
    c.symmetric = (g == g.transpose());
    bool skew = true, zero_diag = true;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g.at(i, i) != 0) zero_diag = false;
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g.at(i, j) != F.neg(g.at(j, i))) skew = false;
    }
    c.weakly_symplectic = skew;
    c.alternating = skew && zero_diag;
    c.orthogonal = c.symmetric && !c.alternating;
    c.symplectic = c.alternating;
    c.overlap = c.symmetric && c.alternating;
    return c;
}

/// @brief The four canonical submodules cut out by an involution, as
/// subspaces of the vectorized algebra.
struct InvolutionSubmodules {
    Subspace sym;   ///< Ker(Id - sigma)
    Subspace skew;  ///< Ker(Id + sigma)
    Subspace alt;   ///< Im(Id - sigma)
    Subspace symd;  ///< Im(Id + sigma)
    bool unit_in_symd = false;  ///< the algebra is locally quadratic
};

inline InvolutionSubmodules submodules(const Involution& inv) {
    const MatAlgebra& A = inv.algebra();
    const Mat id = Mat::identity(A.field(), A.dim());
    const Mat minus = id - inv.action();
    const Mat plus = id + inv.action();
    InvolutionSubmodules s{Subspace::from_span(exactcore::kernel_basis(minus)),
                           Subspace::from_span(exactcore::kernel_basis(plus)),
                           Subspace::from_span(exactcore::image_basis(minus)),
                           Subspace::from_span(exactcore::image_basis(plus)),
                           false};
    s.unit_in_symd = s.symd.contains(A.vec(A.identity()));
    return s;
}

/// @brief A quadratic pair (sigma, f) presented by a splitting element ell
/// with ell + sigma(ell) = 1; the semi-trace is f(s) = Trd(ell * s) on the
/// symmetric submodule.
class QuadraticPair {
  public:
    QuadraticPair(Involution sigma, MatElt ell)
        : sigma_(std::move(sigma)), ell_(std::move(ell)) {
        const MatAlgebra& A = sigma_.algebra();
        const MatElt s = A.add(ell_, sigma_.apply(ell_));
        if (s != A.identity())
            throw std::invalid_argument(
                "quadratic pair: ell + sigma(ell) must equal 1");
        // Defining identity f(a + sigma(a)) = Trd(a), checked on a full basis.
        for (std::size_t b = 0; b < A.dim(); ++b) {
            std::vector<exactcore::Fel> e(A.dim(), 0);
            e[b] = 1;
            const MatElt a = A.unvec(e);
            const MatElt sym = A.add(a, sigma_.apply(a));
            if (A.trd(A.mul(ell_, sym)) != A.trd(a))
                throw std::invalid_argument(
                    "quadratic pair: the semi-trace axiom fails at basis vector " +
                    std::to_string(b));
        }
    }

    const Involution& sigma() const { return sigma_; }
    const MatElt& ell() const { return ell_; }

    /// Semi-trace value on a symmetrized element.
    std::vector<exactcore::Fel> f(const MatElt& s) const {
        const MatAlgebra& A = sigma_.algebra();
        return A.trd(A.mul(ell_, s));
    }

  private:
    Involution sigma_;
    MatElt ell_;
};

/// @brief The split quadratic triple on Mat_n (n even): second-diagonal
/// involution together with ell = sum of the first n/2 diagonal idempotents.
inline QuadraticPair split_quadratic_triple(
    const std::shared_ptr<const MatAlgebra>& alg) {
    if (alg->n() % 2 != 0)
        throw std::invalid_argument("split quadratic triple: n must be even");
    Involution sigma = Involution::second_diagonal(alg);
    MatElt ell = alg->zero();
    for (std::size_t i = 0; i < alg->n() / 2; ++i)
        ell.entry(i, i) = alg->ring().unit();
    return QuadraticPair(std::move(sigma), std::move(ell));
}

}  // namespace involutra::involalg
