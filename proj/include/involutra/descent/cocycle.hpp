#pragma once

/// @file cocycle.hpp
/// @brief Projective descent cocycles: an invertible matrix over the covering
/// ring, optionally equipped with a compatible involution on the base, and
/// the cocycle-condition check along one of three routes (materialized triple
/// overlap, finite group table, or factorwise on product covers).

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "involutra/descent/cover.hpp"
#include "involutra/exactcore/algebra.hpp"
#include "involutra/exactcore/linalg.hpp"
#include "involutra/involalg/involution.hpp"
#include "involutra/involalg/matalg.hpp"

namespace involutra::descent {

using involalg::Involution;
using involalg::MatAlgebra;
using involalg::MatElt;

/// @brief Outcome of the cocycle-condition check.  On the overlap route the
/// scaling factor lambda is an element of the overlap ring; on the group
/// route it is one base-field unit per group pair; on product covers the
/// factor results are collected.
struct CocycleCheckResult {
    enum class Verdict { holds, fails, no_triple_data };

    Verdict verdict = Verdict::no_triple_data;
    std::string route;  ///< "triple_overlap", "group_table", or "factorwise"
    std::optional<std::size_t> failing_component;
    std::optional<std::vector<Fel>> lambda;  ///< overlap route: overlap-ring vector
    std::vector<Fel> lambda_scalars;         ///< group route: scalar per pair (a,b)
    std::vector<CocycleCheckResult> factors; ///< factorwise route

    bool holds() const { return verdict == Verdict::holds; }
};

inline std::string to_string(CocycleCheckResult::Verdict v) {
    switch (v) {
        case CocycleCheckResult::Verdict::holds: return "holds";
        case CocycleCheckResult::Verdict::fails: return "fails";
        case CocycleCheckResult::Verdict::no_triple_data: return "no triple-overlap data";
    }
    return "unknown";
}

/// @brief A descent cocycle: an invertible u in Mat_n(T) for a cover
/// (S -> T), stored projectively (all conditions are read modulo the center).
/// An involution on Mat_n(S) may be attached when sigma(u) * u is a central
/// unit; tensor cocycles remember their factors so product covers can be
/// checked factorwise.
class Cocycle {
  public:
    /// @brief Wrap an explicit matrix; invertibility is verified per
    /// component of the covering ring and failures name the component.
    static Cocycle make(std::shared_ptr<const Cover> cover, std::size_t n,
                        const std::vector<std::vector<std::vector<Fel>>>& entries) {
        if (!cover) throw std::invalid_argument("cocycle: null cover");
        auto alg = MatAlgebra::make(cover->cover_ptr(), n);
        if (entries.size() != n)
            throw std::invalid_argument("cocycle: entry grid has wrong size");
        MatElt u = alg->zero();
        for (std::size_t i = 0; i < n; ++i) {
            if (entries[i].size() != n)
                throw std::invalid_argument("cocycle: entry grid has wrong size");
            for (std::size_t j = 0; j < n; ++j) {
                if (entries[i][j].size() != cover->cover().dim())
                    throw std::invalid_argument(
                        "cocycle: entry has wrong coefficient dimension");
                u.entry(i, j) = entries[i][j];
            }
        }
        return Cocycle(std::move(cover), std::move(alg), std::move(u));
    }

    /// @brief The tautological cocycle of a constant-group cover: the
    /// function g -> rep_g, an element of Mat_2(k^G).
    static Cocycle tautological(std::shared_ptr<const Cover> cover) {
        if (!cover || !cover->has_group())
            throw std::invalid_argument(
                "cocycle: the tautological cocycle needs a constant-group cover");
        const GroupData& g = cover->group();
        const std::size_t n = g.reps.empty() ? 0 : g.reps[0].rows();
        auto alg = MatAlgebra::make(cover->cover_ptr(), n);
        MatElt u = alg->zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < g.reps.size(); ++k)
                    u.entry(i, j)[k] = g.reps[k].at(i, j);
        return Cocycle(std::move(cover), std::move(alg), std::move(u));
    }

    /// @brief The identity cocycle in Mat_n(T).
    static Cocycle trivial(std::shared_ptr<const Cover> cover, std::size_t n) {
        if (!cover) throw std::invalid_argument("cocycle: null cover");
        auto alg = MatAlgebra::make(cover->cover_ptr(), n);
        MatElt u = alg->identity();
        return Cocycle(std::move(cover), std::move(alg), std::move(u));
    }

    /// @brief Tensor of two cocycles.  On the same cover the result is the
    /// same-ring Kronecker product; on different covers the product cover is
    /// built and the factors are retained for factorwise checking.
    static Cocycle tensor(const Cocycle& a, const Cocycle& b) {
        if (*a.cover_->cover_ptr() == *b.cover_->cover_ptr() &&
            a.cover_->kind() == b.cover_->kind()) {
            auto alg = MatAlgebra::make(a.cover_->cover_ptr(), a.n() * b.n());
            MatElt u = involalg::kronecker_same_ring(a.u_, b.u_, alg);
            return Cocycle(a.cover_, std::move(alg), std::move(u));
        }
        auto cover = Cover::product(a.cover_, b.cover_);
        auto alg = MatAlgebra::make(cover->cover_ptr(), a.n() * b.n());
        MatElt u = involalg::kronecker(a.u_, b.u_, alg);
        Cocycle c(std::move(cover), std::move(alg), std::move(u));
        c.factor1_ = std::make_shared<Cocycle>(a);
        c.factor2_ = std::make_shared<Cocycle>(b);
        return c;
    }

    const std::shared_ptr<const Cover>& cover_ptr() const { return cover_; }
    const Cover& cover() const { return *cover_; }
    const std::shared_ptr<const MatAlgebra>& algebra_ptr() const { return alg_; }
    const MatAlgebra& algebra() const { return *alg_; }
    const MatElt& u() const { return u_; }
    std::size_t n() const { return alg_->n(); }

    const MatElt& u_inverse() const {
        if (!u_inv_) {
            auto inv = alg_->inverse(u_);
            if (!inv) throw std::logic_error("cocycle: inverse lost");  // unreachable
            u_inv_ = std::make_shared<MatElt>(std::move(*inv));
        }
        return *u_inv_;
    }

    bool has_involution() const { return sigma_S_.has_value(); }
    const Involution& sigma_S() const { return require_sigma(sigma_S_); }
    const Involution& sigma_T() const { return require_sigma(sigma_T_); }

    bool has_factors() const { return factor1_ && factor2_; }
    const Cocycle& factor1() const { return *factor1_; }
    const Cocycle& factor2() const { return *factor2_; }

    /// @brief Attach an involution living on Mat_n over the base ring.  The
    /// extension to the covering ring must satisfy the projective
    /// compatibility: sigma(u) * u is a central unit.
    Cocycle with_involution(const Involution& sigma_on_base) const {
        if (sigma_on_base.algebra().n() != n() ||
            sigma_on_base.algebra().ring() != cover_->base())
            throw std::invalid_argument(
                "cocycle: the involution must live on Mat_n over the base ring");
        Involution ext = sigma_on_base.extend_to(alg_);
        const MatElt prod = alg_->mul(ext.apply(u_), u_);
        const auto central = alg_->central_scalar(prod);
        if (!central || !cover_->cover().is_unit_element(*central))
            throw std::invalid_argument(
                "cocycle: incompatible involution: sigma(u) * u is not a "
                "central unit");
        Cocycle c = *this;
        c.sigma_S_ = sigma_on_base;
        c.sigma_T_ = std::move(ext);
        return c;
    }

  private:
    Cocycle(std::shared_ptr<const Cover> cover, std::shared_ptr<const MatAlgebra> alg,
            MatElt u)
        : cover_(std::move(cover)), alg_(std::move(alg)), u_(std::move(u)) {
        verify_invertible();
    }

    static const Involution& require_sigma(const std::optional<Involution>& s) {
        if (!s) throw std::domain_error("cocycle: no involution attached");
        return *s;
    }

    void verify_invertible() {
        auto inv = alg_->inverse(u_);
        if (inv) {
            u_inv_ = std::make_shared<MatElt>(std::move(*inv));
            return;
        }
        // Name the first component of T on which u fails to be invertible.
        const CommAlgebra& T = cover_->cover();
        for (std::size_t c = 0; c < T.components().size(); ++c) {
            MatElt uc = alg_->zero();
            MatElt idc = alg_->zero();
            for (std::size_t i = 0; i < n(); ++i)
                for (std::size_t j = 0; j < n(); ++j) {
                    uc.entry(i, j) = T.restrict_to_component(u_.entry(i, j), c);
                    idc.entry(i, j) =
                        T.restrict_to_component(alg_->identity().entry(i, j), c);
                }
            // uc is invertible inside its block iff uc * x = idc is solvable.
            const auto sol =
                exactcore::linear_solve(alg_->left_mult_matrix(uc), alg_->vec(idc));
            if (!sol)
                throw std::invalid_argument(
                    "cocycle: the matrix is not invertible on component " +
                    std::to_string(c) + " of the covering ring");
        }
        throw std::invalid_argument("cocycle: the matrix is not invertible");
    }

    std::shared_ptr<const Cover> cover_;
    std::shared_ptr<const MatAlgebra> alg_;
    MatElt u_;
    mutable std::shared_ptr<MatElt> u_inv_;
    std::optional<Involution> sigma_S_, sigma_T_;
    std::shared_ptr<const Cocycle> factor1_, factor2_;
};

/// @brief Verify the projective cocycle condition
/// p23(u) * p12(u) = lambda * p13(u).  Uses the materialized overlap when the
/// cover has one, falls back to the group table for constant-group covers,
/// recurses through the factors on product covers, and otherwise reports that
/// no triple-overlap data is available.
inline CocycleCheckResult check_cocycle_condition(const Cocycle& c) {
    const Cover& cov = c.cover();
    CocycleCheckResult out;

    if (cov.has_overlap()) {
        out.route = "triple_overlap";
        const auto W = cov.overlap_ptr();
        auto algW = MatAlgebra::make(W, c.n());
        const MatElt u12 = c.algebra().map_entries(c.u(), cov.p12(), algW);
        const MatElt u13 = c.algebra().map_entries(c.u(), cov.p13(), algW);
        const MatElt u23 = c.algebra().map_entries(c.u(), cov.p23(), algW);
        const auto u13inv = algW->inverse(u13);
        if (!u13inv) throw std::logic_error("cocycle check: p13(u) not invertible");
        const MatElt q = algW->mul(algW->mul(u23, u12), *u13inv);
        const auto lambda = algW->central_scalar(q);
        if (lambda) {
            out.verdict = CocycleCheckResult::Verdict::holds;
            out.lambda = *lambda;
            return out;
        }
        // Name the first overlap component where q is not scalar.
        for (std::size_t comp = 0; comp < W->components().size(); ++comp) {
            bool scalar_here = true;
            std::vector<Fel> diag0;
            for (std::size_t i = 0; i < c.n() && scalar_here; ++i)
                for (std::size_t j = 0; j < c.n() && scalar_here; ++j) {
                    const auto r = W->restrict_to_component(q.entry(i, j), comp);
                    if (i == j) {
                        if (diag0.empty())
                            diag0 = r;
                        else if (r != diag0)
                            scalar_here = false;
                    } else {
                        for (const Fel x : r)
                            if (x != 0) scalar_here = false;
                    }
                }
            if (!scalar_here) {
                out.verdict = CocycleCheckResult::Verdict::fails;
                out.failing_component = comp;
                return out;
            }
        }
        out.verdict = CocycleCheckResult::Verdict::fails;
        return out;
    }

    if (cov.has_group()) {
        out.route = "group_table";
        const GroupData& g = cov.group();
        const std::size_t m = g.reps.size();
        const FiniteField& F = cov.field();
        // Slice u into per-class matrices u_g over the base field.
        std::vector<Mat> slices(m, Mat(F, c.n(), c.n()));
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < c.n(); ++i)
                for (std::size_t j = 0; j < c.n(); ++j)
                    slices[k].at(i, j) = c.u().entry(i, j)[k];
        out.lambda_scalars.assign(m * m, 0);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                // Condition at the pair (g, h) = (a, b): u_h u_g = lambda u_{hg}.
                const Mat lhs = slices[b] * slices[a];
                const Mat& rhs = slices[g.mul[b][a]];
                Fel lam = 0;
                for (std::size_t i = 0; i < c.n() && lam == 0; ++i)
                    for (std::size_t j = 0; j < c.n() && lam == 0; ++j)
                        if (rhs.at(i, j) != 0)
                            lam = F.mul(lhs.at(i, j), F.inv(rhs.at(i, j)));
                if (lam == 0 || lhs != rhs.scaled(lam)) {
                    out.verdict = CocycleCheckResult::Verdict::fails;
                    out.failing_component = a * m + b;
                    return out;
                }
                out.lambda_scalars[a * m + b] = lam;
            }
        out.verdict = CocycleCheckResult::Verdict::holds;
        return out;
    }

    if (cov.is_product() && c.has_factors()) {
        out.route = "factorwise";
        out.factors.push_back(check_cocycle_condition(c.factor1()));
        out.factors.push_back(check_cocycle_condition(c.factor2()));
        const bool ok = out.factors[0].holds() && out.factors[1].holds();
        out.verdict = ok ? CocycleCheckResult::Verdict::holds
                         : CocycleCheckResult::Verdict::fails;
        if (!ok)
            out.failing_component = out.factors[0].holds() ? 1 : 0;
        return out;
    }

    out.verdict = CocycleCheckResult::Verdict::no_triple_data;
    out.route = "none";
    return out;
}

}  // namespace involutra::descent
