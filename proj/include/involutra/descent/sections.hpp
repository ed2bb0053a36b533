#pragma once

/// @file sections.hpp
/// @brief Twisted sections of a descent cocycle: the base-ring matrices B
/// with u r1(B) u^{-1} = r2(B), their quotient variants where the defect is
/// only required to land in a conjugation-stable translated subspace, and
/// exhaustive idempotent searches inside section spaces.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "involutra/descent/cocycle.hpp"
#include "involutra/descent/cover.hpp"
#include "involutra/exactcore/linalg.hpp"
#include "involutra/involalg/matalg.hpp"

namespace involutra::descent {

using exactcore::QuotientSpace;
using exactcore::Subspace;

/// Default bound on the dimension of a space scanned exhaustively for
/// idempotents; override with the INVOLUTRA_IDEMPOTENT_CAP environment
/// variable.
inline constexpr std::size_t kDefaultIdempotentCap = 20;

inline std::size_t idempotent_cap() {
    if (const char* env = std::getenv("INVOLUTRA_IDEMPOTENT_CAP")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultIdempotentCap;
}

/// Matrix algebra Mat_n over the base ring of the cocycle's cover.
inline std::shared_ptr<const involalg::MatAlgebra> base_algebra(const Cocycle& c) {
    return involalg::MatAlgebra::make(c.cover().base_ptr(), c.n());
}

/// @brief k-linear defect map B -> u r1(B) - r2(B) u from vectorized
/// Mat_n(S) to vectorized Mat_n(T); twisted sections are its kernel.
inline Mat defect_matrix(const Cocycle& c) {
    const auto baseAlg = base_algebra(c);
    const auto& alg = c.algebra();
    const std::size_t dS = baseAlg->dim();
    const std::size_t dT = alg.dim();
    Mat D(c.cover().field(), dT, dS);
    for (std::size_t col = 0; col < dS; ++col) {
        std::vector<Fel> e(dS, 0);
        e[col] = 1;
        const MatElt B = baseAlg->unvec(e);
        const MatElt b1 = baseAlg->map_entries(B, c.cover().r1(), c.algebra_ptr());
        const MatElt b2 = baseAlg->map_entries(B, c.cover().r2(), c.algebra_ptr());
        const MatElt d = alg.sub(alg.mul(c.u(), b1), alg.mul(b2, c.u()));
        const auto v = alg.vec(d);
        for (std::size_t row = 0; row < dT; ++row) D.at(row, col) = v[row];
    }
    return D;
}

/// @brief The algebra of twisted sections, as a subspace of vectorized
/// Mat_n(S) with canonical RREF basis.
inline Subspace twisted_sections(const Cocycle& c) {
    return Subspace::from_span(exactcore::kernel_basis(defect_matrix(c)));
}

/// @brief Right translate R_u(V) = { z u : z in V } of a subspace of
/// vectorized Mat_n(T).
inline Subspace right_translate(const Cocycle& c, const Subspace& v) {
    const auto& alg = c.algebra();
    if (v.ambient() != alg.dim())
        throw std::invalid_argument("right translate: ambient dimension mismatch");
    std::vector<std::vector<Fel>> rows;
    for (std::size_t i = 0; i < v.basis().rows(); ++i) {
        const MatElt z = alg.unvec(v.basis().row(i));
        rows.push_back(alg.vec(alg.mul(z, c.u())));
    }
    return Subspace::from_span(Mat::from_rows(alg.field(), rows, alg.dim()));
}

/// @brief Whether V is stable under the inner twist z -> u z u^{-1}.
inline bool conjugation_stable(const Cocycle& c, const Subspace& v) {
    const auto& alg = c.algebra();
    if (v.ambient() != alg.dim())
        throw std::invalid_argument("conjugation stability: ambient dimension mismatch");
    for (std::size_t i = 0; i < v.basis().rows(); ++i) {
        const MatElt z = alg.unvec(v.basis().row(i));
        const MatElt w = alg.mul(alg.mul(c.u(), z), c.u_inverse());
        if (!v.contains(alg.vec(w))) return false;
    }
    return true;
}

/// @brief Sections modulo a twisted subspace: all B in Mat_n(S) whose defect
/// u r1(B) - r2(B) u lies in the right translate R_u(V_T), presented modulo
/// V_S.  V_T must be stable under conjugation by u, else the condition would
/// depend on the side of translation.
struct QuotientSections {
    Subspace solutions;      ///< all admissible B, inside vectorized Mat_n(S)
    QuotientSpace classes;   ///< solutions modulo V_S, with canonical reps
};

inline QuotientSections twisted_quotient_sections(const Cocycle& c,
                                                  const Subspace& v_t,
                                                  const Subspace& v_s) {
    const auto& alg = c.algebra();
    if (!conjugation_stable(c, v_t))
        throw std::domain_error(
            "quotient sections: the subspace of the covering algebra is not "
            "stable under conjugation by the cocycle");
    const Subspace target = right_translate(c, v_t);
    // Compose the defect with reduction modulo the translated subspace; for
    // an RREF basis the reduction is one linear pass, v - sum v[p_r] row_r.
    const Mat D = defect_matrix(c);
    const FiniteField& F = D.field();
    const exactcore::RrefResult red = exactcore::rref(target.basis());
    // P e_j = e_j - sum_r [j = pivot_r] row_r zeroes the translated subspace.
    Mat P = Mat::identity(F, D.rows());
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
        const std::size_t p = red.pivots[r];
        for (std::size_t i = 0; i < D.rows(); ++i)
            P.at(i, p) = F.sub(P.at(i, p), red.mat.at(r, i));
    }
    const Subspace solutions = Subspace::from_span(exactcore::kernel_basis(P * D));
    QuotientSections out{solutions, exactcore::quotient(solutions, v_s)};
    return out;
}

/// @brief Result of an exhaustive idempotent scan: the vectorized idempotent
/// elements in ascending lexicographic order (always including 0 and, when
/// present in the space, the identity).
struct IdempotentScan {
    std::vector<std::vector<Fel>> idempotents;
    std::string method = "exhaustive over GF(q) points";
};

/// @brief Enumerate every point of the section space and keep the B with
/// B^2 = B.  Refuses spaces whose dimension exceeds the cap.
inline IdempotentScan find_idempotents(
    const std::shared_ptr<const involalg::MatAlgebra>& alg, const Subspace& space) {
    if (space.ambient() != alg->dim())
        throw std::invalid_argument("idempotent search: ambient dimension mismatch");
    const std::size_t cap = idempotent_cap();
    if (space.dim() > cap)
        throw std::domain_error(
            "idempotent search: refusing an exhaustive scan over a space of "
            "dimension " +
            std::to_string(space.dim()) + "; the cap is " + std::to_string(cap) +
            " (set INVOLUTRA_IDEMPOTENT_CAP to raise it)");
    IdempotentScan out;
    exactcore::for_each_in_span(space.basis(), [&](const std::vector<Fel>& v) {
        const MatElt b = alg->unvec(v);
        if (alg->mul(b, b) == b) out.idempotents.push_back(v);
    });
    std::sort(out.idempotents.begin(), out.idempotents.end());
    return out;
}

/// @brief Rank of a section as a plain matrix; requires a one-dimensional
/// coefficient ring (the base ring of every bundled cover).
inline std::size_t section_rank(const involalg::MatAlgebra& alg, const MatElt& b) {
    if (alg.ring().dim() != 1)
        throw std::domain_error(
            "section rank: undetermined over a coefficient ring of dimension > 1");
    Mat m(alg.field(), alg.n(), alg.n());
    for (std::size_t i = 0; i < alg.n(); ++i)
        for (std::size_t j = 0; j < alg.n(); ++j) m.at(i, j) = b.entry(i, j)[0];
    return exactcore::rank(m);
}

}  // namespace involutra::descent
