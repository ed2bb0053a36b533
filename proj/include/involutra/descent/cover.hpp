#pragma once

/// @file cover.hpp
/// @brief Descent covers: the base ring, the covering ring with its two
/// structural maps, and optional triple-overlap data (either a materialized
/// overlap ring with its three projections, or a finite group table for
/// constant-group covers).  Built-in covers: the mu2xZ2 Hopf cover, constant
/// PGL2 covers, the trivial cover, and binary products.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "involutra/exactcore/algebra.hpp"
#include "involutra/exactcore/field.hpp"
#include "involutra/exactcore/linalg.hpp"

namespace involutra::descent {

using exactcore::AlgebraHom;
using exactcore::CommAlgebra;
using exactcore::Fel;
using exactcore::FiniteField;
using exactcore::Mat;

enum class CoverKind { mu2z2, constant_group, trivial, product };

inline std::string to_string(CoverKind k) {
    switch (k) {
        case CoverKind::mu2z2: return "mu2z2";
        case CoverKind::constant_group: return "constant_group";
        case CoverKind::trivial: return "trivial";
        case CoverKind::product: return "product";
    }
    return "unknown";
}

/// @brief Finite group presented by canonical representative matrices: the
/// class of a product is looked up in `mul`, and `scalar` records the unit
/// relating the raw product to its canonical representative.
struct GroupData {
    std::vector<Mat> reps;
    std::vector<std::vector<std::uint16_t>> mul;  ///< mul[a][b] = class(rep_a * rep_b)
    std::vector<std::vector<Fel>> scalar;  ///< rep_a * rep_b = scalar[a][b] * rep_mul
};

/// @brief A two-term descent cover S -> T with structural maps r1, r2 and,
/// when tractable, the triple overlap W with its three projections
/// p12, p13, p23 : T -> W.  The overlap ring is materialized only when its
/// dimension fits under the algebra cap; constant-group covers additionally
/// carry their group table, and product covers remember their factors.
class Cover {
  public:
    CoverKind kind() const { return kind_; }
    const FiniteField& field() const { return T_->field(); }
    const std::shared_ptr<const CommAlgebra>& base_ptr() const { return S_; }
    const std::shared_ptr<const CommAlgebra>& cover_ptr() const { return T_; }
    const CommAlgebra& base() const { return *S_; }
    const CommAlgebra& cover() const { return *T_; }
    const AlgebraHom& r1() const { return *r1_; }
    const AlgebraHom& r2() const { return *r2_; }

    bool has_overlap() const { return static_cast<bool>(W_); }
    const std::shared_ptr<const CommAlgebra>& overlap_ptr() const { return W_; }
    const AlgebraHom& p12() const { return require_overlap(p12_); }
    const AlgebraHom& p13() const { return require_overlap(p13_); }
    const AlgebraHom& p23() const { return require_overlap(p23_); }

    bool has_group() const { return group_.has_value(); }
    const GroupData& group() const {
        if (!group_)
            throw std::domain_error("cover: no group table on this cover");
        return *group_;
    }

    bool is_product() const { return kind_ == CoverKind::product; }
    const std::shared_ptr<const Cover>& factor1() const { return factor1_; }
    const std::shared_ptr<const Cover>& factor2() const { return factor2_; }

    /// @brief The trivial cover T = S = k.
    static std::shared_ptr<const Cover> trivial(const FiniteField& F) {
        auto c = std::make_shared<Cover>(Private{});
        c->kind_ = CoverKind::trivial;
        c->S_ = std::make_shared<const CommAlgebra>(CommAlgebra::trivial(F));
        c->T_ = c->S_;
        c->r1_ = std::make_shared<AlgebraHom>(unit_embedding(c->S_, c->T_));
        c->r2_ = c->r1_;
        c->W_ = c->T_;
        auto id = std::make_shared<AlgebraHom>(AlgebraHom::identity(c->T_));
        c->p12_ = id;
        c->p13_ = id;
        c->p23_ = id;
        return c;
    }

    /// @brief The mu2 x Z/2 cover: T = (k[x]/(x^2+1))^2 with components
    /// ordered (trivial, nontrivial), overlap W = T (x) T, outer projections
    /// t -> t(x)1 and t -> 1(x)t, and middle projection the comultiplication
    ///   e_i x^j -> sum over a+b = i (mod 2) of (e_a x^j)(x)(e_b x^j).
    static std::shared_ptr<const Cover> mu2z2(const FiniteField& F) {
        auto c = std::make_shared<Cover>(Private{});
        c->kind_ = CoverKind::mu2z2;
        const std::vector<Fel> x2p1 = {1, 0, 1};  // x^2 + 1
        const CommAlgebra line = CommAlgebra::quotient_poly(F, x2p1);
        c->S_ = std::make_shared<const CommAlgebra>(CommAlgebra::trivial(F));
        c->T_ = std::make_shared<const CommAlgebra>(CommAlgebra::product(line, line));
        c->r1_ = std::make_shared<AlgebraHom>(unit_embedding(c->S_, c->T_));
        c->r2_ = c->r1_;
        c->W_ = std::make_shared<const CommAlgebra>(CommAlgebra::tensor(*c->T_, *c->T_));
        const std::size_t dT = c->T_->dim();  // 4: basis e_i x^j at index 2i + j
        std::vector<std::vector<Fel>> left(dT), right(dT), mid(dT);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const std::size_t t = 2 * i + j;
                std::vector<Fel> l(dT * dT, 0), r(dT * dT, 0), m(dT * dT, 0);
                // t (x) 1 = sum over components a of (e_i x^j)(x)(e_a 1).
                for (std::size_t a = 0; a < 2; ++a) {
                    l[t * dT + (2 * a + 0)] = 1;
                    r[(2 * a + 0) * dT + t] = 1;
                }
                for (std::size_t a = 0; a < 2; ++a) {
                    const std::size_t b = (i + a) % 2;  // a + b = i (mod 2)
                    m[(2 * a + j) * dT + (2 * b + j)] = 1;
                }
                left[t] = std::move(l);
                right[t] = std::move(r);
                mid[t] = std::move(m);
            }
        c->p12_ = std::make_shared<AlgebraHom>(c->T_, c->W_, std::move(left));
        c->p23_ = std::make_shared<AlgebraHom>(c->T_, c->W_, std::move(right));
        c->p13_ = std::make_shared<AlgebraHom>(c->T_, c->W_, std::move(mid));
        return c;
    }

    /// @brief Constant-group cover for PGL2 over the base field: T = k^G for
    /// the canonical projective representatives, with the overlap either
    /// materialized as k^(G x G) (small groups) or replaced by the group
    /// table.  Projections on functions: p12 f (g,h) = f(g),
    /// p23 f (g,h) = f(h), p13 f (g,h) = f(hg).
    static std::shared_ptr<const Cover> constant_group_pgl2(const FiniteField& F) {
        auto c = std::make_shared<Cover>(Private{});
        c->kind_ = CoverKind::constant_group;
        c->group_ = build_pgl2(F);
        const std::size_t m = c->group_->reps.size();
        c->S_ = std::make_shared<const CommAlgebra>(CommAlgebra::trivial(F));
        c->T_ = std::make_shared<const CommAlgebra>(CommAlgebra::split(F, m, "g"));
        c->r1_ = std::make_shared<AlgebraHom>(unit_embedding(c->S_, c->T_));
        c->r2_ = c->r1_;
        if (m * m <= exactcore::kMaxAlgebraDim) {
            c->W_ = std::make_shared<const CommAlgebra>(
                CommAlgebra::split(F, m * m, "w"));
            std::vector<std::vector<Fel>> left(m), right(m), mid(m);
            for (std::size_t k = 0; k < m; ++k) {
                std::vector<Fel> l(m * m, 0), r(m * m, 0), d(m * m, 0);
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < m; ++b) {
                        const std::size_t pair = a * m + b;
                        if (a == k) l[pair] = 1;
                        if (b == k) r[pair] = 1;
                        if (c->group_->mul[b][a] == k) d[pair] = 1;  // f(hg)
                    }
                left[k] = std::move(l);
                right[k] = std::move(r);
                mid[k] = std::move(d);
            }
            c->p12_ = std::make_shared<AlgebraHom>(c->T_, c->W_, std::move(left));
            c->p23_ = std::make_shared<AlgebraHom>(c->T_, c->W_, std::move(right));
            c->p13_ = std::make_shared<AlgebraHom>(c->T_, c->W_, std::move(mid));
        }
        return c;
    }

    /// @brief Product of two covers over the same field: the covering ring is
    /// the tensor product; the overlap is not materialized (checks route
    /// through the factors), so the factors are retained.
    static std::shared_ptr<const Cover> product(std::shared_ptr<const Cover> a,
                                                std::shared_ptr<const Cover> b) {
        if (!a || !b) throw std::invalid_argument("cover product: null factor");
        if (a->field() != b->field())
            throw std::invalid_argument("cover product: factors over different fields");
        auto c = std::make_shared<Cover>(Private{});
        c->kind_ = CoverKind::product;
        c->S_ = std::make_shared<const CommAlgebra>(CommAlgebra::trivial(a->field()));
        c->T_ = std::make_shared<const CommAlgebra>(
            CommAlgebra::tensor(*a->T_, *b->T_));
        c->r1_ = std::make_shared<AlgebraHom>(unit_embedding(c->S_, c->T_));
        c->r2_ = c->r1_;
        c->factor1_ = std::move(a);
        c->factor2_ = std::move(b);
        return c;
    }

    struct Private {};  // tag to keep make_shared usable with hidden ctor
    explicit Cover(Private) {}

  private:
    static AlgebraHom unit_embedding(const std::shared_ptr<const CommAlgebra>& s,
                                     const std::shared_ptr<const CommAlgebra>& t) {
        // Bundled covers all have base S = k, embedded on the unit.
        std::vector<std::vector<Fel>> images;
        for (std::size_t i = 0; i < s->dim(); ++i) {
            if (i == 0)
                images.push_back(t->unit());
            else
                images.push_back(t->zero());
        }
        return AlgebraHom(s, t, std::move(images));
    }

    static GroupData build_pgl2(const FiniteField& F) {
        const unsigned q = F.order();
        std::vector<Mat> reps;
        for (unsigned code = 0; code < q * q * q * q; ++code) {
            unsigned c = code;
            Mat m(F, 2, 2);
            // Row-major digits, most significant first, so the scan is lex.
            Fel e[4];
            for (int i = 3; i >= 0; --i) {
                e[i] = static_cast<Fel>(c % q);
                c /= q;
            }
            m.at(0, 0) = e[0];
            m.at(0, 1) = e[1];
            m.at(1, 0) = e[2];
            m.at(1, 1) = e[3];
            const Fel det = F.sub(F.mul(e[0], e[3]), F.mul(e[1], e[2]));
            if (det == 0) continue;
            if (normalize_projective(m) == m) reps.push_back(m);
        }
        GroupData g;
        g.reps = std::move(reps);
        const std::size_t n = g.reps.size();
        g.mul.assign(n, std::vector<std::uint16_t>(n, 0));
        g.scalar.assign(n, std::vector<Fel>(n, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Mat prod = g.reps[a] * g.reps[b];
                const Mat canon = normalize_projective(prod);
                std::size_t k = n;
                for (std::size_t i = 0; i < n; ++i)
                    if (g.reps[i] == canon) {
                        k = i;
                        break;
                    }
                if (k == n)
                    throw std::logic_error("cover: group table closure failed");
                g.mul[a][b] = static_cast<std::uint16_t>(k);
                // prod = scalar * canon; read the scalar off the first
                // nonzero entry of canon.
                Fel s = 0;
                for (std::size_t i = 0; i < 2 && s == 0; ++i)
                    for (std::size_t j = 0; j < 2 && s == 0; ++j)
                        if (canon.at(i, j) != 0)
                            s = F.mul(prod.at(i, j), F.inv(canon.at(i, j)));
                g.scalar[a][b] = s;
            }
        return g;
    }

    static Mat normalize_projective(Mat m) {
        const FiniteField& F = m.field();
        Fel lead = 0;
        for (std::size_t i = 0; i < m.rows() && lead == 0; ++i)
            for (std::size_t j = 0; j < m.cols() && lead == 0; ++j)
                if (m.at(i, j) != 0) lead = m.at(i, j);
        if (lead == 0) return m;
        const Fel s = F.inv(lead);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = F.mul(s, m.at(i, j));
        return m;
    }

    const AlgebraHom& require_overlap(const std::shared_ptr<AlgebraHom>& p) const {
        if (!p)
            throw std::domain_error(
                "cover: the triple overlap is not materialized on this cover");
        return *p;
    }

    CoverKind kind_ = CoverKind::trivial;
    std::shared_ptr<const CommAlgebra> S_, T_, W_;
    std::shared_ptr<AlgebraHom> r1_, r2_, p12_, p13_, p23_;
    std::optional<GroupData> group_;
    std::shared_ptr<const Cover> factor1_, factor2_;
};

}  // namespace involutra::descent
