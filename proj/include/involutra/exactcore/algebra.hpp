#pragma once

/// @file algebra.hpp
/// @brief Finite-dimensional commutative algebras over a finite field, stored
/// via sparse structure constants, with quotient / product / tensor
/// constructors, component bookkeeping for split algebras, and validated
/// algebra morphisms.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "involutra/exactcore/field.hpp"
#include "involutra/exactcore/linalg.hpp"

namespace involutra::exactcore {

/// Hard cap on algebra dimension; keeps dense solves and materialized
/// triple-overlap algebras tractable.
inline constexpr std::size_t kMaxAlgebraDim = 128;

/// How thoroughly the constructor checks the multiplication table; full
/// associativity is cubic in the dimension, so it is only verified for
/// dimensions up to this bound.
inline constexpr std::size_t kAssociativityCheckDim = 32;

/// @brief Commutative unital algebra of finite dimension over GF(p^e).
///
/// The multiplication table is sparse: entry (i, j) lists the nonzero
/// coordinates of e_i * e_j.  `components()` records a decomposition into
/// ideal blocks when the algebra was built as a product (or tensor of
/// products); a plain quotient ring is one block.
class CommAlgebra {
  public:
    using SparseVec = std::vector<std::pair<std::uint16_t, Fel>>;

    CommAlgebra(FiniteField field, std::size_t dim, std::vector<Fel> unit,
                std::vector<SparseVec> table, std::vector<std::string> basis_names,
                std::vector<std::vector<std::uint16_t>> components)
        : field_(std::move(field)),
          dim_(dim),
          unit_(std::move(unit)),
          table_(std::move(table)),
          names_(std::move(basis_names)),
          components_(std::move(components)) {
        if (dim_ == 0) throw std::invalid_argument("algebra: dimension must be >= 1");
        if (dim_ > kMaxAlgebraDim)
            throw std::invalid_argument("algebra: dimension exceeds the cap of 128");
        if (unit_.size() != dim_ || table_.size() != dim_ * dim_ ||
            names_.size() != dim_)
            throw std::invalid_argument("algebra: inconsistent table sizes");
        if (components_.empty()) {
            components_.emplace_back();
            for (std::size_t i = 0; i < dim_; ++i)
                components_[0].push_back(static_cast<std::uint16_t>(i));
        }
        validate();
    }

    const FiniteField& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Fel>& unit() const { return unit_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::vector<std::vector<std::uint16_t>>& components() const {
        return components_;
    }

    /// @brief k[x] / (poly), with poly given by monic coefficients c0..cd
    /// (ascending degree).  Basis 1, x, ..., x^{d-1}.
    static CommAlgebra quotient_poly(const FiniteField& field,
                                     const std::vector<Fel>& poly,
                                     const std::string& var = "x") {
        if (poly.size() < 2)
            throw std::invalid_argument("quotient ring: modulus must have degree >= 1");
        if (poly.back() != 1)
            throw std::invalid_argument("quotient ring: modulus must be monic");
        const std::size_t d = poly.size() - 1;
        // Reduction of x^d: x^d = -(c0 + c1 x + ...).
        std::vector<std::vector<Fel>> pow(2 * d - 1, std::vector<Fel>(d, 0));
        for (std::size_t i = 0; i < d; ++i) pow[i][i] = 1;
        for (std::size_t i = d; i < 2 * d - 1; ++i) {
            // pow[i] = x * pow[i-1], reduced.
            std::vector<Fel> shifted(d + 1, 0);
            for (std::size_t j = 0; j < d; ++j) shifted[j + 1] = pow[i - 1][j];
            const Fel lead = shifted[d];
            for (std::size_t j = 0; j < d; ++j)
                pow[i][j] = field.sub(shifted[j], field.mul(lead, poly[j]));
        }
        std::vector<SparseVec> table(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const auto& v = pow[i + j];
                for (std::size_t k = 0; k < d; ++k)
                    if (v[k] != 0)
                        table[i * d + j].emplace_back(static_cast<std::uint16_t>(k),
                                                      v[k]);
            }
        std::vector<Fel> unit(d, 0);
        unit[0] = 1;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == 0)
                names.push_back("1");
            else if (i == 1)
                names.push_back(var);
            else
                names.push_back(var + "^" + std::to_string(i));
        }
        return CommAlgebra(field, d, std::move(unit), std::move(table),
                           std::move(names), {});
    }

    /// @brief One-dimensional algebra k.
    static CommAlgebra trivial(const FiniteField& field) {
        return quotient_poly(field, {0, 1});  // k[x]/(x) = k
    }

    /// @brief Split algebra k^m with named coordinate idempotents.
    static CommAlgebra split(const FiniteField& field, std::size_t m,
                             const std::string& prefix = "e") {
        if (m == 0) throw std::invalid_argument("split algebra: need m >= 1");
        std::vector<SparseVec> table(m * m);
        for (std::size_t i = 0; i < m; ++i)
            table[i * m + i].emplace_back(static_cast<std::uint16_t>(i), Fel{1});
        std::vector<Fel> unit(m, 1);
        std::vector<std::string> names;
        std::vector<std::vector<std::uint16_t>> comps;
        for (std::size_t i = 0; i < m; ++i) {
            names.push_back(prefix + std::to_string(i));
            comps.push_back({static_cast<std::uint16_t>(i)});
        }
        return CommAlgebra(field, m, std::move(unit), std::move(table),
                           std::move(names), std::move(comps));
    }

    /// @brief Direct product A x B; components of the factors are preserved
    /// (shifted for the second factor) and basis names gain e0./e1. prefixes.
    static CommAlgebra product(const CommAlgebra& a, const CommAlgebra& b) {
        require_same_field(a, b);
        const std::size_t d = a.dim_ + b.dim_;
        std::vector<SparseVec> table(d * d);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j < a.dim_; ++j)
                table[i * d + j] = a.table_[i * a.dim_ + j];
        for (std::size_t i = 0; i < b.dim_; ++i)
            for (std::size_t j = 0; j < b.dim_; ++j) {
                SparseVec t = b.table_[i * b.dim_ + j];
                for (auto& [k, c] : t) k = static_cast<std::uint16_t>(k + a.dim_);
                table[(a.dim_ + i) * d + (a.dim_ + j)] = std::move(t);
            }
        std::vector<Fel> unit = a.unit_;
        unit.insert(unit.end(), b.unit_.begin(), b.unit_.end());
        std::vector<std::string> names;
        for (const auto& n : a.names_) names.push_back("e0." + n);
        for (const auto& n : b.names_) names.push_back("e1." + n);
        std::vector<std::vector<std::uint16_t>> comps = a.components_;
        for (const auto& c : b.components_) {
            std::vector<std::uint16_t> shifted;
            for (const auto k : c)
                shifted.push_back(static_cast<std::uint16_t>(k + a.dim_));
            comps.push_back(std::move(shifted));
        }
        return CommAlgebra(a.field_, d, std::move(unit), std::move(table),
                           std::move(names), std::move(comps));
    }

    /// @brief Tensor product A (x) B over the base field; basis index
    /// (i, j) -> i * dim(B) + j, names "<a>*<b>", components the pairwise
    /// products of the factors' components.
    static CommAlgebra tensor(const CommAlgebra& a, const CommAlgebra& b) {
        require_same_field(a, b);
        const std::size_t d = a.dim_ * b.dim_;
        if (d > kMaxAlgebraDim)
            throw std::invalid_argument("algebra: dimension exceeds the cap of 128");
        std::vector<SparseVec> table(d * d);
        for (std::size_t i1 = 0; i1 < a.dim_; ++i1)
            for (std::size_t j1 = 0; j1 < b.dim_; ++j1)
                for (std::size_t i2 = 0; i2 < a.dim_; ++i2)
                    for (std::size_t j2 = 0; j2 < b.dim_; ++j2) {
                        const auto& ta = a.table_[i1 * a.dim_ + i2];
                        const auto& tb = b.table_[j1 * b.dim_ + j2];
                        SparseVec& out =
                            table[(i1 * b.dim_ + j1) * d + (i2 * b.dim_ + j2)];
                        for (const auto& [ka, ca] : ta)
                            for (const auto& [kb, cb] : tb)
                                out.emplace_back(
                                    static_cast<std::uint16_t>(ka * b.dim_ + kb),
                                    a.field_.mul(ca, cb));
                    }
        std::vector<Fel> unit(d, 0);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j < b.dim_; ++j)
                unit[i * b.dim_ + j] = a.field_.mul(a.unit_[i], b.unit_[j]);
        std::vector<std::string> names;
        for (const auto& na : a.names_)
            for (const auto& nb : b.names_) names.push_back(na + "*" + nb);
        std::vector<std::vector<std::uint16_t>> comps;
        for (const auto& ca : a.components_)
            for (const auto& cb : b.components_) {
                std::vector<std::uint16_t> block;
                for (const auto i : ca)
                    for (const auto j : cb)
                        block.push_back(static_cast<std::uint16_t>(i * b.dim_ + j));
                comps.push_back(std::move(block));
            }
        return CommAlgebra(a.field_, d, std::move(unit), std::move(table),
                           std::move(names), std::move(comps));
    }

    std::vector<Fel> zero() const { return std::vector<Fel>(dim_, 0); }

    std::vector<Fel> add(const std::vector<Fel>& x, const std::vector<Fel>& y) const {
        check_vec(x);
        check_vec(y);
        std::vector<Fel> z(dim_);
        for (std::size_t i = 0; i < dim_; ++i) z[i] = field_.add(x[i], y[i]);
        return z;
    }

    std::vector<Fel> sub(const std::vector<Fel>& x, const std::vector<Fel>& y) const {
        check_vec(x);
        check_vec(y);
        std::vector<Fel> z(dim_);
        for (std::size_t i = 0; i < dim_; ++i) z[i] = field_.sub(x[i], y[i]);
        return z;
    }

    std::vector<Fel> scale(Fel c, const std::vector<Fel>& x) const {
        check_vec(x);
        std::vector<Fel> z(dim_);
        for (std::size_t i = 0; i < dim_; ++i) z[i] = field_.mul(c, x[i]);
        return z;
    }

    std::vector<Fel> mul(const std::vector<Fel>& x, const std::vector<Fel>& y) const {
        check_vec(x);
        check_vec(y);
        std::vector<Fel> z(dim_, 0);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                const Fel c = field_.mul(x[i], y[j]);
                for (const auto& [k, s] : table_[i * dim_ + j])
                    z[k] = field_.add(z[k], field_.mul(c, s));
            }
        }
        return z;
    }

    /// Scalar embedding c -> c * 1.
    std::vector<Fel> scalar(Fel c) const { return scale(c, unit_); }

    /// @brief Matrix of the multiplication-by-x map y -> x*y.
    Mat mult_matrix(const std::vector<Fel>& x) const {
        check_vec(x);
        Mat m(field_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            std::vector<Fel> ej(dim_, 0);
            ej[j] = 1;
            const auto col = mul(x, ej);
            for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    bool is_unit_element(const std::vector<Fel>& x) const {
        return rank(mult_matrix(x)) == dim_;
    }

    /// @throws std::domain_error when x is not invertible.
    std::vector<Fel> inverse_element(const std::vector<Fel>& x) const {
        auto sol = linear_solve(mult_matrix(x), unit_);
        if (!sol) throw std::domain_error("algebra: element is not invertible");
        return *sol;
    }

    /// Zero the coordinates outside component block `c`.
    std::vector<Fel> restrict_to_component(const std::vector<Fel>& x,
                                           std::size_t c) const {
        check_vec(x);
        if (c >= components_.size())
            throw std::invalid_argument("algebra: component index out of range");
        std::vector<Fel> z(dim_, 0);
        for (const auto k : components_[c]) z[k] = x[k];
        return z;
    }

    /// @brief Render an element as a signed sum over named basis vectors.
    std::string format(const std::vector<Fel>& x) const {
        check_vec(x);
        std::string out;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            if (!out.empty()) out += " + ";
            if (x[i] != 1) out += field_.format(x[i]) + "*";
            out += names_[i];
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const CommAlgebra& a, const CommAlgebra& b) {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.unit_ == b.unit_ &&
               a.table_ == b.table_;
    }
    friend bool operator!=(const CommAlgebra& a, const CommAlgebra& b) {
        return !(a == b);
    }

  private:
    static void require_same_field(const CommAlgebra& a, const CommAlgebra& b) {
        if (a.field_ != b.field_)
            throw std::invalid_argument("algebra: factors live over different fields");
    }

    void check_vec(const std::vector<Fel>& x) const {
        if (x.size() != dim_)
            throw std::invalid_argument("algebra: element has wrong dimension");
    }

    void validate() const {
        // Unit law on every basis vector.
        for (std::size_t i = 0; i < dim_; ++i) {
            std::vector<Fel> ei(dim_, 0);
            ei[i] = 1;
            if (mul(unit_, ei) != ei || mul(ei, unit_) != ei)
                throw std::invalid_argument(
                    "algebra: unit law fails at basis vector " + std::to_string(i));
        }
        // Commutativity of the table.
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                std::vector<Fel> ei(dim_, 0), ej(dim_, 0);
                ei[i] = 1;
                ej[j] = 1;
                if (mul(ei, ej) != mul(ej, ei))
                    throw std::invalid_argument(
                        "algebra: commutativity fails at basis pair (" +
                        std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        // Associativity is cubic; check it only in small dimension.
        if (dim_ <= kAssociativityCheckDim) {
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j)
                    for (std::size_t k = 0; k < dim_; ++k) {
                        std::vector<Fel> ei(dim_, 0), ej(dim_, 0), ek(dim_, 0);
                        ei[i] = 1;
                        ej[j] = 1;
                        ek[k] = 1;
                        if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek)))
                            throw std::invalid_argument(
                                "algebra: associativity fails at basis triple (" +
                                std::to_string(i) + ", " + std::to_string(j) + ", " +
                                std::to_string(k) + ")");
                    }
        }
    }

    FiniteField field_;
    std::size_t dim_;
    std::vector<Fel> unit_;
    std::vector<SparseVec> table_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::uint16_t>> components_;
};

/// @brief Unital algebra morphism between commutative algebras over the same
/// field, given by the images of the domain's basis vectors.  Construction
/// verifies unitality and multiplicativity on every basis pair and reports
/// the first failing pair.
class AlgebraHom {
  public:
    AlgebraHom(std::shared_ptr<const CommAlgebra> domain,
               std::shared_ptr<const CommAlgebra> codomain,
               std::vector<std::vector<Fel>> basis_images)
        : domain_(std::move(domain)),
          codomain_(std::move(codomain)),
          images_(std::move(basis_images)) {
        if (!domain_ || !codomain_)
            throw std::invalid_argument("algebra morphism: null algebra");
        if (domain_->field() != codomain_->field())
            throw std::invalid_argument(
                "algebra morphism: domain and codomain fields differ");
        if (images_.size() != domain_->dim())
            throw std::invalid_argument(
                "algebra morphism: wrong number of basis images");
        for (const auto& im : images_)
            if (im.size() != codomain_->dim())
                throw std::invalid_argument(
                    "algebra morphism: image has wrong dimension");
        if (apply(domain_->unit()) != codomain_->unit())
            throw std::invalid_argument(
                "algebra morphism: the unit is not preserved");
        for (std::size_t i = 0; i < domain_->dim(); ++i)
            for (std::size_t j = 0; j < domain_->dim(); ++j) {
                std::vector<Fel> ei(domain_->dim(), 0), ej(domain_->dim(), 0);
                ei[i] = 1;
                ej[j] = 1;
                const auto lhs = apply(domain_->mul(ei, ej));
                const auto rhs = codomain_->mul(images_[i], images_[j]);
                if (lhs != rhs)
                    throw std::invalid_argument(
                        "algebra morphism: multiplicativity fails at basis pair (" +
                        std::to_string(i) + ", " + std::to_string(j) + ")");
            }
    }

    const CommAlgebra& domain() const { return *domain_; }
    const CommAlgebra& codomain() const { return *codomain_; }
    const std::shared_ptr<const CommAlgebra>& domain_ptr() const { return domain_; }
    const std::shared_ptr<const CommAlgebra>& codomain_ptr() const {
        return codomain_;
    }

    std::vector<Fel> apply(const std::vector<Fel>& x) const {
        if (x.size() != domain_->dim())
            throw std::invalid_argument("algebra morphism: element has wrong dimension");
        std::vector<Fel> y(codomain_->dim(), 0);
        const FiniteField& F = domain_->field();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t k = 0; k < y.size(); ++k)
                y[k] = F.add(y[k], F.mul(x[i], images_[i][k]));
        }
        return y;
    }

    /// Matrix of the morphism as a linear map (columns = basis images).
    Mat matrix() const {
        Mat m(domain_->field(), codomain_->dim(), domain_->dim());
        for (std::size_t j = 0; j < domain_->dim(); ++j)
            for (std::size_t i = 0; i < codomain_->dim(); ++i)
                m.at(i, j) = images_[j][i];
        return m;
    }

    static AlgebraHom identity(const std::shared_ptr<const CommAlgebra>& a) {
        std::vector<std::vector<Fel>> imgs;
        for (std::size_t i = 0; i < a->dim(); ++i) {
            std::vector<Fel> e(a->dim(), 0);
            e[i] = 1;
            imgs.push_back(std::move(e));
        }
        return AlgebraHom(a, a, std::move(imgs));
    }

  private:
    std::shared_ptr<const CommAlgebra> domain_;
    std::shared_ptr<const CommAlgebra> codomain_;
    std::vector<std::vector<Fel>> images_;
};

}  // namespace involutra::exactcore
