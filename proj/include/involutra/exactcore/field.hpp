#pragma once

/// @file field.hpp
/// @brief Exact arithmetic in GF(p^e) for p^e <= 256, with shared lookup tables.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the code,
/// least significant digit first, are the coefficients of the residue
/// polynomial in the generator g.  For e >= 2 the modulus is the
/// lexicographically least monic irreducible polynomial of degree e over
/// GF(p), so GF(4) is k[g]/(g^2 + g + 1) and the codes 0,1,2,3 mean
/// 0, 1, g, 1+g.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace involutra::exactcore {

/// Field element code; valid values lie in [0, order()).
using Fel = std::uint16_t;

namespace detail {

inline std::vector<unsigned> poly_mul_mod_p(const std::vector<unsigned>& a,
                                            const std::vector<unsigned>& b,
                                            unsigned p) {
    std::vector<unsigned> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

inline std::vector<unsigned> poly_rem(std::vector<unsigned> a,
                                      const std::vector<unsigned>& m,
                                      unsigned p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const unsigned lead = a.back();
        a.pop_back();
        if (lead != 0) {
            for (std::size_t i = 0; i < dm; ++i) {
                const std::size_t pos = a.size() - dm + i;
                a[pos] = (a[pos] + (p - lead % p) * m[i]) % p;
            }
        }
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

inline bool poly_is_irreducible(const std::vector<unsigned>& m, unsigned p) {
    const std::size_t deg = m.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::vector<unsigned> div(d + 1, 0);
        div[d] = 1;
        unsigned long long count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (unsigned long long code = 0; code < count; ++code) {
            unsigned long long c = code;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            const auto rem = poly_rem(m, div, p);
            if (rem.size() == 1 && rem[0] == 0) return false;
        }
    }
    return true;
}

}  // namespace detail

/// @brief GF(p^e) with precomputed addition/multiplication/inverse tables.
///
/// Copies share the underlying tables; equality means same (p, e), since the
/// modulus is canonical.
class FiniteField {
  public:
    /// @brief Construct GF(p^e).  @throws std::invalid_argument for
    /// non-prime p, e = 0, or p^e > 256.
    explicit FiniteField(unsigned p, unsigned e = 1)
        : tables_(build_tables(p, e)) {}

    unsigned characteristic() const { return tables_->p; }
    unsigned degree() const { return tables_->e; }
    unsigned order() const { return tables_->q; }

    /// Modulus coefficients c0..c_e (monic) for e >= 2; {0,1}-style for e = 1.
    const std::vector<unsigned>& modulus() const { return tables_->modulus; }

    Fel add(Fel a, Fel b) const { return tables_->add[idx(a, b)]; }
    Fel mul(Fel a, Fel b) const { return tables_->mul[idx(a, b)]; }
    Fel neg(Fel a) const { return tables_->neg[check(a)]; }
    Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }

    /// @throws std::domain_error on zero.
    Fel inv(Fel a) const {
        if (check(a) == 0) throw std::domain_error("finite field: division by zero");
        return tables_->inv[a];
    }

    bool is_prime_field() const { return tables_->e == 1; }

    /// @brief Render an element, e.g. "0", "1", "g", "1+g", "2+g^2".
    std::string format(Fel a, const std::string& gen = "g") const {
        check(a);
        if (tables_->e == 1) return std::to_string(a);
        std::string out;
        unsigned rest = a;
        for (unsigned i = 0; i < tables_->e; ++i) {
            const unsigned c = rest % tables_->p;
            rest /= tables_->p;
            if (c == 0) continue;
            std::string term;
            if (i == 0) {
                term = std::to_string(c);
            } else {
                if (c != 1) term = std::to_string(c) + "*";
                term += gen;
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (!out.empty()) out += "+";
            out += term;
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.tables_->p == b.tables_->p && a.tables_->e == b.tables_->e;
    }
    friend bool operator!=(const FiniteField& a, const FiniteField& b) {
        return !(a == b);
    }

  private:
    struct Tables {
        unsigned p = 0, e = 0, q = 0;
        std::vector<unsigned> modulus;
        std::vector<Fel> add, mul, neg, inv;
    };

    std::size_t idx(Fel a, Fel b) const {
        return static_cast<std::size_t>(check(a)) * tables_->q + check(b);
    }

    Fel check(Fel a) const {
        if (a >= tables_->q)
            throw std::invalid_argument("finite field: element code out of range");
        return a;
    }

    static bool is_prime(unsigned p) {
        if (p < 2) return false;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    static std::shared_ptr<const Tables> build_tables(unsigned p, unsigned e) {
        if (!is_prime(p)) throw std::invalid_argument("finite field: p must be prime");
        if (e == 0) throw std::invalid_argument("finite field: degree must be >= 1");
        unsigned long long q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        if (q > 256) throw std::invalid_argument("finite field: order must be <= 256");

        auto t = std::make_shared<Tables>();
        t->p = p;
        t->e = e;
        t->q = static_cast<unsigned>(q);

        if (e == 1) {
            t->modulus = {0, 1};
        } else {
            // Lexicographically least monic irreducible: scan tails ascending.
            for (unsigned long long code = 0; code < q; ++code) {
                std::vector<unsigned> cand(e + 1, 0);
                cand[e] = 1;
                unsigned long long c = code;
                for (unsigned i = 0; i < e; ++i) {
                    cand[i] = static_cast<unsigned>(c % p);
                    c /= p;
                }
                if (detail::poly_is_irreducible(cand, p)) {
                    t->modulus = cand;
                    break;
                }
            }
        }

        const auto digits = [&](unsigned a) {
            std::vector<unsigned> d(e, 0);
            for (unsigned i = 0; i < e; ++i) {
                d[i] = a % p;
                a /= p;
            }
            return d;
        };
        const auto undigits = [&](const std::vector<unsigned>& d) {
            unsigned out = 0;
            for (unsigned i = e; i-- > 0;) out = out * p + d[i];
            return out;
        };

        t->add.resize(t->q * t->q);
        t->mul.resize(t->q * t->q);
        t->neg.resize(t->q);
        t->inv.assign(t->q, 0);
        for (unsigned a = 0; a < t->q; ++a) {
            const auto da = digits(a);
            std::vector<unsigned> dn(e, 0);
            for (unsigned i = 0; i < e; ++i) dn[i] = (p - da[i] % p) % p;
            t->neg[a] = static_cast<Fel>(undigits(dn));
            for (unsigned b = 0; b < t->q; ++b) {
                const auto db = digits(b);
                std::vector<unsigned> ds(e, 0);
                for (unsigned i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
                t->add[static_cast<std::size_t>(a) * t->q + b] =
                    static_cast<Fel>(undigits(ds));
                std::vector<unsigned> prod;
                if (e == 1) {
                    prod = {(da[0] * db[0]) % p};
                } else {
                    prod = detail::poly_rem(detail::poly_mul_mod_p(da, db, p),
                                            t->modulus, p);
                }
                prod.resize(e, 0);
                t->mul[static_cast<std::size_t>(a) * t->q + b] =
                    static_cast<Fel>(undigits(prod));
            }
        }
        for (unsigned a = 1; a < t->q; ++a)
            for (unsigned b = 1; b < t->q; ++b)
                if (t->mul[static_cast<std::size_t>(a) * t->q + b] == 1) {
                    t->inv[a] = static_cast<Fel>(b);
                    break;
                }
        return t;
    }

    std::shared_ptr<const Tables> tables_;
};

}  // namespace involutra::exactcore
