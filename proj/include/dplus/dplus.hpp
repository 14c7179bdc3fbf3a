#pragma once

// D-plus discriminant of a univariate polynomial, from its coefficients via the
// gist H_{n,m}/C_mu, and from its roots directly (the oracle side).

#include "dplus/decimal.hpp"
#include "dplus/errors.hpp"
#include "dplus/gist.hpp"
#include "dplus/partition.hpp"
#include "dplus/unipoly.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dplus {

/// Yun's algorithm over Q[x]: pairs (g_i, i) with f = c * prod g_i^i and each g_i square-free,
/// pairwise coprime and primitive. Factors of degree 0 are omitted.
inline std::vector<std::pair<UniPoly, unsigned>> square_free_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (f.deg() == 0) return out;
    UniPoly p = f.primitive_part();
    UniPoly dp = p.derivative();
    UniPoly a = gcd(p, dp);
    UniPoly b = p.exact_divide(a);
    UniPoly c = dp.exact_divide(a);
    UniPoly d = c - b.derivative();
    for (unsigned i = 1; b.deg() > 0; ++i) {
        UniPoly g = gcd(b, d);
        b = b.exact_divide(g);
        c = d.exact_divide(g);
        d = c - b.derivative();
        if (g.deg() > 0) out.emplace_back(g, i);
    }
    return out;
}

/// Multiplicities of the distinct complex roots of p, non-increasing.
inline MultiplicityVector multiplicity_vector(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("multiplicity vector of the zero polynomial");
    if (p.deg() == 0) throw DomainError("multiplicity vector needs degree >= 1");
    std::vector<unsigned> parts;
    for (const auto& [factor, mult] : square_free_decomposition(p))
        for (std::size_t k = 0; k < factor.deg(); ++k) parts.push_back(mult);
    auto mu = MultiplicityVector::from_unsorted(std::move(parts));
    if (mu.n() != p.deg()) throw ContractViolation("square-free decomposition lost degree");
    return mu;
}

/// e_1..e_n of the multiset holding r_j with multiplicity mu_j.
inline std::vector<Rational> specialized_elem_sym(const MultiplicityVector& mu, std::span<const Rational> r) {
    if (r.size() != mu.m()) throw DomainError("root vector length must equal the number of multiplicities");
    unsigned n = mu.n();
    std::vector<Rational> e(n + 1);
    e[0] = Rational(1);
    unsigned seen = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        for (unsigned rep = 0; rep < mu[j]; ++rep) {
            ++seen;
            for (unsigned k = seen; k >= 1; --k) e[k] += r[j] * e[k - 1];
        }
    }
    return {e.begin() + 1, e.end()};
}

inline void check_distinct(std::span<const Rational> r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            if (r[i] == r[j]) throw DomainError("root values must be pairwise distinct");
}

/// prod_{i<j} (r_i - r_j)^(mu_i + mu_j); the empty product (m = 1) is 1.
inline Rational dplus_from_roots(const MultiplicityVector& mu, std::span<const Rational> r) {
    if (r.size() != mu.m()) throw DomainError("root vector length must equal the number of multiplicities");
    check_distinct(r);
    Rational prod(1);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) prod *= pow(r[i] - r[j], mu[i] + mu[j]);
    return prod;
}

/// leading * prod (x - r_j)^mu_j
inline UniPoly build_poly_from_roots(const MultiplicityVector& mu, std::span<const Rational> r, const Rational& leading) {
    if (r.size() != mu.m()) throw DomainError("root vector length must equal the number of multiplicities");
    if (leading.is_zero()) throw DomainError("leading coefficient must be nonzero");
    check_distinct(r);
    UniPoly p = UniPoly::constant(leading);
    for (std::size_t j = 0; j < r.size(); ++j) p = p * UniPoly::linear(r[j]).pow(mu[j]);
    return p;
}

/// (n-m)! * prod mu_i^mu_i * |a0|^(n+m-2) = |C_mu| * |a0|^(n+m-2).
inline Integer denominator_bound(const MultiplicityVector& mu, const Integer& a0) {
    Integer c = c_mu(mu);
    return abs(c) * ipow(abs(a0), mu.n() + mu.m() - 2);
}

struct DPlusReport {
    UniPoly input;
    MultiplicityVector mu;
    Rational value;
    std::optional<GistResult> gist;             // absent when m = 1
    std::optional<Integer> denominator_bound;   // integer-coefficient input only
    Decimal log_inverse;                        // max{1, ln(1/|D+|)}
};

/// max{1, ln(1/|v|)} for nonzero v.
inline Decimal log_inverse_term(const Rational& v) {
    Decimal l = -ln(abs(v));
    return l < 1 ? Decimal(1) : l;
}

/// D+(p) = H(-a1/a0, a2/a0, ..., (-1)^n an/a0) / C_mu, with mu = mu(p).
inline DPlusReport dplus_from_coeffs(const UniPoly& p, unsigned cap = kDefaultScaleCap) {
    if (p.is_zero()) throw DomainError("D+ of the zero polynomial is undefined");
    if (p.deg() == 0) throw DomainError("D+ needs degree >= 1");
    DPlusReport rep;
    rep.input = p;
    rep.mu = multiplicity_vector(p);
    unsigned n = rep.mu.n(), m = rep.mu.m();
    if (m == 1) {
        rep.value = Rational(1);
    } else {
        rep.gist = gist_general(rep.mu, cap);
        auto a = p.coeffs();
        std::vector<Rational> z;
        z.reserve(n);
        for (unsigned i = 1; i <= n; ++i) {
            Rational zi = a[i] / a[0];
            z.push_back(i % 2 == 0 ? zi : -zi);
        }
        rep.value = rep.gist->evaluate(z);
        if (rep.value.is_zero()) throw ContractViolation("D+ evaluated to zero");
    }
    if (p.has_integer_coefficients()) {
        rep.denominator_bound = denominator_bound(rep.mu, p.leading().numerator());
        if (!mpz_divisible_p(rep.denominator_bound->get_mpz_t(), rep.value.denominator().get_mpz_t()))
            throw ContractViolation("denominator of D+ does not divide |C_mu| * a0^(n+m-2)");
    }
    rep.log_inverse = log_inverse_term(rep.value);
    return rep;
}

/// Denominator bound of an integer polynomial, computed from its own multiplicity vector.
inline Integer denominator_bound(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("denominator bound of the zero polynomial");
    if (!p.has_integer_coefficients()) throw DomainError("denominator bound needs integer coefficients");
    return denominator_bound(multiplicity_vector(p), p.leading().numerator());
}

/// Whether D+_mu1 and D+_mu2 are the same polynomial in r: same m and same exponents mu_i + mu_j.
inline bool dplus_function_equal(const MultiplicityVector& mu1, const MultiplicityVector& mu2) {
    if (mu1.m() != mu2.m()) return false;
    for (unsigned i = 0; i < mu1.m(); ++i)
        for (unsigned j = i + 1; j < mu1.m(); ++j)
            if (mu1[i] + mu1[j] != mu2[i] + mu2[j]) return false;
    return true;
}

/// p' / (n * prod (x - r_k)^(mu_k - 1)) for p = prod (x - r_k)^mu_k; monic of degree m-1.
inline UniPoly derivative_cofactor(const MultiplicityVector& mu, std::span<const Rational> r) {
    UniPoly p = build_poly_from_roots(mu, r, Rational(1));
    UniPoly divisor = UniPoly::constant(Rational(static_cast<long>(mu.n())));
    for (std::size_t k = 0; k < r.size(); ++k) divisor = divisor * UniPoly::linear(r[k]).pow(mu[k] - 1);
    return p.derivative().exact_divide(divisor);
}

}  // namespace dplus
