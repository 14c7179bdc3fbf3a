#pragma once

// The D-plus gist: a constant C_mu and a polynomial H_{n,m}(z1..zn) with
// D+_mu(r) = H(e1bar, ..., enbar) / C_mu, plus the two closed-form special
// cases (two distinct roots, all multiplicities equal).

#include "dplus/errors.hpp"
#include "dplus/multipoly.hpp"
#include "dplus/partition.hpp"
#include "dplus/resultant.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace dplus {

inline VarTable z_table(unsigned n) { return VarTable(VarTable::indexed("z", 1, static_cast<int>(n))); }

/// (n-m)! * (-1)^(mn + C(n,2) + sum_i i*mu_i) * prod mu_i^mu_i, with i counted from 1.
inline Integer c_mu(const MultiplicityVector& mu) {
    unsigned n = mu.n(), m = mu.m();
    unsigned long exponent = static_cast<unsigned long>(m) * n + static_cast<unsigned long>(n) * (n - 1) / 2;
    Integer prod = factorial(n - m);
    for (unsigned i = 0; i < m; ++i) {
        exponent += static_cast<unsigned long>(i + 1) * mu[i];
        prod *= ipow(Integer(mu[i]), mu[i]);
    }
    return exponent % 2 == 0 ? prod : Integer(-prod);
}

namespace detail {

/// Thread-safe memo: concurrent fills may compute twice, the first insertion wins.
template <class Key>
class PolyCache {
public:
    template <class Make>
    std::shared_ptr<const MultiPoly> get(const Key& key, Make&& make) {
        {
            std::lock_guard lock(mu_);
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        auto value = std::make_shared<const MultiPoly>(make());
        std::lock_guard lock(mu_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, std::shared_ptr<const MultiPoly>> map_;
};

inline PolyCache<unsigned>& discriminant_cache() {
    static PolyCache<unsigned> cache;
    return cache;
}

inline PolyCache<std::pair<unsigned, unsigned>>& h_cache() {
    static PolyCache<std::pair<unsigned, unsigned>> cache;
    return cache;
}

}  // namespace detail

/// discriminant_symbolic(n), memoized.
inline std::shared_ptr<const MultiPoly> cached_discriminant(unsigned n, unsigned cap = kDefaultScaleCap) {
    if (n < 2) throw DomainError("symbolic discriminant needs n >= 2");
    check_scale_cap(n, cap);
    return detail::discriminant_cache().get(n, [&] { return discriminant_symbolic(n, cap); });
}

/// Specialization c_i -> (-1)^i z_i c0 (i = 1..n), over the table (c0, z1..zn).
inline MultiPoly specialize_to_z(const MultiPoly& f, unsigned n) {
    std::vector<std::string> names = {"c0"};
    for (auto& z : VarTable::indexed("z", 1, static_cast<int>(n))) names.push_back(z);
    VarTable target(names);
    MultiPoly c0 = MultiPoly::variable(target, "c0");
    std::map<std::string, MultiPoly> assignment;
    assignment.emplace("c0", c0);
    for (unsigned i = 1; i <= n; ++i) {
        MultiPoly zi = MultiPoly::variable(target, "z" + std::to_string(i)) * c0;
        assignment.emplace("c" + std::to_string(i), i % 2 == 0 ? zi : -zi);
    }
    return f.substitute(assignment, target);
}

/// H_{n,m}: d^(n-m)/dc_n^(n-m) of D, specialized c_i -> (-1)^i z_i c0, divided by c0^(m+n-2).
inline MultiPoly h_poly(unsigned n, unsigned m, unsigned cap = kDefaultScaleCap) {
    if (m < 2 || m > n) throw DomainError("H_{n,m} needs 2 <= m <= n");
    check_scale_cap(n, cap);
    MultiPoly f = *cached_discriminant(n, cap);
    std::string cn = "c" + std::to_string(n);
    for (unsigned k = 0; k < n - m; ++k) f = f.partial_derivative(cn);
    MultiPoly spec = specialize_to_z(f, n);
    MultiPoly c0_power = MultiPoly::variable(spec.vars(), "c0").pow(m + n - 2);
    MultiPoly h;
    try {
        h = spec.exact_divide(c0_power);
    } catch (const NonExactDivision&) {
        throw ContractViolation("H_{n,m} is not divisible by c0^(m+n-2)");
    }
    if (h.uses("c0")) throw ContractViolation("H_{n,m} retains c0 after division");
    if (!h.has_integer_coefficients()) throw ContractViolation("H_{n,m} has non-integer coefficients");
    return h.rebase(z_table(n));
}

inline std::shared_ptr<const MultiPoly> cached_h_poly(unsigned n, unsigned m, unsigned cap = kDefaultScaleCap) {
    if (m < 2 || m > n) throw DomainError("H_{n,m} needs 2 <= m <= n");
    check_scale_cap(n, cap);
    return detail::h_cache().get({n, m}, [&] { return h_poly(n, m, cap); });
}

struct GistResult {
    std::shared_ptr<const MultiPoly> h;  // H_{n,m} over z1..zn
    Integer c_mu;
    unsigned n = 0, m = 0;

    /// H(z) / C_mu at z aligned with z1..zn.
    Rational evaluate(std::span<const Rational> z) const { return h->evaluate(z) / Rational(c_mu); }
};

inline GistResult gist_general(const MultiplicityVector& mu, unsigned cap = kDefaultScaleCap) {
    if (mu.m() < 2) throw DomainError("general gist needs at least two distinct roots");
    return GistResult{cached_h_poly(mu.n(), mu.m(), cap), c_mu(mu), mu.n(), mu.m()};
}

/// Closed-form gist for mu = (mu1, mu2).
inline MultiPoly gist_two_parts(const MultiplicityVector& mu) {
    if (mu.m() != 2) throw DomainError("two-part gist needs exactly two multiplicities");
    unsigned n = mu.n();
    long mu1 = mu[0], mu2 = mu[1];
    VarTable vars = z_table(n);
    MultiPoly z1 = MultiPoly::variable(vars, "z1"), z2 = MultiPoly::variable(vars, "z2");
    MultiPoly base = (z1 * z1 * Rational(static_cast<long>(n) - 1) - z2 * Rational(2L * n)) *
                     Rational(Integer(1), Integer(mu1 * mu2));
    if (n % 2 == 0) return base.pow(n / 2);
    if (mu1 == mu2) throw DomainError("odd n with equal multiplicities cannot occur for two parts");
    long nn = n;
    Integer d = mu1 * mu2 * (mu1 - mu2);
    Rational k1(Integer(-(nn - 1) * (nn - 2)), d), k2(Integer(3 * nn * (nn - 2)), d), k3(Integer(-3 * nn * nn), d);
    MultiPoly z3 = MultiPoly::variable(vars, "z3");
    MultiPoly cubic = z1 * z1 * z1 * k1 + z1 * z2 * k2 + z3 * k3;
    return base.pow((n - 3) / 2) * cubic;
}

/// Specialization c0 -> 1, c_i -> (-1)^i z_i of a polynomial in c0..cn.
inline MultiPoly specialize_monic(const MultiPoly& f, unsigned n) {
    VarTable target = z_table(n);
    std::map<std::string, MultiPoly> assignment;
    assignment.emplace("c0", MultiPoly::constant(target, 1));
    for (unsigned i = 1; i <= n; ++i) {
        MultiPoly zi = MultiPoly::variable(target, "z" + std::to_string(i));
        assignment.emplace("c" + std::to_string(i), i % 2 == 0 ? zi : -zi);
    }
    return f.substitute(assignment, target);
}

/// Sign kappa with ((1/k^m) * kappa * S^n_{n-m})^k equal to the general gist for
/// mu = (k, ..., k), where S^n_j is subdiscriminant(n, j) specialized to monic z form.
/// Measured against H/C_mu at mu = (1^m) for m = 2..6, (2,2), (3,3), (2,2,2), (4,4)
/// and (2,2,2,2): kappa = (-1)^(m(m-1)/2) in every case, independent of k.
inline int subdiscriminant_normalization(unsigned m) {
    return (static_cast<unsigned long>(m) * (m - 1) / 2) % 2 == 0 ? 1 : -1;
}

/// Closed-form gist for mu = (k, ..., k): ((1/k^m) * kappa * S^n_{n-m})^k over z1..zn.
inline MultiPoly gist_equal_parts(const MultiplicityVector& mu, unsigned cap = kDefaultScaleCap) {
    if (!mu.all_equal()) throw DomainError("equal-parts gist needs all multiplicities equal");
    unsigned n = mu.n(), m = mu.m(), k = mu[0];
    if (n < 2) throw DomainError("equal-parts gist needs n >= 2");
    MultiPoly s = specialize_monic(subdiscriminant(n, n - m, cap), n);
    Rational scale = Rational(subdiscriminant_normalization(m)) / Rational(ipow(Integer(k), m));
    return (s * scale).pow(k);
}

}  // namespace dplus
