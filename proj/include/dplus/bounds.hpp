#pragma once

// Worst-case size of prod mu_i^mu_i over m-partitions of n, and the a-priori
// ceiling on log(1/|D+(p)|) for integer polynomials.

#include "dplus/decimal.hpp"
#include "dplus/dplus.hpp"
#include "dplus/errors.hpp"
#include "dplus/partition.hpp"

#include <vector>

namespace dplus {

inline constexpr unsigned kPartitionBruteForceCap = 30;

struct PhiMax {
    unsigned argument;                // n - m + 1
    Decimal value;                    // argument * ln(argument)
    std::vector<unsigned> maximizer;  // (n-m+1, 1, ..., 1)
};

/// max of sum x_i ln x_i over n-m+1 >= x_1 >= ... >= x_m >= 1, attained at (n-m+1, 1, ..., 1).
inline PhiMax phi_max(unsigned n, unsigned m) {
    if (m < 1 || m > n) throw DomainError("phi_max needs 1 <= m <= n");
    unsigned k = n - m + 1;
    PhiMax out{k, Decimal(k) * boost::multiprecision::log(Decimal(k)), std::vector<unsigned>(m, 1)};
    out.maximizer[0] = k;
    return out;
}

inline Integer partition_weight(const MultiplicityVector& mu) {
    Integer w = 1;
    for (unsigned part : mu.parts()) w *= ipow(Integer(part), part);
    return w;
}

struct FMax {
    Integer value;
    MultiplicityVector argmax;  // first maximizer in reverse-lexicographic order
    std::size_t maximizers = 0;
    std::size_t partitions = 0;
};

/// Exhaustive max of prod mu_i^mu_i over all m-partitions of n.
inline FMax f_max_bruteforce(unsigned n, unsigned m) {
    if (m < 1 || m > n || n > kPartitionBruteForceCap)
        throw DomainError("f_max_bruteforce needs 1 <= m <= n <= 30");
    FMax best;
    for (const auto& mu : partitions(n, m)) {
        ++best.partitions;
        Integer w = partition_weight(mu);
        if (best.maximizers == 0 || w > best.value) {
            best.value = w;
            best.argmax = mu;
            best.maximizers = 1;
        } else if (w == best.value) {
            ++best.maximizers;
        }
    }
    return best;
}

/// 2n (ln n + L ln 2)
inline Decimal dplus_log_bound(unsigned n, unsigned L) {
    if (n < 1 || L < 1) throw DomainError("dplus_log_bound needs n >= 1 and L >= 1");
    return Decimal(2 * n) * (boost::multiprecision::log(Decimal(n)) + Decimal(L) * boost::multiprecision::log(Decimal(2)));
}

struct BoundReport {
    unsigned n, m, L;
    PhiMax phi;
    Integer f_max;
    Decimal corollary_bound;   // 2n(ln n + L ln 2)
    Decimal log_inverse;       // max{1, ln(1/|D+(p)|)}
    Decimal complexity_term;   // n * log_inverse
    Rational dplus;
    bool within_bound() const { return log_inverse <= corollary_bound; }
};

/// D+ term of the clustering cost for an integer polynomial with a0 > 0; L is the bit length of a0.
inline BoundReport cluster_cost_term(const UniPoly& p, unsigned cap = kDefaultScaleCap) {
    if (p.is_zero()) throw DomainError("cluster cost of the zero polynomial");
    if (!p.has_integer_coefficients()) throw DomainError("cluster cost needs integer coefficients");
    if (p.leading().sign() <= 0) throw DomainError("cluster cost needs a positive leading coefficient");
    DPlusReport rep = dplus_from_coeffs(p, cap);
    unsigned n = rep.mu.n(), m = rep.mu.m();
    auto L = static_cast<unsigned>(bit_length(p.leading().numerator()));
    BoundReport out{n, m, L, phi_max(n, m), ipow(Integer(n - m + 1), n - m + 1), dplus_log_bound(n, L),
                    rep.log_inverse, Decimal(n) * rep.log_inverse, rep.value};
    return out;
}

}  // namespace dplus
