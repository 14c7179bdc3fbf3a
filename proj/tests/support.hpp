#pragma once

// Seeded random generators shared by the property suites.

#include "dplus/multipoly.hpp"
#include "dplus/partition.hpp"
#include "dplus/rational.hpp"
#include "dplus/unipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing_support {

using dplus::Integer;
using dplus::MultiPoly;
using dplus::MultiplicityVector;
using dplus::Rational;
using dplus::UniPoly;
using dplus::VarTable;

inline constexpr std::uint64_t kSeed = 20210402;

class Rng {
public:
    explicit Rng(std::uint64_t seed = kSeed, const std::string& label = "") : gen_(seed) {
        if (!label.empty()) std::cout << "[seed] " << label << " = " << seed << "\n";
    }

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    long nonzero(long bound) {
        long v = 0;
        while (v == 0) v = integer(-bound, bound);
        return v;
    }

    /// numerator in [-num, num], denominator in [1, den]
    Rational rational(long num = 20, long den = 20) { return Rational(Integer(integer(-num, num)), Integer(integer(1, den))); }

    std::vector<Rational> distinct_rationals(std::size_t count, long num = 20, long den = 20) {
        std::vector<Rational> out;
        while (out.size() < count) {
            Rational r = rational(num, den);
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
        return out;
    }

    std::vector<Rational> distinct_integers(std::size_t count, long bound) {
        std::vector<Rational> out;
        while (out.size() < count) {
            Rational r(integer(-bound, bound));
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
        return out;
    }

    /// Uniform over all m-partitions of n for random m.
    MultiplicityVector partition(unsigned n, unsigned min_m = 1) {
        auto m = static_cast<unsigned>(integer(min_m, n));
        auto all = dplus::partitions(n, m);
        return all[static_cast<std::size_t>(integer(0, static_cast<long>(all.size()) - 1))];
    }

    MultiPoly multipoly(const VarTable& vars, unsigned max_terms, unsigned max_degree, long coeff_bound = 9) {
        std::vector<dplus::Term> terms;
        auto count = integer(0, max_terms);
        for (long t = 0; t < count; ++t) {
            dplus::Monomial mono;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                unsigned room = max_degree - mono.degree();
                mono.set_exponent(v, static_cast<unsigned>(integer(0, room)));
            }
            terms.push_back({mono, rational(coeff_bound, 3)});
        }
        return MultiPoly::from_terms(vars, std::move(terms));
    }

    UniPoly unipoly(unsigned degree, long bound = 9) {
        std::vector<Rational> c;
        c.push_back(Rational(nonzero(bound)));
        for (unsigned i = 0; i < degree; ++i) c.push_back(rational(bound, 4));
        return UniPoly(std::move(c));
    }

    std::vector<Rational> point(std::size_t size, long num = 9, long den = 5) {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < size; ++i) p.push_back(rational(num, den));
        return p;
    }

    /// prod (c_j x - d_j)^mu_j over distinct rationals d_j / c_j, leading coefficient <= max_lead.
    UniPoly clustered_integer_poly(unsigned n, long max_lead) {
        MultiplicityVector mu = partition(n);
        while (true) {
            std::vector<std::pair<long, long>> roots;  // (c, d)
            std::vector<Rational> values;
            Integer lead = 1;
            for (unsigned j = 0; j < mu.m(); ++j) {
                long c = integer(1, 4), d = integer(-6, 6);
                roots.emplace_back(c, d);
                values.push_back(Rational(Integer(d), Integer(c)));
                lead *= dplus::ipow(Integer(c), mu[j]);
            }
            std::sort(values.begin(), values.end());
            if (lead > max_lead || std::adjacent_find(values.begin(), values.end()) != values.end()) continue;
            UniPoly p = UniPoly::constant(Rational(1));
            for (unsigned j = 0; j < mu.m(); ++j)
                p = p * UniPoly({Rational(roots[j].first), Rational(-roots[j].second)}).pow(mu[j]);
            return p;
        }
    }

    /// Leading coefficient in [1, max_lead], the rest in [-20, 20].
    UniPoly dense_integer_poly(unsigned n, long max_lead) {
        std::vector<Rational> c{Rational(integer(1, max_lead))};
        for (unsigned k = 0; k < n; ++k) c.push_back(Rational(integer(-20, 20)));
        return UniPoly(std::move(c));
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace testing_support
