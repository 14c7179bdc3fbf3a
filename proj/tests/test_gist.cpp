#include "dplus/dplus.hpp"
#include "dplus/errors.hpp"
#include "dplus/gist.hpp"
#include "dplus/parse.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace dplus;
using testing_support::Rng;

namespace {

Rational root_product(const MultiplicityVector& mu, const std::vector<Rational>& r) {
    Rational prod(1);
    for (unsigned i = 0; i < mu.m(); ++i)
        for (unsigned j = i + 1; j < mu.m(); ++j) prod = prod * pow(r[i] - r[j], mu[i] + mu[j]);
    return prod;
}

std::vector<Rational> ebar(const MultiplicityVector& mu, const std::vector<Rational>& r) {
    return specialized_elem_sym(mu, r);
}

}  // namespace

TEST(CMu, Examples) {
    EXPECT_EQ(c_mu(MultiplicityVector{2, 1}), -4);
    EXPECT_EQ(c_mu(MultiplicityVector{1, 1}), 1);
    EXPECT_EQ(c_mu(MultiplicityVector{2, 2}), 32);
    for (unsigned n = 2; n <= 12; ++n)
        for (unsigned m = 1; m <= n; ++m)
            for (const auto& mu : partitions(n, m)) EXPECT_NE(c_mu(mu), 0) << mu.str();
}

TEST(HPoly, Examples) {
    EXPECT_EQ(h_poly(3, 2), parse_multipoly("4*z1^3 - 18*z1*z2 + 54*z3", z_table(3)));
    EXPECT_EQ(h_poly(3, 2).str(), "4*z1^3 - 18*z1*z2 + 54*z3");
    EXPECT_EQ(h_poly(2, 2), parse_multipoly("z1^2 - 4*z2", z_table(2)));
    EXPECT_EQ(h_poly(3, 3),
              parse_multipoly("-4*z1^3*z3 + z1^2*z2^2 + 18*z1*z2*z3 - 4*z2^3 - 27*z3^2", z_table(3)));
}

TEST(HPoly, PreconditionsAndCap) {
    EXPECT_THROW(h_poly(3, 1), DomainError);
    EXPECT_THROW(h_poly(3, 4), DomainError);
    EXPECT_THROW(h_poly(9, 2), ScaleCapExceeded);
    EXPECT_THROW(cached_h_poly(9, 2), ScaleCapExceeded);
}

TEST(HPoly, CoefficientFreeIntegerBoundedDegree) {
    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned m = 2; m <= n; ++m) {
            MultiPoly h = h_poly(n, m);
            EXPECT_FALSE(h.is_zero());
            EXPECT_FALSE(h.vars().find("c0").has_value());
            EXPECT_TRUE(h.has_integer_coefficients());
            EXPECT_LE(*h.total_degree(), n + m - 2) << n << "," << m;
        }
    }
}

TEST(GistGeneral, Examples) {
    GistResult g = gist_general(MultiplicityVector{2, 1});
    EXPECT_EQ(g.h->str(), "4*z1^3 - 18*z1*z2 + 54*z3");
    EXPECT_EQ(g.c_mu, -4);
    GistResult g11 = gist_general(MultiplicityVector{1, 1});
    EXPECT_EQ(g11.h->str(), "z1^2 - 4*z2");
    EXPECT_EQ(g11.c_mu, 1);
    GistResult a = gist_general(MultiplicityVector{3, 2}), b = gist_general(MultiplicityVector{4, 1});
    EXPECT_EQ(*a.h, *b.h);
    EXPECT_NE(a.c_mu, b.c_mu);
    EXPECT_THROW(gist_general(MultiplicityVector{3}), DomainError);
}

TEST(GistGeneral, SameHForEveryPartition) {
    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned m = 2; m <= n; ++m) {
            auto all = partitions(n, m);
            MultiPoly first = *gist_general(all.front()).h;
            for (const auto& mu : all) EXPECT_EQ(*gist_general(mu).h, first) << mu.str();
        }
    }
}

TEST(GistGeneral, RootProductChain) {
    Rng rng(301, "gist chain");
    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned m = 2; m <= n; ++m) {
            for (const auto& mu : partitions(n, m)) {
                GistResult g = gist_general(mu);
                for (int t = 0; t < 200; ++t) {
                    auto r = rng.distinct_rationals(m, 20, 20);
                    auto e = ebar(mu, r);
                    EXPECT_EQ(g.h->evaluate(e), Rational(g.c_mu) * root_product(mu, r)) << mu.str();
                }
            }
        }
    }
}

TEST(GistGeneral, ConcurrentCacheFillIsConsistent) {
    std::vector<std::shared_ptr<const MultiPoly>> seen(8);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < seen.size(); ++i)
        pool.emplace_back([&, i] { seen[i] = cached_h_poly(5, 3); });
    for (auto& t : pool) t.join();
    for (const auto& s : seen) {
        ASSERT_NE(s, nullptr);
        EXPECT_EQ(s.get(), seen.front().get());
        EXPECT_EQ(*s, h_poly(5, 3));
    }
}

TEST(TwoParts, Examples) {
    VarTable z2 = z_table(2), z3 = z_table(3), z4 = z_table(4);
    EXPECT_EQ(gist_two_parts(MultiplicityVector{1, 1}), parse_multipoly("z1^2 - 4*z2", z2));
    EXPECT_EQ(gist_two_parts(MultiplicityVector{2, 1}), parse_multipoly("-z1^3 + 9/2*z1*z2 - 27/2*z3", z3));
    EXPECT_EQ(gist_two_parts(MultiplicityVector{2, 1}) * Rational(-4), h_poly(3, 2));
    MultiPoly base = parse_multipoly("3/4*z1^2 - 2*z2", z4);
    EXPECT_EQ(gist_two_parts(MultiplicityVector{2, 2}), base * base);
    EXPECT_THROW(gist_two_parts(MultiplicityVector{2, 1, 1}), DomainError);
}

TEST(TwoParts, AgreesWithGeneralGistOnRootImages) {
    // Gists are only determined modulo the kernel of the mu-specialization,
    // so agreement is checked at z = ebar(r).
    Rng rng(302, "two-part gist");
    for (unsigned n = 2; n <= 7; ++n) {
        for (const auto& mu : partitions(n, 2)) {
            MultiPoly closed = gist_two_parts(mu);
            GistResult g = gist_general(mu);
            for (int t = 0; t < 50; ++t) {
                auto r = rng.distinct_rationals(2, 20, 20);
                auto e = ebar(mu, r);
                EXPECT_EQ(closed.evaluate(e), g.evaluate(e)) << mu.str();
                EXPECT_EQ(closed.evaluate(e), root_product(mu, r)) << mu.str();
            }
        }
    }
}

TEST(EqualParts, NormalizationSign) {
    EXPECT_EQ(subdiscriminant_normalization(1), 1);
    EXPECT_EQ(subdiscriminant_normalization(2), -1);
    EXPECT_EQ(subdiscriminant_normalization(3), -1);
    EXPECT_EQ(subdiscriminant_normalization(4), 1);
}

TEST(EqualParts, AllSimpleRootsGivesClassicalGist) {
    // mu = (1,1,1): the closed form is the specialized discriminant, H_{3,3} / C_mu
    MultiPoly closed = gist_equal_parts(MultiplicityVector{1, 1, 1});
    GistResult g = gist_general(MultiplicityVector{1, 1, 1});
    EXPECT_EQ(closed * Rational(g.c_mu), *g.h);
}

TEST(EqualParts, AgreesWithGeneralGistOnRootImages) {
    Rng rng(303, "equal-part gist");
    for (auto mu : {MultiplicityVector{2, 2}, MultiplicityVector{2, 2, 2}, MultiplicityVector{3, 3},
                    MultiplicityVector{1, 1}, MultiplicityVector{1, 1, 1, 1}}) {
        MultiPoly closed = gist_equal_parts(mu);
        GistResult g = gist_general(mu);
        for (int t = 0; t < 50; ++t) {
            auto r = rng.distinct_rationals(mu.m(), 20, 20);
            auto e = ebar(mu, r);
            EXPECT_EQ(closed.evaluate(e), g.evaluate(e)) << mu.str();
        }
    }
    EXPECT_THROW(gist_equal_parts(MultiplicityVector{2, 1}), DomainError);
}

TEST(EqualParts, WrongSignWouldBeDetected) {
    // for odd k the sign survives the k-th power, so kappa is observable
    MultiplicityVector mu{3, 3};
    MultiPoly closed = gist_equal_parts(mu);
    GistResult g = gist_general(mu);
    std::vector<Rational> r{Rational(2), Rational(-1)};
    auto e = ebar(mu, r);
    EXPECT_EQ(closed.evaluate(e), g.evaluate(e));
    EXPECT_NE((-closed).evaluate(e), g.evaluate(e));
}
