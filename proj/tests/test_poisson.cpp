#include "dplus/errors.hpp"
#include "dplus/parse.hpp"
#include "dplus/poisson.hpp"

#include <gtest/gtest.h>

using namespace dplus;

namespace {

// Relabels a polynomial over poisson_table(n, m) into poisson_table(m, n) by
// swapping a <-> b and alpha <-> beta.
MultiPoly swap_roles(const MultiPoly& p, unsigned m, unsigned n) {
    VarTable target = poisson_table(m, n);
    std::map<std::string, MultiPoly> sub;
    for (unsigned k = 0; k <= n; ++k) sub.emplace("a" + std::to_string(k), MultiPoly::variable(target, "b" + std::to_string(k)));
    for (unsigned k = 0; k <= m; ++k) sub.emplace("b" + std::to_string(k), MultiPoly::variable(target, "a" + std::to_string(k)));
    for (unsigned k = 1; k <= n; ++k)
        sub.emplace("alpha" + std::to_string(k), MultiPoly::variable(target, "beta" + std::to_string(k)));
    for (unsigned k = 1; k <= m; ++k)
        sub.emplace("beta" + std::to_string(k), MultiPoly::variable(target, "alpha" + std::to_string(k)));
    return p.substitute(sub, target);
}

}  // namespace

TEST(Poisson, TableOrder) {
    EXPECT_EQ(poisson_table(2, 1).names(),
              (std::vector<std::string>{"a0", "a1", "a2", "b0", "b1", "alpha1", "alpha2", "beta1"}));
}

TEST(Poisson, LinearCaseByHand) {
    VarTable v = poisson_table(1, 1);
    EXPECT_EQ(symbolic_resultant(1, 1), parse_multipoly("a0*b1 - a1*b0", v));
    EXPECT_EQ(poisson_q(1, 1, PoissonKind::a), parse_multipoly("a0*b0*alpha1 + a0*b1", v));
    EXPECT_EQ(poisson_q(1, 1, PoissonKind::b), parse_multipoly("-b0*a0*beta1 - b0*a1", v));
    EXPECT_EQ(poisson_q(1, 1, PoissonKind::ab), parse_multipoly("a0*b0*alpha1 - a0*b0*beta1", v));
}

TEST(Poisson, VieteSubstitutionImages) {
    VarTable v = poisson_table(2, 1);
    auto va = viete_substitution(Side::A, 2, v);
    EXPECT_EQ(va.map.at("a1"), parse_multipoly("-a0*alpha1 - a0*alpha2", v));
    EXPECT_EQ(va.map.at("a2"), parse_multipoly("a0*alpha1*alpha2", v));
    EXPECT_EQ(va.map.count("a0"), 0u);
}

TEST(Poisson, SmallCasesHold) {
    for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 2}, {3, 2}}) {
        PoissonReport r = poisson_verify(m, n);
        EXPECT_TRUE(r.a) << m << "," << n;
        EXPECT_TRUE(r.b) << m << "," << n;
        EXPECT_TRUE(r.ab) << m << "," << n;
    }
}

TEST(Poisson, DetectsWrongSign) {
    // flipping Q_b's sign convention must break the identity when mn is odd
    VarTable vars = poisson_table(1, 1);
    MultiPoly res = symbolic_resultant(1, 1);
    auto vb = viete_substitution(Side::B, 1, vars);
    EXPECT_NE(viete_apply(res, {vb}), -poisson_q(1, 1, PoissonKind::b));
}

TEST(Poisson, ScaleCap) {
    EXPECT_THROW(poisson_verify(4, 4), ScaleCapExceeded);
    EXPECT_THROW(poisson_verify(0, 2), DomainError);
}

TEST(PoissonProperty, AllSmallDegreesHold) {
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned n = 1; m + n <= 6; ++n) EXPECT_TRUE(poisson_verify(m, n).all()) << m << "," << n;
}

TEST(PoissonProperty, RootProductSwapSign) {
    for (unsigned m = 1; m <= 5; ++m) {
        for (unsigned n = 1; m + n <= 6; ++n) {
            MultiPoly swapped = swap_roles(poisson_q(n, m, PoissonKind::ab), m, n);
            MultiPoly q = poisson_q(m, n, PoissonKind::ab);
            EXPECT_EQ(swapped, (m * n) % 2 == 0 ? q : -q) << m << "," << n;
        }
    }
}

TEST(PoissonProperty, SymbolicResultantSwapSign) {
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned n = 1; m + n <= 6; ++n) {
            MultiPoly swapped = swap_roles(symbolic_resultant(n, m), m, n);
            MultiPoly r = symbolic_resultant(m, n);
            EXPECT_EQ(swapped, (m * n) % 2 == 0 ? r : -r) << m << "," << n;
        }
    }
}
