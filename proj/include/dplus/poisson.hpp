#pragma once

// Symbolic Poisson formula for res(A, B), A = sum a_i x^(m-i), B = sum b_j x^(n-j),
// with symbolic roots alpha_1..alpha_m of A and beta_1..beta_n of B. Membership of
// res(A,B) - Q_k in the Viete ideal is witnessed by substituting the Viete
// relations a_i -> (-1)^i e_i(alpha) a_0 (resp. b_j) and comparing literally.

#include "dplus/errors.hpp"
#include "dplus/multipoly.hpp"
#include "dplus/resultant.hpp"

#include <map>
#include <string>
#include <vector>

namespace dplus {

inline constexpr unsigned kPoissonScaleCap = 7;

enum class PoissonKind { a, b, ab };
enum class Side { A, B };

/// a0..am, b0..bn, alpha1..alpham, beta1..betan
inline VarTable poisson_table(unsigned m, unsigned n) {
    std::vector<std::string> names = VarTable::indexed("a", 0, static_cast<int>(m));
    for (auto& s : VarTable::indexed("b", 0, static_cast<int>(n))) names.push_back(s);
    for (auto& s : VarTable::indexed("alpha", 1, static_cast<int>(m))) names.push_back(s);
    for (auto& s : VarTable::indexed("beta", 1, static_cast<int>(n))) names.push_back(s);
    return VarTable(std::move(names));
}

inline std::vector<MultiPoly> symbolic_coeffs(const VarTable& vars, const std::string& prefix, unsigned degree) {
    std::vector<MultiPoly> out;
    for (unsigned i = 0; i <= degree; ++i) out.push_back(MultiPoly::variable(vars, prefix + std::to_string(i)));
    return out;
}

/// Evaluates sum coeffs[i] x^(d-i) at a polynomial x (Horner).
inline MultiPoly horner(const std::vector<MultiPoly>& coeffs, const MultiPoly& x) {
    MultiPoly acc(x.vars());
    for (const auto& c : coeffs) acc = acc * x + c;
    return acc;
}

inline MultiPoly poisson_q(unsigned m, unsigned n, PoissonKind kind) {
    if (m < 1 || n < 1) throw DomainError("Poisson expressions need m, n >= 1");
    VarTable vars = poisson_table(m, n);
    auto a = symbolic_coeffs(vars, "a", m), b = symbolic_coeffs(vars, "b", n);
    MultiPoly prod = MultiPoly::constant(vars, 1);
    switch (kind) {
    case PoissonKind::a:
        prod = a[0].pow(n);
        for (unsigned i = 1; i <= m; ++i) prod *= horner(b, MultiPoly::variable(vars, "alpha" + std::to_string(i)));
        break;
    case PoissonKind::b:
        prod = b[0].pow(m);
        if ((m * n) % 2 == 1) prod = -prod;
        for (unsigned j = 1; j <= n; ++j) prod *= horner(a, MultiPoly::variable(vars, "beta" + std::to_string(j)));
        break;
    case PoissonKind::ab:
        prod = a[0].pow(n) * b[0].pow(m);
        for (unsigned i = 1; i <= m; ++i) {
            MultiPoly alpha = MultiPoly::variable(vars, "alpha" + std::to_string(i));
            for (unsigned j = 1; j <= n; ++j) prod *= alpha - MultiPoly::variable(vars, "beta" + std::to_string(j));
        }
        break;
    }
    return prod;
}

/// Viete relations for one side: coefficient k (k = 1..degree) -> (-1)^k e_k(roots) * leading.
struct VieteSubstitution {
    Side side;
    unsigned degree;
    std::map<std::string, MultiPoly> map;
};

inline VieteSubstitution viete_substitution(Side side, unsigned degree, const VarTable& vars) {
    std::string coeff = side == Side::A ? "a" : "b";
    std::string root = side == Side::A ? "alpha" : "beta";
    std::vector<std::string> roots = VarTable::indexed(root, 1, static_cast<int>(degree));
    MultiPoly lead = MultiPoly::variable(vars, coeff + "0");
    VieteSubstitution sub{side, degree, {}};
    for (unsigned k = 1; k <= degree; ++k) {
        MultiPoly image = elementary_symmetric(k, roots, vars) * lead;
        sub.map.emplace(coeff + std::to_string(k), k % 2 == 0 ? image : -image);
    }
    return sub;
}

inline MultiPoly viete_apply(const MultiPoly& p, const std::vector<VieteSubstitution>& subs) {
    std::map<std::string, MultiPoly> all;
    for (const auto& s : subs)
        for (const auto& [k, v] : s.map) all.emplace(k, v.rebase(p.vars()));
    return p.substitute(all);
}

/// res(A, B) for symbolic A of degree m and B of degree n, over poisson_table(m, n).
inline MultiPoly symbolic_resultant(unsigned m, unsigned n) {
    VarTable vars = poisson_table(m, n);
    return resultant(symbolic_coeffs(vars, "a", m), symbolic_coeffs(vars, "b", n));
}

struct PoissonReport {
    unsigned m, n;
    bool a, b, ab;
    bool all() const { return a && b && ab; }
};

inline PoissonReport poisson_verify(unsigned m, unsigned n, unsigned cap = kPoissonScaleCap) {
    if (m < 1 || n < 1) throw DomainError("Poisson check needs m, n >= 1");
    if (m + n > cap)
        throw ScaleCapExceeded("m + n = " + std::to_string(m + n) + " exceeds the Poisson scale cap " +
                               std::to_string(cap));
    VarTable vars = poisson_table(m, n);
    MultiPoly res = symbolic_resultant(m, n);
    auto va = viete_substitution(Side::A, m, vars), vb = viete_substitution(Side::B, n, vars);
    return PoissonReport{m, n,
                         viete_apply(res, {va}) == poisson_q(m, n, PoissonKind::a),
                         viete_apply(res, {vb}) == poisson_q(m, n, PoissonKind::b),
                         viete_apply(res, {va, vb}) == poisson_q(m, n, PoissonKind::ab)};
}

}  // namespace dplus
