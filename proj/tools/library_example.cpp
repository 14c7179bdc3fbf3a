// Minimal library use: D+ of (x-1)^2 (x-3) from its coefficients and from its roots.

#include "dplus/dplus.hpp"
#include "dplus/parse.hpp"

#include <iostream>

int main() {
    using namespace dplus;
    UniPoly p = parse_polynomial("x^3 - 5x^2 + 7x - 3");
    DPlusReport rep = dplus_from_coeffs(p);
    std::cout << "mu = " << rep.mu.str() << ", D+ = " << rep.value << "\n";
    std::cout << "H = " << *rep.gist->h << ", C_mu = " << rep.gist->c_mu.get_str() << "\n";

    std::vector<Rational> roots{Rational(1), Rational(3)};
    std::cout << "from roots: " << dplus_from_roots(rep.mu, roots) << "\n";
}
