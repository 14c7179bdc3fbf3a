#pragma once

// Dense univariate polynomials over Q, coefficients stored by descending power.

#include "dplus/errors.hpp"
#include "dplus/rational.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dplus {

class UniPoly {
public:
    UniPoly() = default;
    /// coeffs[0] is the leading coefficient; leading zeros are stripped.
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static UniPoly constant(const Rational& v) { return UniPoly({v}); }
    /// x - root
    static UniPoly linear(const Rational& root) { return UniPoly({Rational(1), -root}); }

    bool is_zero() const { return c_.empty(); }
    /// nullopt for the zero polynomial (degree -infinity).
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const {
        if (c_.empty()) throw DomainError("degree of the zero polynomial");
        return c_.size() - 1;
    }
    std::span<const Rational> coeffs() const { return c_; }
    const Rational& leading() const {
        if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
        return c_.front();
    }
    /// Coefficient of x^k (zero when out of range).
    Rational coeff_of_power(std::size_t k) const {
        if (c_.empty() || k > deg()) return Rational(0);
        return c_[deg() - k];
    }
    bool has_integer_coefficients() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) { return add(a, b, Rational(1)); }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return add(a, b, Rational(-1)); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(out));
    }
    friend UniPoly operator*(const UniPoly& a, const Rational& s) {
        if (s.is_zero()) return {};
        UniPoly r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) { return a * s; }

    UniPoly pow(unsigned e) const {
        UniPoly acc = constant(1), base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return acc;
    }

    /// d/dx; coefficient i of the result is (n-i)*a_i.
    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::size_t n = deg();
        std::vector<Rational> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(c_[i] * Rational(static_cast<long>(n - i)));
        return UniPoly(std::move(out));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc;
        for (const auto& v : c_) {
            acc *= x;
            acc += v;
        }
        return acc;
    }

    /// Euclidean division over Q: returns (quotient, remainder).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw DomainError("division by the zero polynomial");
        if (c_.size() < d.c_.size()) return {UniPoly{}, *this};
        std::vector<Rational> rem = c_;
        std::vector<Rational> quot(c_.size() - d.c_.size() + 1);
        Rational inv = Rational(1) / d.c_[0];
        for (std::size_t i = 0; i < quot.size(); ++i) {
            if (rem[i].is_zero()) continue;
            quot[i] = rem[i] * inv;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= quot[i] * d.c_[j];
        }
        rem.erase(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(quot.size()));
        return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
    }

    UniPoly exact_divide(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw NonExactDivision("non-exact univariate division");
        return q;
    }

    /// lc(d)^(deg a - deg d + 1) * a mod d, computed without fractions when inputs are integral.
    UniPoly pseudo_remainder(const UniPoly& d) const {
        if (d.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
        if (c_.size() < d.c_.size()) return *this;
        std::vector<Rational> rem = c_;
        const Rational& lc = d.c_[0];
        std::size_t steps = c_.size() - d.c_.size() + 1;
        for (std::size_t i = 0; i < steps; ++i) {
            Rational lead = rem[i];
            for (std::size_t k = i; k < rem.size(); ++k) rem[k] *= lc;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= lead * d.c_[j];
        }
        rem.erase(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(steps));
        return UniPoly(std::move(rem));
    }

    /// Positive rational c with this = c * (primitive integer polynomial, positive leading coefficient).
    Rational content() const {
        if (c_.empty()) return Rational(0);
        Integer den_lcm = 1, num_gcd = 0;
        for (const auto& v : c_) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.denominator().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.numerator().get_mpz_t());
        }
        Rational c(num_gcd, den_lcm);
        return c_[0].sign() < 0 ? -c : c;
    }
    UniPoly primitive_part() const {
        if (c_.empty()) return {};
        return *this * (Rational(1) / content());
    }
    UniPoly monic() const {
        if (c_.empty()) return {};
        return *this * (Rational(1) / c_[0]);
    }

    /// "x^3 - 5*x^2 + 7*x - 3"
    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        std::size_t n = deg();
        bool first = true;
        for (std::size_t i = 0; i <= n; ++i) {
            if (c_[i].is_zero()) continue;
            std::size_t e = n - i;
            Rational c = c_[i];
            if (first) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            c = abs(c);
            std::string mono = e == 0 ? "" : e == 1 ? var : var + "^" + std::to_string(e);
            if (mono.empty()) out += c.str();
            else if (c.is_one()) out += mono;
            else out += c.str() + "*" + mono;
            first = false;
        }
        return out;
    }

private:
    static UniPoly add(const UniPoly& a, const UniPoly& b, const Rational& sb) {
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[n - a.c_.size() + i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[n - b.c_.size() + i] += sb * b.c_[i];
        return UniPoly(std::move(out));
    }

    void normalize() {
        auto first = std::find_if(c_.begin(), c_.end(), [](const Rational& r) { return !r.is_zero(); });
        c_.erase(c_.begin(), first);
    }

    std::vector<Rational> c_;
};

/// gcd over Q[x] via the primitive pseudo-remainder sequence; primitive, positive leading coefficient.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        UniPoly r = a.pseudo_remainder(b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.primitive_part();
}

}  // namespace dplus
