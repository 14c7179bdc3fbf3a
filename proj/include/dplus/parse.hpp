#pragma once

// Polynomial input syntax, whitespace-insensitive:
//
//   csv      := rational { "," rational }              descending coefficients, "1,-5,7,-3"
//   poly     := [sign] term { sign term }              "x^3-5x^2+7x-3", "3/2*x^2 - x + 1/4"
//   term     := rational ["*"] "x" ["^" digits] | "x" ["^" digits] | rational
//   rational := digits ["/" digits]
//
// A string without "x" and without "," is a single constant.

#include "dplus/errors.hpp"
#include "dplus/rational.hpp"
#include "dplus/multipoly.hpp"
#include "dplus/unipoly.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dplus {

namespace detail {

inline std::string strip_spaces(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

class TermParser {
public:
    explicit TermParser(std::string s) : s_(std::move(s)) {}

    UniPoly parse() {
        if (s_.empty()) throw ParseError("empty polynomial");
        std::map<std::size_t, Rational> by_power;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                throw ParseError("expected '+' or '-' at position " + std::to_string(pos_));
            }
            first = false;
            auto [coeff, power] = term();
            by_power[power] += sign > 0 ? coeff : -coeff;
        }
        std::size_t top = by_power.rbegin()->first;
        std::vector<Rational> coeffs(top + 1);
        for (const auto& [power, c] : by_power) coeffs[top - power] = c;
        return UniPoly(std::move(coeffs));
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    std::string digits() {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
        return d;
    }

    std::pair<Rational, std::size_t> term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            std::string den = "1";
            if (peek() == '/') {
                get();
                den = digits();
                if (den.empty()) throw ParseError("missing denominator at position " + std::to_string(pos_));
                if (Integer(den) == 0) throw ParseError("zero denominator");
            }
            coeff = Rational(Integer(num), Integer(den));
            have_coeff = true;
            if (peek() == '*') {
                get();
                if (peek() != 'x') throw ParseError("expected 'x' after '*' at position " + std::to_string(pos_));
            }
        }
        if (peek() != 'x') {
            if (!have_coeff) throw ParseError("expected a coefficient or 'x' at position " + std::to_string(pos_));
            return {coeff, 0};
        }
        get();
        std::size_t power = 1;
        if (peek() == '^') {
            get();
            std::string e = digits();
            if (e.empty() || e.size() > 4) throw ParseError("bad exponent at position " + std::to_string(pos_));
            power = std::stoul(e);
        }
        return {coeff, power};
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads the canonical multivariate serialization back, e.g. "4*z1^3 - 18*z1*z2 + 54*z3".
/// Terms may appear in any order; every identifier must be in `vars`.
inline MultiPoly parse_multipoly(std::string_view text, const VarTable& vars) {
    std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty polynomial");
    std::size_t pos = 0;
    auto peek = [&] { return pos < s.size() ? s[pos] : '\0'; };
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    auto is_alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
    auto digits = [&] {
        std::string d;
        while (is_digit(peek())) d.push_back(s[pos++]);
        return d;
    };
    std::vector<Term> terms;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = s[pos++] == '-';
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(pos));
        }
        first = false;
        Term t{Monomial{}, Rational(1)};
        bool need_factor = true;
        if (is_digit(peek())) {
            std::string num = digits(), den = "1";
            if (peek() == '/') {
                ++pos;
                den = digits();
                if (den.empty() || Integer(den) == 0) throw ParseError("bad denominator");
            }
            t.coeff = Rational(Integer(num), Integer(den));
            need_factor = false;
            if (peek() == '*') {
                ++pos;
                need_factor = true;
            }
        }
        while (need_factor || is_alpha(peek())) {
            if (!is_alpha(peek())) throw ParseError("expected an indeterminate at position " + std::to_string(pos));
            std::string name;
            while (is_alpha(peek()) || is_digit(peek())) name.push_back(s[pos++]);
            auto idx = vars.find(name);
            if (!idx) throw ParseError("unknown indeterminate " + name);
            unsigned e = 1;
            if (peek() == '^') {
                ++pos;
                std::string d = digits();
                if (d.empty() || d.size() > 3) throw ParseError("bad exponent");
                e = static_cast<unsigned>(std::stoul(d));
            }
            t.monomial.set_exponent(*idx, t.monomial.exponent(*idx) + e);
            need_factor = false;
            if (peek() == '*') {
                ++pos;
                need_factor = true;
            }
        }
        if (negative) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
    }
    return MultiPoly::from_terms(vars, std::move(terms));
}

inline UniPoly parse_polynomial(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty polynomial");
    if (s.find('x') == std::string::npos) {
        std::vector<Rational> coeffs;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = s.find(',', start);
            std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                coeffs.push_back(Rational::parse(tok));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return UniPoly(std::move(coeffs));
    }
    if (s.find(',') != std::string::npos) throw ParseError("mixed coefficient list and monomial syntax");
    return detail::TermParser(std::move(s)).parse();
}

}  // namespace dplus
