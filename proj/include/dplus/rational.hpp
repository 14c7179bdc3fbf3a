#pragma once

// Exact scalars: arbitrary-precision integers and rationals on top of GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dplus {

static_assert(sizeof(long) == sizeof(long long), "LP64 data model expected");

using Integer = mpz_class;

/// Reduced fraction num/den with den >= 1. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '\t') s.push_back(c);
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        auto slash = s.find('/');
        auto valid_int = [](std::string_view t, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto to_int = [](std::string t) {
            if (!t.empty() && t[0] == '+') t.erase(0, 1);
            return Integer(t);
        };
        if (slash == std::string::npos) {
            if (!valid_int(s, true)) throw std::invalid_argument("bad rational literal: " + s);
            return Rational(to_int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw std::invalid_argument("bad rational literal: " + s);
        Integer d = to_int(den);
        if (d == 0) throw std::invalid_argument("zero denominator in literal: " + s);
        return Rational(to_int(num), d);
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    const mpq_class& raw() const { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }
    /// this += a*b (or -= when subtract), with an allocation-free path for integers.
    void add_product(const Rational& a, const Rational& b, bool subtract = false) {
        if (is_integer() && a.is_integer() && b.is_integer()) {
            auto* acc = mpq_numref(q_.get_mpq_t());
            const auto* x = mpq_numref(a.q_.get_mpq_t());
            const auto* y = mpq_numref(b.q_.get_mpq_t());
            if (subtract) mpz_submul(acc, x, y);
            else mpz_addmul(acc, x, y);
            return;
        }
        mpq_class t = a.q_ * b.q_;
        if (subtract) q_ -= t;
        else q_ += t;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(Rational base, unsigned exp) {
    Rational acc(1);
    while (exp) {
        if (exp & 1u) acc *= base;
        exp >>= 1u;
        if (exp) base *= base;
    }
    return acc;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Number of bits in |v|; zero has bit length 0.
inline std::size_t bit_length(const Integer& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace dplus
