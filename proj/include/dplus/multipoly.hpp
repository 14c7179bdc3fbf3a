#pragma once

// Sparse multivariate polynomials over Q with a named, ordered variable table.
//
// Monomials are packed into 32 bytes: byte 0 holds the total degree, byte 1+i
// the exponent of variable i. Lexicographic byte comparison is then exactly the
// graded-lex order with variable 0 largest, which is also the canonical
// serialization order (terms printed from largest to smallest).

#include "dplus/errors.hpp"
#include "dplus/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dplus {

class Monomial {
public:
    static constexpr std::size_t kMaxVars = 31;
    static constexpr unsigned kMaxExponent = 255;

    Monomial() = default;

    unsigned degree() const { return bytes_[0]; }
    unsigned exponent(std::size_t var) const { return bytes_[var + 1]; }
    bool is_unit() const { return bytes_[0] == 0; }

    void set_exponent(std::size_t var, unsigned e) {
        if (var >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
        unsigned deg = degree() - exponent(var) + e;
        if (e > kMaxExponent || deg > kMaxExponent)
            throw std::overflow_error("monomial exponent exceeds 255");
        bytes_[var + 1] = static_cast<std::uint8_t>(e);
        bytes_[0] = static_cast<std::uint8_t>(deg);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        unsigned overflow = 0;
        for (std::size_t i = 0; i < a.bytes_.size(); ++i) {
            unsigned s = unsigned(a.bytes_[i]) + unsigned(b.bytes_[i]);
            overflow |= s;
            r.bytes_[i] = static_cast<std::uint8_t>(s);
        }
        if (overflow > kMaxExponent) throw std::overflow_error("monomial exponent exceeds 255");
        return r;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < bytes_.size(); ++i)
            if (bytes_[i] > other.bytes_[i]) return false;
        return true;
    }

    /// Requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const {
        Monomial r;
        for (std::size_t i = 0; i < bytes_.size(); ++i)
            r.bytes_[i] = static_cast<std::uint8_t>(bytes_[i] - divisor.bytes_[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.bytes_ == b.bytes_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        int c = std::memcmp(a.bytes_.data(), b.bytes_.data(), a.bytes_.size());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::uint64_t w[4];
        std::memcpy(w, bytes_.data(), sizeof w);
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint8_t, 32> bytes_{};
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Ordered list of indeterminate names shared by a family of polynomials.
class VarTable {
public:
    VarTable() : names_(std::make_shared<const std::vector<std::string>>()) {}
    explicit VarTable(std::vector<std::string> names) {
        if (names.size() > Monomial::kMaxVars)
            throw std::invalid_argument("variable table holds at most 31 indeterminates");
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j]) throw std::invalid_argument("duplicate variable " + names[i]);
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    /// Names prefix+first .. prefix+last, e.g. indexed("c", 0, 3) -> c0..c3.
    static std::vector<std::string> indexed(std::string_view prefix, int first, int last) {
        std::vector<std::string> out;
        for (int i = first; i <= last; ++i) out.push_back(std::string(prefix) + std::to_string(i));
        return out;
    }

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return names_->at(i); }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == name) return i;
        return std::nullopt;
    }
    std::size_t index(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw std::invalid_argument("unknown indeterminate " + std::string(name));
    }

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

struct Term {
    Monomial monomial;
    Rational coeff;
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(VarTable vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarTable vars, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static MultiPoly variable(VarTable vars, std::string_view name) {
        std::size_t i = vars.index(name);
        return variable(std::move(vars), i);
    }
    static MultiPoly variable(VarTable vars, std::size_t index) {
        if (index >= vars.size()) throw std::invalid_argument("variable index out of range");
        MultiPoly p(std::move(vars));
        Monomial m;
        m.set_exponent(index, 1);
        p.terms_.push_back({m, Rational(1)});
        return p;
    }
    /// Builds from arbitrary (possibly repeated or zero) terms.
    static MultiPoly from_terms(VarTable vars, std::vector<Term> terms) {
        MultiPoly p(std::move(vars));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
                p.terms_.back().coeff += t.coeff;
            else
                p.terms_.push_back(std::move(t));
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        }
        return p;
    }

    const VarTable& vars() const { return vars_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_unit()); }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_[0].coeff;
    }
    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
        return terms_.front();
    }

    /// Total degree; nullopt stands for the -infinity degree of the zero polynomial.
    std::optional<unsigned> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.front().monomial.degree();
    }
    std::optional<unsigned> degree_in(std::string_view var) const {
        std::size_t v = vars_.index(var);
        if (terms_.empty()) return std::nullopt;
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
        return d;
    }
    bool uses(std::string_view var) const {
        auto v = vars_.find(var);
        if (!v) return false;
        for (const auto& t : terms_)
            if (t.monomial.exponent(*v)) return true;
        return false;
    }
    bool has_integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_integer(); });
    }
    bool is_homogeneous() const {
        return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
            return t.monomial.degree() == terms_.front().monomial.degree();
        });
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, true); }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_compatible(a, b);
        if (a.is_zero() || b.is_zero()) return MultiPoly(a.vars_);
        if (a.terms_.size() == 1) return b.mul_term(a.terms_[0]);
        if (b.terms_.size() == 1) return a.mul_term(b.terms_[0]);
        const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
        const MultiPoly& large = &small == &a ? b : a;
        // Johnson's heap merge: one cursor per term of the shorter factor, products emitted in order.
        std::vector<HeapEntry> heap;
        heap.reserve(small.terms_.size());
        for (std::uint32_t i = 0; i < small.terms_.size(); ++i)
            heap.push_back({small.terms_[i].monomial * large.terms_[0].monomial, i, 0});
        std::make_heap(heap.begin(), heap.end());
        MultiPoly r(a.vars_);
        while (!heap.empty()) {
            std::pop_heap(heap.begin(), heap.end());
            HeapEntry e = heap.back();
            heap.pop_back();
            if (r.terms_.empty() || r.terms_.back().monomial != e.monomial) {
                if (!r.terms_.empty() && r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
                r.terms_.push_back({e.monomial, Rational(0)});
            }
            r.terms_.back().coeff.add_product(small.terms_[e.i].coeff, large.terms_[e.j].coeff);
            if (e.j + 1 < large.terms_.size()) {
                heap.push_back({small.terms_[e.i].monomial * large.terms_[e.j + 1].monomial, e.i, e.j + 1});
                std::push_heap(heap.begin(), heap.end());
            }
        }
        if (!r.terms_.empty() && r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator*(const MultiPoly& a, const Rational& c) {
        if (c.is_zero()) return MultiPoly(a.vars_);
        MultiPoly r = a;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }

    MultiPoly pow(unsigned e) const {
        MultiPoly acc = constant(vars_, 1), base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return acc;
    }

    MultiPoly partial_derivative(std::string_view var) const {
        std::size_t v = vars_.index(var);
        std::vector<Term> out;
        for (const auto& t : terms_) {
            unsigned e = t.monomial.exponent(v);
            if (e == 0) continue;
            Term d{t.monomial, t.coeff * Rational(static_cast<long>(e))};
            d.monomial.set_exponent(v, e - 1);
            out.push_back(std::move(d));
        }
        // Lowering one exponent by one preserves relative grlex order among the survivors.
        MultiPoly r(vars_);
        r.terms_ = std::move(out);
        return r;
    }

    /// Exact quotient p/q; throws NonExactDivision when q does not divide p.
    MultiPoly exact_divide(const MultiPoly& q) const {
        check_compatible(*this, q);
        if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
        if (is_zero()) return MultiPoly(vars_);
        if (q.is_constant()) return *this * (Rational(1) / q.terms_[0].coeff);
        const Term& lead = q.terms_.front();
        if (q.terms_.size() == 1) {
            MultiPoly r(vars_);
            r.terms_.reserve(terms_.size());
            for (const auto& t : terms_) {
                if (!lead.monomial.divides(t.monomial)) throw NonExactDivision();
                r.terms_.push_back({t.monomial / lead.monomial, t.coeff / lead.coeff});
            }
            return r;
        }
        // Heap division: the heap holds pending products quotient[k] * q[j], j >= 1.
        std::vector<HeapEntry> heap;
        MultiPoly quot(vars_);
        std::size_t next = 0;
        Rational c;
        while (true) {
            Monomial m;
            bool from_self = next < terms_.size() && (heap.empty() || !(terms_[next].monomial < heap.front().monomial));
            if (from_self) m = terms_[next].monomial;
            else if (!heap.empty()) m = heap.front().monomial;
            else break;
            c = Rational(0);
            if (next < terms_.size() && terms_[next].monomial == m) c += terms_[next++].coeff;
            while (!heap.empty() && heap.front().monomial == m) {
                std::pop_heap(heap.begin(), heap.end());
                HeapEntry e = heap.back();
                heap.pop_back();
                c.add_product(quot.terms_[e.i].coeff, q.terms_[e.j].coeff, true);
                if (e.j + 1 < q.terms_.size()) {
                    heap.push_back({quot.terms_[e.i].monomial * q.terms_[e.j + 1].monomial, e.i, e.j + 1});
                    std::push_heap(heap.begin(), heap.end());
                }
            }
            if (c.is_zero()) continue;
            if (!lead.monomial.divides(m)) throw NonExactDivision();
            quot.terms_.push_back({m / lead.monomial, c / lead.coeff});
            auto k = static_cast<std::uint32_t>(quot.terms_.size() - 1);
            heap.push_back({quot.terms_[k].monomial * q.terms_[1].monomial, k, 1});
            std::push_heap(heap.begin(), heap.end());
        }
        return quot;
    }

    /// Simultaneous substitution. Every image must live over `target`; variables
    /// of this polynomial that are not assigned must exist in `target` by name.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment, const VarTable& target) const {
        for (const auto& [name, image] : assignment) {
            vars_.index(name);
            if (!(image.vars() == target))
                throw std::invalid_argument("substitution image for " + name + " has a foreign variable table");
        }
        std::vector<MultiPoly> images;
        images.reserve(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = assignment.find(vars_.name(i));
            if (it != assignment.end()) {
                images.push_back(it->second);
            } else if (uses(vars_.name(i))) {
                images.push_back(variable(target, vars_.name(i)));
            } else {
                images.push_back(MultiPoly(target));
            }
        }
        // powers[i][e] = images[i]^e, filled lazily
        std::vector<std::vector<MultiPoly>> powers(vars_.size());
        auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(target, 1));
            while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
            return cache[e];
        };
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (const auto& t : terms_) {
            MultiPoly prod = constant(target, t.coeff);
            for (std::size_t i = 0; i < vars_.size() && !prod.is_zero(); ++i) {
                unsigned e = t.monomial.exponent(i);
                if (e) prod = prod * power(i, e);
            }
            for (const auto& pt : prod.terms_) acc[pt.monomial] += pt.coeff;
        }
        return from_map(target, acc);
    }
    MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const {
        return substitute(assignment, vars_);
    }

    /// Exact value at a point given as name -> value; every used variable must be assigned.
    Rational evaluate(const std::map<std::string, Rational>& point) const {
        std::vector<std::optional<Rational>> values(vars_.size());
        for (const auto& [name, value] : point) {
            if (auto i = vars_.find(name)) values[*i] = value;
        }
        std::vector<Rational> dense(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (values[i]) {
                dense[i] = *values[i];
            } else if (uses(vars_.name(i))) {
                throw std::invalid_argument("no value assigned to " + vars_.name(i));
            }
        }
        return evaluate(dense);
    }

    /// Exact value at a point aligned with the variable table.
    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong arity");
        std::vector<std::vector<Rational>> powers(vars_.size());
        auto power = [&](std::size_t i, unsigned e) -> const Rational& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(Rational(1));
            while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
            return cache[e];
        };
        Rational sum, prod;
        for (const auto& t : terms_) {
            prod = t.coeff;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                unsigned e = t.monomial.exponent(i);
                if (e) prod *= power(i, e);
            }
            sum += prod;
        }
        return sum;
    }

    /// Same polynomial over another table; every used variable must exist there by name.
    MultiPoly rebase(const VarTable& target) const {
        if (target == vars_) return *this;
        std::vector<std::size_t> map(vars_.size(), Monomial::kMaxVars);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (auto j = target.find(vars_.name(i))) map[i] = *j;
        }
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                unsigned e = t.monomial.exponent(i);
                if (!e) continue;
                if (map[i] == Monomial::kMaxVars)
                    throw std::invalid_argument("variable " + vars_.name(i) + " missing from target table");
                m.set_exponent(map[i], e);
            }
            out.push_back({m, t.coeff});
        }
        return from_terms(target, std::move(out));
    }

    /// Canonical text form, e.g. "4*z1^3 - 18*z1*z2 + 54*z3"; zero prints as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            if (first) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            c = abs(c);
            std::string mono;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                unsigned e = t.monomial.exponent(i);
                if (!e) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_.name(i);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                out += c.str();
            } else if (c.is_one()) {
                out += mono;
            } else {
                out += c.str() + "*" + mono;
            }
            first = false;
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

private:
    struct HeapEntry {
        Monomial monomial;
        std::uint32_t i, j;
        friend bool operator<(const HeapEntry& x, const HeapEntry& y) { return x.monomial < y.monomial; }
    };

    static void check_compatible(const MultiPoly& a, const MultiPoly& b) {
        if (!(a.vars_ == b.vars_)) throw std::invalid_argument("polynomials over different variable tables");
    }

    static MultiPoly from_map(const VarTable& vars, std::unordered_map<Monomial, Rational, MonomialHash>& acc) {
        MultiPoly r(vars);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return x.monomial > y.monomial; });
        return r;
    }

    static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
        check_compatible(a, b);
        MultiPoly r(a.vars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].monomial > b.terms_[j].monomial)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].monomial > a.terms_[i].monomial) {
                r.terms_.push_back(b.terms_[j++]);
                if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
            } else {
                Rational c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    MultiPoly mul_term(const Term& s) const {
        MultiPoly r(vars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.monomial * s.monomial, t.coeff * s.coeff});
        return r;
    }

    VarTable vars_;
    std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coefficients
};

/// e_k over the named variables of `vars`; e_0 = 1.
inline MultiPoly elementary_symmetric(std::size_t k, const std::vector<std::string>& names, const VarTable& vars) {
    if (k > names.size()) throw std::out_of_range("elementary symmetric index exceeds variable count");
    // e[j] holds e_j of the variables seen so far
    std::vector<MultiPoly> e(k + 1, MultiPoly(vars));
    e[0] = MultiPoly::constant(vars, 1);
    for (const auto& name : names) {
        MultiPoly x = MultiPoly::variable(vars, name);
        for (std::size_t j = k; j >= 1; --j) e[j] += x * e[j - 1];
    }
    return e[k];
}

}  // namespace dplus
