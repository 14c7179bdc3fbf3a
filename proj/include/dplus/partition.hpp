#pragma once

#include "dplus/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace dplus {

/// Non-increasing list of positive multiplicities mu_1 >= ... >= mu_m >= 1.
class MultiplicityVector {
public:
    MultiplicityVector() = default;
    explicit MultiplicityVector(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw DomainError("multiplicity vector needs at least one part");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0) throw DomainError("multiplicities must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("multiplicities must be non-increasing");
        }
    }
    MultiplicityVector(std::initializer_list<unsigned> parts) : MultiplicityVector(std::vector<unsigned>(parts)) {}

    /// Sorts arbitrary positive multiplicities into canonical order.
    static MultiplicityVector from_unsorted(std::vector<unsigned> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return MultiplicityVector(std::move(parts));
    }

    /// Parses "2,1" or "(2,1)".
    static MultiplicityVector parse(std::string_view text) {
        std::vector<unsigned> parts;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) throw ParseError("empty multiplicity in list");
            if (cur.size() > 6) throw ParseError("multiplicity too large: " + cur);
            parts.push_back(static_cast<unsigned>(std::stoul(cur)));
            cur.clear();
        };
        for (char c : text) {
            if (c == ' ' || c == '(' || c == ')') continue;
            if (c == ',') flush();
            else if (c >= '0' && c <= '9') cur.push_back(c);
            else throw ParseError(std::string("unexpected character in multiplicity list: ") + c);
        }
        flush();
        return MultiplicityVector(std::move(parts));
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned operator[](std::size_t i) const { return parts_.at(i); }
    unsigned m() const { return static_cast<unsigned>(parts_.size()); }
    unsigned n() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
    bool all_equal() const {
        return std::all_of(parts_.begin(), parts_.end(), [&](unsigned p) { return p == parts_.front(); });
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

private:
    std::vector<unsigned> parts_;
};

/// All partitions of n into exactly m parts, non-increasing, in reverse-lexicographic order.
inline std::vector<MultiplicityVector> partitions(unsigned n, unsigned m) {
    std::vector<MultiplicityVector> out;
    if (m == 0 || m > n) return out;
    std::vector<unsigned> cur;
    // place parts left to right, each at most the previous one
    auto rec = [&](auto&& self, unsigned remaining, unsigned slots, unsigned cap) -> void {
        if (slots == 0) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        unsigned hi = std::min(cap, remaining - (slots - 1));
        unsigned lo = (remaining + slots - 1) / slots;
        for (unsigned p = hi; p >= lo && p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, slots - 1, p);
            cur.pop_back();
        }
    };
    rec(rec, n, m, n);
    return out;
}

}  // namespace dplus
