#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "schreier/errors.hpp"

namespace schreier {

/// Strictly increasing finite sequence of positive naturals (possibly empty).
class FiniteSet {
public:
    FiniteSet() = default;
    FiniteSet(std::initializer_list<std::uint32_t> xs) : elems_(xs) { validate(); }
    explicit FiniteSet(std::vector<std::uint32_t> xs) : elems_(std::move(xs)) { validate(); }

    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static FiniteSet range(std::uint32_t lo, std::uint32_t hi) {
        std::vector<std::uint32_t> v;
        for (std::uint32_t k = lo; k <= hi; ++k) v.push_back(k);
        return FiniteSet(std::move(v));
    }

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    std::uint32_t operator[](std::size_t i) const { return elems_[i]; }
    std::uint32_t min() const { return elems_.front(); }
    std::uint32_t max() const { return elems_.back(); }
    const std::vector<std::uint32_t>& elements() const { return elems_; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(std::uint32_t k) const {
        return std::binary_search(elems_.begin(), elems_.end(), k);
    }

    FiniteSet prefix(std::size_t r) const {
        return FiniteSet(std::vector<std::uint32_t>(elems_.begin(),
                                                    elems_.begin() + std::min(r, size())));
    }
    /// Elements from index i onward.
    FiniteSet drop(std::size_t i) const {
        return FiniteSet(
            std::vector<std::uint32_t>(elems_.begin() + std::min(i, size()), elems_.end()));
    }

    FiniteSet with(std::uint32_t k) const {
        std::vector<std::uint32_t> v = elems_;
        v.insert(std::upper_bound(v.begin(), v.end(), k), k);
        return FiniteSet(std::move(v));
    }

    bool is_subset_of(const FiniteSet& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(),
                             elems_.end());
    }

    friend FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
        std::vector<std::uint32_t> v;
        std::set_union(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
                       std::back_inserter(v));
        return FiniteSet(std::move(v));
    }

    friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
        return a.elems_ == b.elems_;
    }
    friend bool operator!=(const FiniteSet& a, const FiniteSet& b) { return !(a == b); }
    friend bool operator<(const FiniteSet& a, const FiniteSet& b) { return a.elems_ < b.elems_; }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(elems_[i]);
        }
        return out + "}";
    }

private:
    std::vector<std::uint32_t> elems_;

    void validate() const {
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (elems_[i] < 1) throw DomainError("FiniteSet elements must be >= 1");
            if (i && elems_[i - 1] >= elems_[i])
                throw DomainError("FiniteSet elements must be strictly increasing");
        }
    }
};

/// f is a spread of e: same size and e_i <= f_i componentwise.
inline bool is_spread(const FiniteSet& e, const FiniteSet& f) {
    if (e.size() != f.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > f[i]) return false;
    return true;
}

/// max E < min F (vacuously true when either is empty).
inline bool successive(const FiniteSet& e, const FiniteSet& f) {
    return e.empty() || f.empty() || e.max() < f.min();
}

} // namespace schreier
