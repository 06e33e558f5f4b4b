#pragma once

#include <map>

#include "schreier/finite_set.hpp"
#include "schreier/rational.hpp"

namespace schreier {

/// Finitely supported vector: coordinate (positive natural) -> exact rational.
/// Zero entries are never stored.
class SparseVector {
public:
    SparseVector() = default;

    static SparseVector basis(std::uint32_t i) {
        SparseVector v;
        v.set(i, Rat(1));
        return v;
    }

    void set(std::uint32_t coord, const Rat& value) {
        if (coord < 1) throw DomainError("coordinates start at 1");
        if (value == 0)
            entries_.erase(coord);
        else
            entries_[coord] = value;
    }

    Rat at(std::uint32_t coord) const {
        auto it = entries_.find(coord);
        return it == entries_.end() ? Rat(0) : it->second;
    }

    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    const std::map<std::uint32_t, Rat>& entries() const { return entries_; }

    FiniteSet support() const {
        std::vector<std::uint32_t> v;
        v.reserve(entries_.size());
        for (const auto& [k, q] : entries_) v.push_back(k);
        return FiniteSet(std::move(v));
    }

    SparseVector restrict_to(const FiniteSet& e) const {
        SparseVector out;
        for (std::uint32_t k : e) {
            auto it = entries_.find(k);
            if (it != entries_.end()) out.entries_[k] = it->second;
        }
        return out;
    }

    /// sum of |x_i| over i in e
    Rat abs_mass(const FiniteSet& e) const {
        Rat m(0);
        for (std::uint32_t k : e) {
            auto it = entries_.find(k);
            if (it != entries_.end()) m += rat_abs(it->second);
        }
        return m;
    }

    Rat l1() const {
        Rat m(0);
        for (const auto& [k, q] : entries_) m += rat_abs(q);
        return m;
    }

    Rat linf() const {
        Rat m(0);
        for (const auto& [k, q] : entries_)
            if (rat_abs(q) > m) m = rat_abs(q);
        return m;
    }

    SparseVector abs() const {
        SparseVector out;
        for (const auto& [k, q] : entries_) out.entries_[k] = rat_abs(q);
        return out;
    }

    SparseVector& add_scaled(const Rat& c, const SparseVector& v) {
        for (const auto& [k, q] : v.entries_) {
            Rat nv = at(k) + c * q;
            set(k, nv);
        }
        return *this;
    }

    /// functional application: sum_i this_i * x_i
    Rat dot(const SparseVector& x) const {
        Rat s(0);
        for (const auto& [k, q] : entries_) s += q * x.at(k);
        return s;
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<std::uint32_t, Rat> entries_;
};

} // namespace schreier
