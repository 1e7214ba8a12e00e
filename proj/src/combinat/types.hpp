#pragma once

#include "combinat/partition.hpp"

#include <string>
#include <vector>

namespace charstack {

// One entry of a type: degree d, nonempty partition, multiplicity m >= 1.
struct TypeEntry {
    int d = 1;
    Partition lambda;
    int mult = 1;
    auto operator<=>(const TypeEntry& o) const = default;
};

// A type: finite multiset of (d, lambda) with multiplicities, stored as a
// sorted association list for deterministic iteration.
class TypeT {
public:
    TypeT() = default;
    explicit TypeT(std::vector<TypeEntry> entries);

    const std::vector<TypeEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int size() const; // sum m * d * |lambda|
    bool is_split() const; // all d == 1

    TypeT dual() const; // conjugate every partition
    TypeT psi(int d) const; // multiply every degree by d
    // Divide all multiplicities by r; throws if r does not divide one of them.
    TypeT divide(int r) const;

    auto operator<=>(const TypeT& o) const = default;

    // "{(d,[l1,l2,...])^m, ...}"
    std::string to_string() const;
    static TypeT parse(const std::string& text);

private:
    std::vector<TypeEntry> entries_;
};

// Ordered sequence of types of equal size.
class MultiType {
public:
    MultiType() = default;
    explicit MultiType(std::vector<TypeT> components);

    const std::vector<TypeT>& components() const { return components_; }
    int k() const { return static_cast<int>(components_.size()); }
    int n() const; // common size

    MultiType dual() const;

    auto operator<=>(const MultiType& o) const = default;
    std::string to_string() const;

private:
    std::vector<TypeT> components_;
};

// Exponent of (-1) in the kernel prefactor: r = k|w| + sum_{i,j} m_j |w_i^j|.
int r_sign(const MultiType& w);

// (psi_{r_1}(w_1/r_1), ..., psi_{r_k}(w_k/r_k)); sizes are preserved.
MultiType omega_r(const MultiType& w, const std::vector<int>& r);

} // namespace charstack
