#pragma once

#include "exactalg/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace charstack {

// Weakly decreasing sequence of positive integers; empty partition allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const; // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const;

    auto operator<=>(const Partition& o) const = default;

    std::string to_string() const; // "[3,1,1]"

private:
    std::vector<int> parts_;
};

// All partitions of n, each exactly once, in a fixed deterministic order:
// (n) first, then reverse-lexicographically down to (1^n).
std::vector<Partition> partitions_of(int n);

// lambda <= mu in dominance order. Requires |lambda| == |mu|.
bool dominance_leq(const Partition& lambda, const Partition& mu);

struct ArmLeg {
    int arm;
    int leg;
};

// One record per cell of the Young diagram, rows left to right, top to bottom.
std::vector<ArmLeg> arm_leg_cells(const Partition& lambda);

// z_lambda = prod_i i^{m_i} m_i!  (for the power-sum Hall pairing)
Rat z_lambda(const Partition& lambda);

// n(lambda) = sum (i-1) lambda_i
int n_stat(const Partition& lambda);

} // namespace charstack
