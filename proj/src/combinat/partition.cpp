#include "combinat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charstack {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[j]++;
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << "]";
    return out.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n >= 0 required");
    std::vector<Partition> result;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            result.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return result;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("dominance_leq: partitions must have equal size");
    int la = 0, mb = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        la += lambda.part(i);
        mb += mu.part(i);
        if (la > mb) return false;
    }
    return true;
}

std::vector<ArmLeg> arm_leg_cells(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    std::vector<ArmLeg> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            cells.push_back({lambda.part(i) - j - 1, conj.part(j) - i - 1});
    return cells;
}

Rat z_lambda(const Partition& lambda) {
    Rat z = 1;
    int run = 0;
    int prev = 0;
    auto flush = [&]() {
        for (int i = 1; i <= run; ++i) z *= i; // m!
    };
    for (int p : lambda.parts()) {
        z *= p;
        if (p == prev) {
            ++run;
        } else {
            flush();
            prev = p;
            run = 1;
        }
    }
    flush();
    return z;
}

int n_stat(const Partition& lambda) {
    int s = 0;
    for (int i = 0; i < lambda.length(); ++i) s += i * lambda.part(i);
    return s;
}

} // namespace charstack
