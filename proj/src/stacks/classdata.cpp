#include "stacks/classdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace charstack {

ClassDatum ClassDatum::make(int n, long modulus,
                            std::vector<std::pair<long, Partition>> eigen) {
    ClassDatum c;
    c.n = n;
    c.modulus = modulus;
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    for (auto& [e, lam] : eigen) {
        e %= modulus;
        if (e < 0) e += modulus;
        if (lam.empty()) throw std::invalid_argument("eigenvalue with empty partition");
    }
    std::sort(eigen.begin(), eigen.end());
    for (size_t i = 1; i < eigen.size(); ++i)
        if (eigen[i].first == eigen[i - 1].first)
            throw std::invalid_argument("eigenvalue exponents must be distinct");
    int total = 0;
    for (const auto& [e, lam] : eigen) total += lam.size();
    if (total != n) throw std::invalid_argument("partition sizes must sum to n");
    c.eigen = std::move(eigen);
    return c;
}

std::string ClassDatum::to_string() const {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < eigen.size(); ++i) {
        if (i) out << ", ";
        out << eigen[i].first << ":" << eigen[i].second.to_string();
    }
    out << "}";
    return out.str();
}

TypeT type_of(const ClassDatum& c) {
    std::map<Partition, int> mult;
    for (const auto& [e, lam] : c.eigen) mult[lam]++;
    std::vector<TypeEntry> entries;
    for (const auto& [lam, m] : mult) entries.push_back({1, lam, m});
    return TypeT(std::move(entries));
}

int dim_class(const ClassDatum& c) {
    int d = c.n * c.n;
    for (const auto& [e, lam] : c.eigen) {
        Partition conj = lam.conjugate();
        for (int part : conj.parts()) d -= part * part;
    }
    return d;
}

long det_exponent(const ClassDatum& c) {
    long s = 0;
    for (const auto& [e, lam] : c.eigen) s = (s + e * lam.size()) % c.modulus;
    return s;
}

int d_omega(const std::vector<ClassDatum>& classes) {
    if (classes.empty()) throw std::invalid_argument("d_omega: empty tuple");
    int n = classes[0].n;
    int d = -2 * n * n + 2;
    for (const auto& c : classes) d += dim_class(c);
    if (d < 0 || d % 2 != 0)
        throw std::domain_error("tuple dimension is odd or negative");
    return d / 2;
}

int d_omega(const MultiType& w) {
    int n = w.n();
    int d = -2 * n * n + 2;
    for (const auto& comp : w.components()) {
        int dim = n * n;
        for (const auto& e : comp.entries()) {
            Partition conj = e.lambda.conjugate();
            for (int part : conj.parts()) dim -= e.mult * e.d * part * part;
        }
        d += dim;
    }
    if (d < 0 || d % 2 != 0)
        throw std::domain_error("tuple dimension is odd or negative");
    return d / 2;
}

int a_group(const ClassDatum& c) {
    if (c.modulus % c.n != 0)
        throw std::domain_error("mu_n is not contained in the eigenvalue group");
    long step = c.modulus / c.n; // generator exponent of mu_n
    auto stabilizes = [&](long z) {
        for (const auto& [e, lam] : c.eigen) {
            long shifted = (e + z) % c.modulus;
            auto it = std::lower_bound(c.eigen.begin(), c.eigen.end(),
                                       std::make_pair(shifted, Partition{}));
            if (it == c.eigen.end() || it->first != shifted || !(it->second == lam)) return false;
        }
        return true;
    };
    int d = 1;
    for (int j = 1; j < c.n; ++j) {
        if (stabilizes(step * j)) {
            d = c.n / std::gcd(c.n, j); // order of zeta_n^j
            break;
        }
    }
    return d;
}

} // namespace charstack
