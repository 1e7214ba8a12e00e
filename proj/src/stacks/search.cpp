#include "stacks/search.hpp"

#include <algorithm>

namespace charstack {

namespace {

// Candidate regular semisimple classes for n = 2 over Z/N, lexicographically
// ordered by their eigenvalue pair.
std::vector<ClassDatum> candidates_n2(long N, bool degenerate) {
    std::vector<ClassDatum> out;
    Partition one{{1}};
    if (degenerate) {
        if (N % 2 != 0) return out;
        for (long e = 0; e < N / 2; ++e)
            out.push_back(ClassDatum::make(2, N, {{e, one}, {e + N / 2, one}}));
        return out;
    }
    for (long e1 = 0; e1 < N; ++e1)
        for (long e2 = e1 + 1; e2 < N; ++e2) {
            if (N % 2 == 0 && e2 == e1 + N / 2) continue; // that pair is degenerate
            out.push_back(ClassDatum::make(2, N, {{e1, one}, {e2, one}}));
        }
    return out;
}

std::optional<TupleData> search_n_le_2(int n, int k, long N,
                                       const std::vector<bool>& degenerate) {
    std::vector<std::vector<ClassDatum>> pools;
    for (int i = 0; i < k; ++i) {
        if (n == 1) {
            std::vector<ClassDatum> out;
            for (long e = 0; e < N; ++e)
                out.push_back(ClassDatum::make(1, N, {{e, Partition{{1}}}}));
            pools.push_back(std::move(out));
        } else {
            pools.push_back(candidates_n2(N, degenerate[i]));
        }
        if (pools.back().empty()) return std::nullopt;
    }
    std::vector<size_t> pick(static_cast<size_t>(k), 0);
    while (true) {
        std::vector<ClassDatum> tuple;
        for (int i = 0; i < k; ++i) tuple.push_back(pools[i][pick[i]]);
        TupleData t = h_groups(tuple);
        if (is_generic_pgl(t)) return t;
        // advance odometer
        int i = k - 1;
        while (i >= 0 && ++pick[i] == pools[i].size()) pick[i--] = 0;
        if (i < 0) return std::nullopt;
    }
}

} // namespace

std::optional<TupleData> search_generic_tuple(int n, int k, long modulus,
                                              const std::vector<bool>& degenerate) {
    if (static_cast<int>(degenerate.size()) != k)
        throw std::invalid_argument("search_generic_tuple: pattern size != k");
    if (modulus % n != 0)
        throw std::invalid_argument("search_generic_tuple: n must divide the modulus");
    if (n <= 2) return search_n_le_2(n, k, modulus, degenerate);
    // a deterministic seeded search keeps fixtures reproducible for n > 2
    std::vector<int> deg;
    for (bool b : degenerate) deg.push_back(b ? n : 1);
    std::mt19937 rng(0x5eed0000u + static_cast<unsigned>(n * 131 + k * 17 + modulus));
    return random_generic_tuple(n, k, modulus, deg, rng, 2000);
}

std::optional<TupleData> random_generic_tuple(int n, int k, long N,
                                              const std::vector<int>& degeneracy,
                                              std::mt19937& rng, int attempts) {
    if (static_cast<int>(degeneracy.size()) != k)
        throw std::invalid_argument("random_generic_tuple: degeneracy size != k");
    for (int d : degeneracy)
        if (d < 1 || n % d != 0)
            throw std::invalid_argument("random_generic_tuple: degeneracy must divide n");
    if (N % n != 0) throw std::invalid_argument("random_generic_tuple: n must divide N");

    auto random_class = [&](int d) -> std::optional<ClassDatum> {
        // eigenvalue orbits of size d under translation by N/d, each orbit
        // carrying one partition; total size d * sum |lambda_j| = n
        int budget = n / d;
        std::vector<std::pair<long, Partition>> eigen;
        std::vector<char> used(static_cast<size_t>(N), 0);
        int guard = 0;
        while (budget > 0 && guard++ < 200) {
            std::uniform_int_distribution<long> de(0, N - 1);
            std::uniform_int_distribution<int> dsz(1, budget);
            long e = de(rng);
            int sz = dsz(rng);
            auto parts = partitions_of(sz);
            std::uniform_int_distribution<size_t> dp(0, parts.size() - 1);
            Partition lam = parts[dp(rng)];
            // place the full orbit {e + j N/d}
            bool clash = false;
            for (int j = 0; j < d; ++j)
                if (used[(e + j * (N / d)) % N]) clash = true;
            if (clash) continue;
            for (int j = 0; j < d; ++j) {
                long slot = (e + j * (N / d)) % N;
                used[slot] = 1;
                eigen.push_back({slot, lam});
            }
            budget -= sz;
        }
        if (budget != 0) return std::nullopt;
        return ClassDatum::make(n, N, std::move(eigen));
    };

    for (int it = 0; it < attempts; ++it) {
        std::vector<ClassDatum> tuple;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            auto c = random_class(degeneracy[i]);
            if (!c) {
                ok = false;
                break;
            }
            // the actual stabilizer can exceed the requested one; keep only
            // exact matches so patterns mean what they say
            if (a_group(*c) != degeneracy[i]) ok = false;
            if (ok) tuple.push_back(std::move(*c));
        }
        if (!ok) continue;
        TupleData t = h_groups(tuple);
        if (is_generic_pgl(t)) return t;
    }
    return std::nullopt;
}

} // namespace charstack
