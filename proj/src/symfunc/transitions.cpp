#include "symfunc/transitions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace charstack {

namespace {

using PExp = std::map<Partition, Rat>; // expansion in the power-sum basis

PExp pexp_mul(const PExp& a, const PExp& b) {
    PExp r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            r[Partition(parts)] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

void pexp_axpy(PExp& acc, const PExp& x, const Rat& c) {
    for (const auto& [l, v] : x) {
        Rat& slot = acc[l];
        slot += c * v;
        if (slot == 0) acc.erase(l);
    }
}

// h_m in the power-sum basis via the Newton recurrence m h_m = sum p_k h_{m-k}.
const PExp& h_in_p(int m) {
    static std::vector<PExp> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (cache.empty()) cache.push_back({{Partition{}, Rat(1)}});
    while (static_cast<int>(cache.size()) <= m) {
        int mm = static_cast<int>(cache.size());
        PExp sum;
        for (int k = 1; k <= mm; ++k) {
            PExp pk{{Partition{{k}}, Rat(1)}};
            pexp_axpy(sum, pexp_mul(pk, cache[mm - k]), Rat(1));
        }
        PExp hm;
        for (auto& [l, c] : sum) hm[l] = c / mm;
        cache.push_back(std::move(hm));
    }
    return cache[static_cast<size_t>(m)];
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
PExp schur_in_p(const Partition& lambda) {
    int l = lambda.length();
    if (l == 0) return {{Partition{}, Rat(1)}};
    // expand the determinant over permutations with sign; l <= ~8 here
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) perm[i] = i;
    PExp det;
    do {
        int sign = 1;
        {
            // parity of perm
            std::vector<bool> seen(l, false);
            for (int i = 0; i < l; ++i) {
                if (seen[i]) continue;
                int cycle = 0;
                for (int j = i; !seen[j]; j = perm[j]) {
                    seen[j] = true;
                    ++cycle;
                }
                if (cycle % 2 == 0) sign = -sign;
            }
        }
        PExp prod{{Partition{}, Rat(1)}};
        bool zero = false;
        for (int i = 0; i < l && !zero; ++i) {
            int idx = lambda.part(i) - i + perm[i];
            if (idx < 0) {
                zero = true;
            } else if (idx > 0) {
                prod = pexp_mul(prod, h_in_p(idx));
            }
        }
        if (!zero) pexp_axpy(det, prod, Rat(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular transition matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

long kostka_number(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size()) return 0;
    static std::map<std::pair<Partition, Partition>, long> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto rec = [&](auto&& self, const Partition& lam, const Partition& mu) -> long {
        if (lam.empty()) return mu.empty() ? 1 : 0;
        if (mu.empty()) return 0;
        auto key = std::make_pair(lam, mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        // place the largest entry: cells form a horizontal strip lam/nu of
        // size equal to the last part of mu
        int strip = mu.parts().back();
        std::vector<int> rest_mu(mu.parts().begin(), mu.parts().end() - 1);
        Partition mu2(rest_mu);
        long total = 0;
        // enumerate nu with nu_i in [lam_{i+1}, lam_i] and |nu| = |lam| - strip
        int l = lam.length();
        std::vector<int> nu(l);
        auto gen = [&](auto&& g, int i, int remaining) -> void {
            if (i == l) {
                if (remaining != 0) return;
                std::vector<int> nz;
                for (int x : nu)
                    if (x > 0) nz.push_back(x);
                total += self(self, Partition(nz), mu2);
                return;
            }
            int lo = lam.part(i + 1), hi = lam.part(i);
            for (int v = hi; v >= lo; --v) {
                if (remaining - v < 0) continue;
                nu[i] = v;
                g(g, i + 1, remaining - v);
            }
        };
        gen(gen, 0, lam.size() - strip);
        memo[key] = total;
        return total;
    };
    return rec(rec, shape, content);
}

long murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("size mismatch");
    // Beta-set model: removing a border strip of size k moves a bead from b
    // to b-k; the sign is (-1)^{#beads strictly between}.
    int l = std::max(lambda.length(), 1);
    std::vector<int> beta;
    for (int i = 0; i < l; ++i) beta.push_back(lambda.part(i) + (l - 1 - i));
    std::sort(beta.begin(), beta.end());
    auto rec = [](auto&& self, std::vector<int>& b, const std::vector<int>& parts,
                  size_t pos) -> long {
        if (pos == parts.size()) return 1;
        int k = parts[pos];
        long total = 0;
        for (size_t i = 0; i < b.size(); ++i) {
            int target = b[i] - k;
            if (target < 0) continue;
            if (std::binary_search(b.begin(), b.end(), target)) continue;
            int between = 0;
            for (int x : b)
                if (x > target && x < b[i]) ++between;
            std::vector<int> nb = b;
            nb[i] = target;
            std::sort(nb.begin(), nb.end());
            long sub = self(self, nb, parts, pos + 1);
            total += (between % 2 == 0) ? sub : -sub;
        }
        return total;
    };
    return rec(rec, beta, mu.parts(), 0);
}

const Transitions& transitions(int degree) {
    static std::map<int, Transitions> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    Transitions t;
    t.degree = degree;
    t.parts = partitions_of(degree);
    size_t np = t.parts.size();
    for (size_t i = 0; i < np; ++i) t.index[t.parts[i]] = static_cast<int>(i);

    t.p_from_s.assign(np, std::vector<Rat>(np, Rat(0)));
    for (size_t j = 0; j < np; ++j) {
        PExp e = schur_in_p(t.parts[j]);
        for (const auto& [l, c] : e) t.p_from_s[t.index.at(l)][j] = c;
    }
    t.s_from_p = invert(t.p_from_s);

    t.m_from_s.assign(np, std::vector<Rat>(np, Rat(0)));
    for (size_t j = 0; j < np; ++j)
        for (size_t i = 0; i < np; ++i)
            t.m_from_s[i][j] = Rat(kostka_number(t.parts[j], t.parts[i]));
    t.s_from_m = invert(t.m_from_s);

    return cache.emplace(degree, std::move(t)).first->second;
}

} // namespace charstack
