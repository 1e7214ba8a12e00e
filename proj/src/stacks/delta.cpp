#include "stacks/delta.hpp"

#include "exactalg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace charstack {

long cyclotomic_C(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_C: m >= 1 required");
    static std::map<long, long> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto ring = CycloRing::make(m);
    CycloNum sum = CycloNum::zero(ring);
    for (long r = 1; r <= m; ++r)
        if (std::gcd(r, m) == 1) sum = sum + CycloNum::root(ring, r);
    Rat v = sum.as_rational();
    if (!is_integer(v)) throw std::logic_error("C_m must be an integer");
    long out = static_cast<long>(v.get_num().get_si());
    cache[m] = out;
    return out;
}

Rat delta_coeff(const std::vector<int>& r, const CharacterOfA& chi, const TupleData& t) {
    size_t k = t.d.size();
    if (r.size() != k || chi.s.size() != k)
        throw std::invalid_argument("delta_coeff: tuple size mismatch");
    for (size_t i = 0; i < k; ++i)
        if (r[i] < 1 || t.d[i] % r[i] != 0)
            throw std::domain_error("delta_coeff: r_i must divide d_i");
    Rat total = 0;
    for (long j = 0; j < t.dprime; ++j) {
        Rat prod = 1;
        for (size_t i = 0; i < k; ++i) {
            long m = r[i] / std::gcd(static_cast<long>(r[i]), static_cast<long>(chi.s[i]) + j);
            prod *= Rat(cyclotomic_C(m), euler_phi(m));
        }
        total += prod;
    }
    for (size_t i = 0; i < k; ++i) total *= euler_phi(r[i]);
    total.canonicalize();
    return total;
}

std::vector<std::vector<int>> divisor_tuples(const std::vector<int>& d) {
    std::vector<std::vector<int>> divs;
    for (int di : d) {
        std::vector<int> cur;
        for (int x = 1; x <= di; ++x)
            if (di % x == 0) cur.push_back(x);
        divs.push_back(std::move(cur));
    }
    std::vector<std::vector<int>> out;
    std::vector<int> pick(d.size(), 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == d.size()) {
            std::vector<int> r;
            for (size_t j = 0; j < d.size(); ++j) r.push_back(divs[j][pick[j]]);
            out.push_back(std::move(r));
            return;
        }
        for (pick[i] = 0; pick[i] < static_cast<int>(divs[i].size()); ++pick[i]) self(self, i + 1);
    };
    rec(rec, 0);
    return out;
}

} // namespace charstack
