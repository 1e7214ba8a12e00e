#include "stacks/groups.hpp"

#include <algorithm>
#include <numeric>

namespace charstack {

std::vector<ClassDatum> TupleData::lifts() const {
    std::vector<ClassDatum> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(c.lift);
    return out;
}

MultiType TupleData::multitype() const {
    std::vector<TypeT> comps;
    comps.reserve(classes.size());
    for (const auto& c : classes) comps.push_back(type_of(c.lift));
    return MultiType(std::move(comps));
}

std::vector<int> TupleData::order_of(const std::vector<long>& h_elem) const {
    std::vector<int> o;
    o.reserve(h_elem.size());
    for (long e : h_elem) o.push_back(static_cast<int>(n / std::gcd(static_cast<long>(n), e)));
    return o;
}

TupleData h_groups(const std::vector<ClassDatum>& classes) {
    if (classes.empty()) throw std::invalid_argument("h_groups: empty tuple");
    TupleData t;
    t.n = classes[0].n;
    t.modulus = classes[0].modulus;
    if (t.modulus % t.n != 0)
        throw std::domain_error("mu_n is not contained in the eigenvalue group");
    for (const auto& c : classes) {
        if (c.n != t.n || c.modulus != t.modulus)
            throw std::invalid_argument("h_groups: mixed n or modulus");
        t.classes.push_back({c, a_group(c)});
        t.d.push_back(t.classes.back().d);
    }
    t.dprime = 1;
    for (int di : t.d) t.dprime = std::lcm(t.dprime, static_cast<long>(di));
    t.iota = t.n / t.dprime;
    long g = 0;
    for (int di : t.d) {
        t.dprime_i.push_back(t.dprime / di);
        g = std::gcd(g, t.dprime / di);
    }
    if (g != 1) throw std::logic_error("gcd(d'_1,...,d'_k) != 1");
    t.a_order = 1;
    for (int di : t.d) t.a_order *= di;
    if (t.a_order % t.dprime != 0) throw std::logic_error("|A| not divisible by d'");
    t.h_order = t.a_order / t.dprime;

    // det condition: n * lambda = sum of det exponents (mod N)
    long det = 0;
    for (const auto& c : classes) det = (det + det_exponent(c)) % t.modulus;
    if (det % t.n == 0) {
        // smallest solution of n*x = det (mod N): x = det/n works since n | N
        t.lambda_exp = det / t.n;
    }

    // enumerate H = {y in prod A_i : prod y_i = 1}
    std::vector<long> cur(classes.size(), 0);
    auto rec = [&](auto&& self, size_t i, long sum) -> void {
        if (i == classes.size()) {
            if (sum % t.n == 0) t.h_elements.push_back(cur);
            return;
        }
        long step = t.n / t.d[i]; // A(C_i) = <zeta_n^{n/d_i}>
        for (int tt = 0; tt < t.d[i]; ++tt) {
            cur[i] = step * tt;
            self(self, i + 1, sum + cur[i]);
        }
    };
    rec(rec, 0, 0);
    if (static_cast<long>(t.h_elements.size()) != t.h_order)
        throw std::logic_error("|H| enumeration disagrees with |A|/d'");
    return t;
}

bool is_generic_pgl(const TupleData& t, GenericityWitness* witness) {
    if (!t.lambda_exp) {
        if (witness) {
            witness->generic = false;
            witness->det_failed = true;
        }
        return false;
    }
    long zeta_step = t.modulus / t.n;
    for (int j = 0; j < t.n; ++j) {
        long zeta = zeta_step * j;
        long central = ((zeta - *t.lambda_exp) % t.modulus + t.modulus) % t.modulus;
        std::vector<ClassDatum> tuple = t.lifts();
        tuple.push_back(ClassDatum::make(
            t.n, t.modulus, {{central, Partition(std::vector<int>(t.n, 1))}}));
        GenericityWitness w;
        if (!is_generic_gln(tuple, witness ? &w : nullptr)) {
            if (witness) {
                *witness = w;
                witness->zeta_exp = zeta;
            }
            return false;
        }
    }
    if (witness) witness->generic = true;
    return true;
}

CharacterOfA s_chi(const std::vector<int>& exponents, const TupleData& t) {
    if (exponents.size() != t.d.size())
        throw std::invalid_argument("s_chi: one exponent per class required");
    CharacterOfA chi;
    for (size_t i = 0; i < exponents.size(); ++i) {
        int e = exponents[i] % t.d[i];
        if (e < 0) e += t.d[i];
        chi.s.push_back(e);
    }
    return chi;
}

SplittingIso splitting_iso(const TupleData& t) {
    SplittingIso iso;
    size_t k = t.d.size();
    // extended gcd: gamma with sum gamma_i d'_i = 1
    iso.gamma.assign(k, 0);
    {
        long g = t.dprime_i[0];
        iso.gamma[0] = 1;
        for (size_t i = 1; i < k; ++i) {
            // g*a + d'_i*b = gcd
            long a, b;
            long x0 = g, x1 = t.dprime_i[i];
            long a0 = 1, a1 = 0, b0 = 0, b1 = 1;
            while (x1 != 0) {
                long qq = x0 / x1;
                std::tie(x0, x1) = std::make_pair(x1, x0 - qq * x1);
                std::tie(a0, a1) = std::make_pair(a1, a0 - qq * a1);
                std::tie(b0, b1) = std::make_pair(b1, b0 - qq * b1);
            }
            a = a0;
            b = b0;
            for (size_t j = 0; j < i; ++j) iso.gamma[j] *= a;
            iso.gamma[i] = b;
            g = x0;
        }
        long check = 0;
        for (size_t i = 0; i < k; ++i) check += iso.gamma[i] * t.dprime_i[i];
        if (check != 1) throw std::logic_error("splitting gamma: extended gcd failed");
    }

    // Psi(y) = ((y_i * psi(y)^{-gamma_i d'_i})_i, psi(y)) on all of A
    auto mod_n = [&](long e) {
        long m = e % t.n;
        return m < 0 ? m + t.n : m;
    };
    std::vector<long> cur(k, 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == k) {
            long psi = 0;
            for (long e : cur) psi += e;
            psi = mod_n(psi);
            std::vector<long> h(k);
            for (size_t j = 0; j < k; ++j) h[j] = mod_n(cur[j] - iso.gamma[j] * t.dprime_i[j] * psi);
            // h must land in H: components in A(C_j), product 1
            long hsum = 0;
            for (size_t j = 0; j < k; ++j) {
                if (h[j] % (t.n / t.d[j]) != 0)
                    throw std::logic_error("splitting image leaves A(C_i)");
                hsum += h[j];
            }
            if (hsum % t.n != 0) throw std::logic_error("splitting image leaves H");
            iso.table.push_back({cur, {h, psi}});
            return;
        }
        long step = t.n / t.d[i];
        for (int tt = 0; tt < t.d[i]; ++tt) {
            cur[i] = step * tt;
            self(self, i + 1);
        }
    };
    rec(rec, 0);

    // verified bijective: pairs (h, h') must be pairwise distinct and the map
    // a homomorphism (checked on generators implicitly by additivity of the
    // construction; bijectivity checked explicitly)
    auto images = iso.table;
    std::sort(images.begin(), images.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    for (size_t i = 1; i < images.size(); ++i)
        if (images[i].second == images[i - 1].second)
            throw std::logic_error("splitting map is not injective");
    return iso;
}

} // namespace charstack
