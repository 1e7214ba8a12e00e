#include "symfunc/kernel.hpp"

#include <mutex>

namespace charstack {

namespace {

const std::vector<std::string> kZW{"z", "w"};

// Rational Schur-coefficient map of s_omega for the pairing; cached per type.
const std::map<Partition, Rat>& schur_coeffs_of_type(const TypeT& omega) {
    static std::map<TypeT, std::map<Partition, Rat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(omega);
    if (it != cache.end()) return it->second;
    SymFunc s = schur_of_type(omega, Basis::schur, {});
    std::map<Partition, Rat> coeffs;
    for (const auto& [p, c] : s.coeffs()) coeffs[p] = c.constant_value();
    return cache.emplace(omega, std::move(coeffs)).first->second;
}

} // namespace

RatFunc hook_function(const Partition& lambda) {
    if (lambda.size() < 1) throw std::invalid_argument("hook_function: |lambda| >= 1 required");
    RatFunc z = RatFunc::variable(kZW, "z"), w = RatFunc::variable(kZW, "w");
    MultiPoly den = MultiPoly::constant(kZW, 1);
    for (const ArmLeg& c : arm_leg_cells(lambda)) {
        MultiPoly f1 = MultiPoly::variable(kZW, "z", 2 * c.arm + 2) -
                       MultiPoly::variable(kZW, "w", 2 * c.leg);
        MultiPoly f2 = MultiPoly::variable(kZW, "z", 2 * c.arm) -
                       MultiPoly::variable(kZW, "w", 2 * c.leg + 2);
        den = den * f1 * f2;
    }
    return RatFunc(MultiPoly::constant(kZW, 1), std::move(den));
}

namespace {

// Multi-alphabet symmetric function in the power-sum basis: the key holds one
// partition per alphabet, the value lives in the target coefficient field.
using MultiKey = std::vector<Partition>;
using MultiSym = std::map<MultiKey, RatFunc>;

void multisym_add(MultiSym& acc, const MultiKey& key, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.emplace(key, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

Partition concat(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

MultiSym multisym_mul(const MultiSym& a, const MultiSym& b) {
    MultiSym r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            MultiKey key(ka.size());
            for (size_t i = 0; i < key.size(); ++i) key[i] = concat(ka[i], kb[i]);
            multisym_add(r, key, ca * cb);
        }
    return r;
}

} // namespace

RatFunc hlv_kernel_image(const MultiType& w, const RatFunc& image_z, const RatFunc& image_w) {
    if (image_z.vars() != image_w.vars())
        throw std::invalid_argument("kernel images must share a variable set");
    const std::vector<std::string>& tv = image_z.vars();
    int n = w.n();
    int k = w.k();
    if (n < 1) throw std::invalid_argument("kernel needs components of size >= 1");

    RatFunc z2 = image_z * image_z, w2 = image_w * image_w;
    MultiType dual = w.dual();

    // Omega_m for 1 <= m <= n, in the multi-alphabet power-sum basis.
    std::vector<MultiSym> omega(static_cast<size_t>(n) + 1);
    std::vector<const Transitions*> tr_cache(static_cast<size_t>(n) + 1, nullptr);
    for (int m = 1; m <= n; ++m) {
        for (const Partition& lambda : partitions_of(m)) {
            RatFunc den = RatFunc::one(tv);
            for (const ArmLeg& c : arm_leg_cells(lambda)) {
                RatFunc f1 = image_z.pow(2 * c.arm + 2) - image_w.pow(2 * c.leg);
                RatFunc f2 = image_z.pow(2 * c.arm) - image_w.pow(2 * c.leg + 2);
                if (f1.is_zero() || f2.is_zero())
                    throw std::domain_error("kernel specialization hits a hook-function pole");
                den = den * f1 * f2;
            }
            RatFunc hook = RatFunc::one(tv) / den;

            // H~_lambda(q -> z^2, t -> w^2) in the power-sum basis
            const MacdonaldEntry& mac = modified_macdonald(lambda, std::max(8, n));
            std::map<std::string, RatFunc> images{{"q", z2}, {"t", w2}};
            if (!tr_cache[m]) tr_cache[m] = &transitions(m);
            const Transitions& tr = *tr_cache[m];
            std::map<Partition, RatFunc> hp; // p-expansion
            for (const auto& [mu, c] : mac.schur_coeffs) {
                RatFunc cs = c.subst(images, tv);
                int j = tr.index.at(mu);
                for (size_t i = 0; i < tr.parts.size(); ++i) {
                    if (tr.p_from_s[i][j] == 0) continue;
                    auto [it, fresh] = hp.emplace(tr.parts[i], cs * tr.p_from_s[i][j]);
                    if (!fresh) it->second = it->second + cs * tr.p_from_s[i][j];
                }
            }
            for (auto it = hp.begin(); it != hp.end();)
                it = it->second.is_zero() ? hp.erase(it) : std::next(it);

            // product over the k alphabets
            MultiSym prod{{MultiKey(static_cast<size_t>(k)), hook}};
            for (int i = 0; i < k; ++i) {
                MultiSym next;
                for (const auto& [key, c] : prod)
                    for (const auto& [mu, hc] : hp) {
                        MultiKey nk = key;
                        nk[static_cast<size_t>(i)] = mu;
                        multisym_add(next, nk, c * hc);
                    }
                prod = std::move(next);
            }
            for (const auto& [key, c] : prod) multisym_add(omega[m], key, c);
        }
    }

    // Coeff_{T^n} of log(1 + sum_m Omega_m T^m): sum_j (-1)^{j+1}/j * [Omega^j]_n.
    MultiSym logn = omega[n];
    std::vector<MultiSym> power = omega; // Omega^j truncated, reused per j
    for (int j = 2; j <= n; ++j) {
        std::vector<MultiSym> next(static_cast<size_t>(n) + 1);
        for (int m = j; m <= n; ++m)
            for (int i = j - 1; i < m; ++i) {
                if (power[i].empty() || omega[m - i].empty()) continue;
                MultiSym part = multisym_mul(power[i], omega[m - i]);
                for (const auto& [key, c] : part) multisym_add(next[m], key, c);
            }
        power = std::move(next);
        Rat scale = Rat(j % 2 == 0 ? -1 : 1, j);
        for (const auto& [key, c] : power[n]) multisym_add(logn, key, c * scale);
    }

    // pair against s_{w'}: per-alphabet weights z_kappa * [p_kappa](s_{w_i'})
    std::vector<std::map<Partition, Rat>> weights;
    {
        const Transitions& tr = transitions(n);
        for (const TypeT& comp : dual.components()) {
            SymFunc s = schur_of_type(comp, Basis::powersum, {});
            std::map<Partition, Rat> wmap;
            for (const auto& [kappa, c] : s.coeffs())
                wmap[kappa] = c.constant_value() * z_lambda(kappa);
            weights.push_back(std::move(wmap));
        }
        (void)tr;
    }
    RatFunc total = RatFunc::zero(tv);
    for (const auto& [key, c] : logn) {
        Rat weight = 1;
        bool zero = false;
        for (size_t i = 0; i < key.size() && !zero; ++i) {
            auto it = weights[i].find(key[i]);
            if (it == weights[i].end() || it->second == 0)
                zero = true;
            else
                weight *= it->second;
        }
        if (!zero) total = total + c * weight;
    }

    RatFunc prefactor = (RatFunc::one(tv) - z2) * (w2 - RatFunc::one(tv));
    RatFunc result = total * prefactor;
    if (r_sign(w) % 2 != 0) result = -result;
    return result;
}

RatFunc hlv_kernel(const MultiType& w) {
    return hlv_kernel_image(w, RatFunc::variable(kZW, "z"), RatFunc::variable(kZW, "w"));
}

LaurentPoly substitute_and_clear(const RatFunc& f,
                                 const std::map<std::string, LaurentPoly>& subst,
                                 const std::vector<std::string>& target_vars) {
    std::map<std::string, RatFunc> images;
    for (const auto& [name, img] : subst) images.emplace(name, img.to_ratfunc());
    RatFunc g = f.subst(images, target_vars);
    if (g.den().terms().size() != 1) throw std::domain_error("denominator does not clear");
    return LaurentPoly::from_ratfunc(g);
}

} // namespace charstack
