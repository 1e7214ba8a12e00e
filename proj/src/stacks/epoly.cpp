#include "stacks/epoly.hpp"

#include "exactalg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace charstack {

namespace {

const std::vector<std::string> kU{"u"};
const std::vector<std::string> kUT{"u", "t"};
const std::vector<std::string> kQ{"q"};
const std::vector<std::string> kQT{"q", "t"};

enum class Spec { sqrt_q, minus_t_sqrt_q, pure };

// The kernel specializations are the expensive atoms; identical multitypes
// recur across r-tuples and tuples, so cache by (spec, multitype).
LaurentPoly kernel_specialized(const MultiType& w, Spec spec) {
    static std::map<std::pair<int, MultiType>, LaurentPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({static_cast<int>(spec), w});
        if (it != cache.end()) return it->second;
    }
    RatFunc r = [&] {
        switch (spec) {
        case Spec::sqrt_q:
            return hlv_kernel_image(w, RatFunc::variable(kU, "u"),
                                    RatFunc::variable(kU, "u", -1));
        case Spec::minus_t_sqrt_q:
            return hlv_kernel_image(w,
                                    -(RatFunc::variable(kUT, "t") * RatFunc::variable(kUT, "u")),
                                    RatFunc::variable(kUT, "u", -1));
        case Spec::pure:
        default:
            return hlv_kernel_image(w, RatFunc::zero(kU), RatFunc::variable(kU, "u"));
        }
    }();
    if (r.den().terms().size() != 1) throw std::domain_error("denominator does not clear");
    LaurentPoly out = LaurentPoly::from_ratfunc(r);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::make_pair(static_cast<int>(spec), w), std::move(out))
        .first->second;
}

// u-Laurent with only even exponents -> polynomial in q; integrality asserted.
LaurentPoly to_q_polynomial(const LaurentPoly& u_poly) {
    if (!u_poly.is_poly_in_square("u"))
        throw std::logic_error("value is not a polynomial in q");
    LaurentPoly q = u_poly.halve_exponents("u", "q");
    if (!q.has_integer_coeffs())
        throw std::logic_error("value has non-integer coefficients");
    return q;
}

// (u,t)-Laurent, u-exponents even and >= 0 -> polynomial in (q, t).
LaurentPoly to_qt_polynomial(const LaurentPoly& ut_poly) {
    if (!ut_poly.is_poly_in_square("u") || !ut_poly.is_polynomial())
        throw std::logic_error("value is not a polynomial in (q, t)");
    LaurentPoly q = ut_poly.halve_exponents("u", "q");
    if (!q.has_integer_coeffs())
        throw std::logic_error("value has non-integer coefficients");
    return q;
}

LaurentPoly u_power(int e) { return LaurentPoly::variable(kU, "u", e); }

} // namespace

LaurentPoly kernel_at_sqrt_q(const MultiType& w) { return kernel_specialized(w, Spec::sqrt_q); }
LaurentPoly kernel_at_minus_t_sqrt_q(const MultiType& w) {
    return kernel_specialized(w, Spec::minus_t_sqrt_q);
}
LaurentPoly kernel_at_pure(const MultiType& w) { return kernel_specialized(w, Spec::pure); }

PolyResult e_poly_gln(const MultiType& w) {
    PolyResult r;
    r.backing = Backing::theorem;
    r.d_omega = d_omega(w);
    LaurentPoly val = u_power(2 * r.d_omega) * kernel_at_sqrt_q(w);
    r.value = to_q_polynomial(val);
    return r;
}

PolyResult ih_poly_gln(const MultiType& w) {
    PolyResult r;
    r.backing = Backing::conjecture;
    r.d_omega = d_omega(w);
    LaurentPoly qt2 = LaurentPoly::variable(kUT, "u", 2) *
                      LaurentPoly::variable(kUT, "t", 2);
    r.value = to_qt_polynomial(qt2.pow(r.d_omega) * kernel_at_minus_t_sqrt_q(w));
    return r;
}

PolyResult e_poly_twisted(const MultiType& w, const std::vector<int>& orders) {
    PolyResult r;
    r.backing = Backing::theorem;
    r.d_omega = d_omega(w);
    LaurentPoly val = u_power(2 * r.d_omega) * kernel_at_sqrt_q(omega_r(w, orders));
    r.value = to_q_polynomial(val);
    return r;
}

namespace {

// Common body for the four PGL quantities: scale * sum_r Delta^{s}_r K(w_r).
PolyResult pgl_sum(const TupleData& t, const CharacterOfA& chi, Spec spec, int q_power,
                   Backing backing) {
    GenericityWitness w;
    if (!is_generic_pgl(t, &w))
        throw std::domain_error("tuple is not generic: " + w.to_string());
    MultiType base = t.multitype();
    PolyResult res;
    res.backing = backing;
    res.d_omega = d_omega(base);
    res.iota = t.iota;
    res.a_order = t.a_order;
    res.h_order = t.h_order;

    const auto& vars = spec == Spec::minus_t_sqrt_q ? kUT : kU;
    LaurentPoly acc(vars);
    for (const auto& r : divisor_tuples(t.d)) {
        Rat delta = delta_coeff(r, chi, t);
        if (delta == 0) continue;
        acc = acc + kernel_specialized(omega_r(base, r), spec) * delta;
    }
    acc = acc * Rat(t.iota, t.a_order);

    int dpow = q_power * res.d_omega;
    if (spec == Spec::minus_t_sqrt_q) {
        LaurentPoly qt2 = LaurentPoly::variable(kUT, "u", 2) *
                          LaurentPoly::variable(kUT, "t", 2);
        res.value = to_qt_polynomial(qt2.pow(res.d_omega) * acc);
    } else {
        res.value = to_q_polynomial(LaurentPoly::variable(kU, "u", 2 * dpow) * acc);
    }
    return res;
}

} // namespace

PolyResult e_poly_pgl(const TupleData& t, const CharacterOfA& chi) {
    return pgl_sum(t, chi, Spec::sqrt_q, 1, Backing::theorem);
}

PolyResult ih_poly_pgl(const TupleData& t, const CharacterOfA& chi) {
    return pgl_sum(t, chi, Spec::minus_t_sqrt_q, 1, Backing::conjecture);
}

PolyResult pure_part_pgl(const TupleData& t, const CharacterOfA& chi) {
    return pgl_sum(t, chi, Spec::pure, 1, Backing::conjecture);
}

PolyResult multiplicity_formula_sln(const TupleData& t, const CharacterOfA& chi) {
    return pgl_sum(t, chi, Spec::pure, 0, Backing::theorem);
}

PolyResult e_poly_pgl_direct(const TupleData& t, const CharacterOfA& chi) {
    GenericityWitness w;
    if (!is_generic_pgl(t, &w))
        throw std::domain_error("tuple is not generic: " + w.to_string());
    MultiType base = t.multitype();
    PolyResult res;
    res.backing = Backing::theorem;
    res.d_omega = d_omega(base);
    res.iota = t.iota;
    res.a_order = t.a_order;
    res.h_order = t.h_order;

    // chi(y) values are d'-th roots of unity; accumulate coefficients in
    // Q[x]/Phi_{d'} and demand a rational total.
    auto ring = CycloRing::make(t.dprime);
    std::map<Exps, CycloNum> acc;
    for (const auto& y : t.h_elements) {
        // chi(y) = prod_i zeta_{d_i}^{s_i t_i} with y_i = zeta_n^{(n/d_i) t_i}
        long exp = 0;
        for (size_t i = 0; i < y.size(); ++i) {
            long t_i = y[i] / (t.n / t.d[i]);
            exp = (exp + (t.dprime / t.d[i]) * chi.s[i] % t.dprime * t_i) % t.dprime;
        }
        CycloNum weight = CycloNum::root(ring, exp);
        LaurentPoly k = kernel_at_sqrt_q(omega_r(base, t.order_of(y)));
        for (const auto& [e, c] : k.terms()) {
            auto [it, fresh] = acc.emplace(e, weight * c);
            if (!fresh) it->second = it->second + weight * c;
        }
    }
    LaurentPoly total(kU);
    for (const auto& [e, c] : acc) {
        if (c.is_zero()) continue;
        total.add_term(e, c.as_rational()); // throws if genuinely irrational
    }
    total = total * Rat(t.iota, t.h_order);
    res.value = to_q_polynomial(u_power(2 * res.d_omega) * total);
    return res;
}

Rat eval_at_q(const LaurentPoly& p, const Rat& q) {
    LaurentPoly r = p;
    for (const auto& v : p.vars()) {
        if (v == "q")
            r = r.eval_var("q", q);
        else if (v == "t")
            r = r.eval_var("t", Rat(1));
        else
            throw std::invalid_argument("eval_at_q: unexpected variable " + v);
    }
    return r.is_zero() ? Rat(0) : r.constant_value();
}

} // namespace charstack
