#include "exactalg/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace charstack {

bool GrlexLess::operator()(const Exps& a, const Exps& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_[Exps(p.vars_.size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name, int exp) {
    MultiPoly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end()) throw std::invalid_argument("unknown variable " + name);
    Exps e(p.vars_.size(), 0);
    e[static_cast<size_t>(it - p.vars_.begin())] = exp;
    p.terms_[e] = 1;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exps& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MultiPoly::set_term(const Exps& e, const Rat& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void MultiPoly::add_term(const Exps& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const Rat* MultiPoly::find_term(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

const std::pair<const Exps, Rat>& MultiPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable set mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(vars_);
    Exps e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of polynomial");
    MultiPoly acc = constant(vars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

Rat MultiPoly::rational_content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    return content; // positive by construction
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rat c = rational_content();
    MultiPoly r(vars_);
    for (const auto& [e, t] : terms_) r.terms_[e] = t / c;
    return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly q(a.vars_);
    MultiPoly r = a;
    const auto& [eb, cb] = b.leading();
    Exps e(a.vars_.size());
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = er[i] - eb[i];
            if (e[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        Rat coef = cr / cb;
        q.add_term(e, coef);
        MultiPoly t(a.vars_);
        t.terms_[e] = coef;
        r = r - t * b;
    }
    return q;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& new_vars) const {
    std::vector<int> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end()) {
            // dropping a variable is only allowed if it is unused
            if (degree_in(static_cast<int>(i)) > 0)
                throw std::invalid_argument("cannot drop used variable " + vars_[i]);
            where[i] = -1;
        } else {
            where[i] = static_cast<int>(it - new_vars.begin());
        }
    }
    MultiPoly r(new_vars);
    for (const auto& [e, c] : terms_) {
        Exps ne(new_vars.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i)
            if (where[i] >= 0) ne[where[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// gcd machinery
// ---------------------------------------------------------------------------

namespace {

// Dense view in the last variable: coeffs[d] is the coefficient of x_last^d,
// a polynomial in the remaining variables.
std::vector<MultiPoly> split_main(const MultiPoly& p, const std::vector<std::string>& subvars) {
    int v = p.nvars();
    int d = p.degree_in(v - 1);
    std::vector<MultiPoly> coeffs(static_cast<size_t>(d + 1), MultiPoly(subvars));
    for (const auto& [e, c] : p.terms()) {
        Exps sub(e.begin(), e.end() - 1);
        coeffs[e[v - 1]].add_term(sub, c);
    }
    return coeffs;
}

MultiPoly join_main(const std::vector<MultiPoly>& coeffs, const std::vector<std::string>& vars) {
    MultiPoly p(vars);
    for (size_t d = 0; d < coeffs.size(); ++d) {
        for (const auto& [e, c] : coeffs[d].terms()) {
            Exps full(e);
            full.push_back(static_cast<int>(d));
            p.add_term(full, c);
        }
    }
    return p;
}

void trim(std::vector<MultiPoly>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int deg(const std::vector<MultiPoly>& f) { return static_cast<int>(f.size()) - 1; }

std::vector<MultiPoly> scale(const std::vector<MultiPoly>& f, const MultiPoly& c) {
    std::vector<MultiPoly> r(f.size(), MultiPoly(c.vars()));
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i] * c;
    trim(r);
    return r;
}

// Pseudo-remainder of a by b in the main variable (coefficients are polys).
std::vector<MultiPoly> prem(std::vector<MultiPoly> r, const std::vector<MultiPoly>& b) {
    const MultiPoly& lcb = b.back();
    int e = deg(r) - deg(b) + 1;
    while (!r.empty() && deg(r) >= deg(b)) {
        MultiPoly lcr = r.back();
        int shift = deg(r) - deg(b);
        r = scale(r, lcb);
        for (size_t i = 0; i < b.size(); ++i) {
            size_t j = i + static_cast<size_t>(shift);
            r[j] = r[j] - b[i] * lcr;
        }
        trim(r);
        --e;
    }
    if (e > 0) {
        MultiPoly m = lcb.pow(e);
        r = scale(r, m);
    }
    return r;
}

// Content of a dense coefficient list: gcd of all coefficients.
MultiPoly content_of(const std::vector<MultiPoly>& coeffs, const std::vector<std::string>& subvars) {
    MultiPoly g(subvars);
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = MultiPoly::gcd(g, c);
        if (g.is_constant()) break;
    }
    if (g.is_zero()) return g;
    return g;
}

std::vector<MultiPoly> divide_coeffs(const std::vector<MultiPoly>& coeffs, const MultiPoly& g) {
    std::vector<MultiPoly> r(coeffs.size(), MultiPoly(g.vars()));
    for (size_t i = 0; i < coeffs.size(); ++i)
        r[i] = coeffs[i].is_zero() ? coeffs[i] : MultiPoly::divide_exact(coeffs[i], g);
    return r;
}

MultiPoly normalize_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    MultiPoly r = p.primitive_part();
    if (r.leading().second < 0) r = -r;
    return r;
}

// Fast path: univariate gcd over Q via primitive Euclid.
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b) {
    auto to_dense = [](const MultiPoly& p) {
        std::vector<Rat> f(static_cast<size_t>(p.degree_in(0) + 1), Rat(0));
        for (const auto& [e, c] : p.terms()) f[e[0]] = c;
        return f;
    };
    auto make_primitive = [](std::vector<Rat>& f) {
        Int ng = 0, dl = 1;
        for (const Rat& c : f) {
            mpz_gcd(ng.get_mpz_t(), ng.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat content(ng, dl);
        content.canonicalize();
        if (f.back() < 0) content = -content;
        for (Rat& c : f) c /= content;
    };
    std::vector<Rat> f = to_dense(a), g = to_dense(b);
    make_primitive(f);
    make_primitive(g);
    if (f.size() < g.size()) std::swap(f, g);
    while (true) {
        // remainder of f by g
        while (f.size() >= g.size()) {
            Rat q = f.back() / g.back();
            size_t shift = f.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i) f[i + shift] -= q * g[i];
            while (!f.empty() && f.back() == 0) f.pop_back();
            if (f.empty()) break;
        }
        if (f.empty()) break;
        make_primitive(f);
        std::swap(f, g);
    }
    MultiPoly r(a.vars());
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) r.add_term(Exps{static_cast<int>(i)}, g[i]);
    return normalize_primitive(r);
}

} // namespace

namespace {

// Evaluate all variables except `keep` at small fixed points, collapsing to a
// univariate polynomial in `keep`.
MultiPoly eval_except(const MultiPoly& p, int keep) {
    static const long points[] = {7, 11, 13, 17};
    std::vector<std::string> uv{p.vars()[keep]};
    MultiPoly r(uv);
    for (const auto& [e, c] : p.terms()) {
        Rat v = c;
        for (int i = 0; i < p.nvars(); ++i) {
            if (i == keep || e[i] == 0) continue;
            Rat base(points[i % 4]);
            for (int k = 0; k < e[i]; ++k) v *= base;
        }
        r.add_term({e[keep]}, v);
    }
    return r;
}

} // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    if (!a.vars_.empty() || !b.vars_.empty()) {
        if (a.vars_ != b.vars_) throw std::invalid_argument("variable set mismatch in gcd");
    }
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant()) return constant(a.vars_, 1);
    if (a.terms_ == b.terms_) return normalize_primitive(a);
    int v = a.nvars();
    if (v == 1) return gcd_univariate(a, b);

    // Cheap coprimality certificate: the gcd's degree in each variable is
    // bounded by the degree of the gcd of univariate evaluations.
    bool all_const = true;
    for (int i = 0; i < v && all_const; ++i) {
        if (a.degree_in(i) == 0 || b.degree_in(i) == 0) continue;
        MultiPoly ea = eval_except(a, i), eb = eval_except(b, i);
        if (ea.is_zero() || eb.is_zero()) {
            all_const = false;
            break;
        }
        if (gcd_univariate(ea, eb).total_degree() > 0) all_const = false;
    }
    if (all_const) return constant(a.vars_, 1);

    // Drop trailing variables unused by both.
    if (a.degree_in(v - 1) == 0 && b.degree_in(v - 1) == 0) {
        std::vector<std::string> sub(a.vars_.begin(), a.vars_.end() - 1);
        MultiPoly g = gcd(a.with_vars(sub), b.with_vars(sub));
        return g.with_vars(a.vars_);
    }

    std::vector<std::string> sub(a.vars_.begin(), a.vars_.end() - 1);
    std::vector<MultiPoly> fa = split_main(a, sub), fb = split_main(b, sub);
    MultiPoly ca = content_of(fa, sub), cb = content_of(fb, sub);
    std::vector<MultiPoly> pa = divide_coeffs(fa, ca), pb = divide_coeffs(fb, cb);
    MultiPoly gc = gcd(ca, cb);

    if (deg(pa) < deg(pb)) std::swap(pa, pb);
    // Primitive polynomial remainder sequence.
    while (deg(pb) > 0) {
        std::vector<MultiPoly> r = prem(pa, pb);
        if (r.empty()) {
            MultiPoly main = join_main(pb, a.vars_);
            // pb is main-primitive; combine with the content gcd
            return normalize_primitive(main * gc.with_vars(a.vars_));
        }
        MultiPoly cr = content_of(r, sub);
        r = divide_coeffs(r, cr);
        pa = std::move(pb);
        pb = std::move(r);
    }
    // Coprime in the main variable.
    return normalize_primitive(gc.with_vars(a.vars_));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest terms first for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (abs != 1 || !has_var) out << abs.get_str();
        bool star = abs != 1 || !has_var;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) out << "*";
            star = true;
            out << vars_[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

} // namespace charstack
