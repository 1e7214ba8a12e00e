#include "exactalg/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace charstack {

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Rat& c) {
    LaurentPoly p(std::move(vars));
    if (c != 0) p.terms_[Exps(p.vars_.size(), 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, const std::string& name, int exp) {
    LaurentPoly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end()) throw std::invalid_argument("unknown variable " + name);
    Exps e(p.vars_.size(), 0);
    e[static_cast<size_t>(it - p.vars_.begin())] = exp;
    p.terms_[e] = 1;
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant Laurent polynomial");
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exps& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const Rat* LaurentPoly::find_term(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable set mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly r(vars_);
    Exps e(vars_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial");
        const auto& [ex, c] = *terms_.begin();
        LaurentPoly r(vars_);
        Exps ne(ex);
        for (int& x : ne) x *= e;
        r.terms_[ne] = Rat(1) / [&] {
            Rat b = c;
            Rat acc = 1;
            for (int i = 0; i < -e; ++i) acc *= b;
            return acc;
        }();
        return r;
    }
    LaurentPoly acc = constant(vars_, 1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

int LaurentPoly::min_degree_in(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < d) d = e[var];
        first = false;
    }
    return d;
}

int LaurentPoly::max_degree_in(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] > d) d = e[var];
        first = false;
    }
    return d;
}

bool LaurentPoly::is_poly_in_square(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable " + var);
    size_t i = static_cast<size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_)
        if (e[i] < 0 || e[i] % 2 != 0) return false;
    return true;
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

bool LaurentPoly::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

LaurentPoly LaurentPoly::eval_var(const std::string& var, const Rat& c) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable " + var);
    size_t i = static_cast<size_t>(it - vars_.begin());
    LaurentPoly r(vars_);
    for (const auto& [e, coef] : terms_) {
        Rat scale = 1;
        int k = e[i];
        if (k < 0) {
            if (c == 0) throw std::domain_error("pole at substituted value");
            for (int j = 0; j < -k; ++j) scale /= c;
        } else {
            for (int j = 0; j < k; ++j) scale *= c;
        }
        Exps ne(e);
        ne[i] = 0;
        r.add_term(ne, coef * scale);
    }
    return r;
}

LaurentPoly LaurentPoly::halve_exponents(const std::string& var, const std::string& new_name) const {
    if (!is_poly_in_square(var))
        throw std::domain_error("not a polynomial in " + var + "^2");
    auto it = std::find(vars_.begin(), vars_.end(), var);
    size_t i = static_cast<size_t>(it - vars_.begin());
    std::vector<std::string> nv = vars_;
    nv[i] = new_name;
    LaurentPoly r(nv);
    for (const auto& [e, c] : terms_) {
        Exps ne(e);
        ne[i] /= 2;
        r.add_term(ne, c);
    }
    return r;
}

RatFunc LaurentPoly::to_ratfunc() const {
    Exps shift(vars_.size(), 0);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < shift.size(); ++i) shift[i] = std::min(shift[i], e[i]);
    MultiPoly num(vars_);
    for (const auto& [e, c] : terms_) {
        Exps ne(e);
        for (size_t i = 0; i < ne.size(); ++i) ne[i] -= shift[i];
        num.add_term(ne, c);
    }
    MultiPoly den(vars_);
    Exps de(vars_.size());
    for (size_t i = 0; i < de.size(); ++i) de[i] = -shift[i];
    den.add_term(de, 1);
    return RatFunc(std::move(num), std::move(den));
}

LaurentPoly LaurentPoly::from_ratfunc(const RatFunc& f) {
    if (f.den().terms().size() != 1)
        throw std::domain_error("denominator does not clear");
    const auto& [de, dc] = *f.den().terms().begin();
    LaurentPoly r(f.vars());
    for (const auto& [e, c] : f.num().terms()) {
        Exps ne(e);
        for (size_t i = 0; i < ne.size(); ++i) ne[i] -= de[i];
        r.add_term(ne, c / dc);
    }
    return r;
}

LaurentPoly LaurentPoly::with_vars(const std::vector<std::string>& new_vars) const {
    std::vector<int> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end()) {
            if (min_degree_in(static_cast<int>(i)) != 0 || max_degree_in(static_cast<int>(i)) != 0)
                throw std::invalid_argument("cannot drop used variable " + vars_[i]);
            where[i] = -1;
        } else {
            where[i] = static_cast<int>(it - new_vars.begin());
        }
    }
    LaurentPoly r(new_vars);
    for (const auto& [e, c] : terms_) {
        Exps ne(new_vars.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i)
            if (where[i] >= 0) ne[where[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (abs != 1 || !has_var) out << abs.get_str();
        bool star = abs != 1 || !has_var;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) out << "*";
            star = true;
            out << vars_[i];
            if (e[i] != 1) out << "^" << e[i];
        }
    }
    return out.str();
}

} // namespace charstack
