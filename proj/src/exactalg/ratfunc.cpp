#include "exactalg/ratfunc.hpp"

#include <sstream>

namespace charstack {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw std::invalid_argument("variable set mismatch");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.vars(), 1);
        return;
    }
    if (!num_.is_constant() && !den_.is_constant()) {
        MultiPoly g = MultiPoly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = MultiPoly::divide_exact(num_, g);
            den_ = MultiPoly::divide_exact(den_, g);
        }
    }
    normalize_content();
}

// Split the rational scale so both parts have coprime integer coefficients,
// then fix the denominator's leading sign.
void RatFunc::normalize_content() {
    Rat cn = num_.rational_content(), cd = den_.rational_content();
    Rat scale = cn / cd; // positive
    num_ = num_ * (Rat(scale.get_num()) / cn);
    den_ = den_ * (Rat(scale.get_den()) / cd);
    if (den_.leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::zero(std::vector<std::string> vars) {
    return from_poly(MultiPoly::constant(std::move(vars), 0));
}
RatFunc RatFunc::one(std::vector<std::string> vars) {
    return from_poly(MultiPoly::constant(std::move(vars), 1));
}
RatFunc RatFunc::constant(std::vector<std::string> vars, const Rat& c) {
    return from_poly(MultiPoly::constant(std::move(vars), c));
}
RatFunc RatFunc::variable(std::vector<std::string> vars, const std::string& name, int exp) {
    if (exp >= 0) return from_poly(MultiPoly::variable(std::move(vars), name, exp));
    MultiPoly den = MultiPoly::variable(vars, name, -exp);
    return RatFunc(MultiPoly::constant(std::move(vars), 1), std::move(den));
}
RatFunc RatFunc::from_poly(MultiPoly p) {
    MultiPoly den = MultiPoly::constant(p.vars(), 1);
    return RatFunc(std::move(p), std::move(den));
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value on non-constant rational function");
    if (num_.is_zero()) return Rat(0);
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator*(const Rat& c) const {
    if (c == 0) return RatFunc::zero(vars());
    // scaling by a rational cannot introduce a common polynomial factor
    RatFunc r;
    r.num_ = num_ * c;
    r.den_ = den_;
    r.normalize_content();
    return r;
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("negative power of zero");
        return RatFunc(den_.pow(-e), num_.pow(-e));
    }
    return RatFunc(num_.pow(e), den_.pow(e));
}

RatFunc RatFunc::with_vars(const std::vector<std::string>& new_vars) const {
    RatFunc r;
    r.num_ = num_.with_vars(new_vars);
    r.den_ = den_.with_vars(new_vars);
    return r;
}

RatFunc RatFunc::subst(const std::map<std::string, RatFunc>& images,
                       const std::vector<std::string>& target_vars) const {
    auto eval_poly = [&](const MultiPoly& p) {
        RatFunc acc = RatFunc::zero(target_vars);
        for (const auto& [e, c] : p.terms()) {
            RatFunc term = RatFunc::constant(target_vars, c);
            for (size_t i = 0; i < vars().size(); ++i) {
                if (e[i] == 0) continue;
                auto it = images.find(vars()[i]);
                if (it == images.end())
                    throw std::invalid_argument("no image for variable " + vars()[i]);
                term = term * it->second.pow(e[i]);
            }
            acc = acc + term;
        }
        return acc;
    };
    RatFunc dn = eval_poly(den_);
    if (dn.is_zero()) throw std::domain_error("substitution maps denominator to zero");
    return eval_poly(num_) / dn;
}

std::string RatFunc::to_string() const {
    if (is_poly()) {
        if (den_.constant_value() == 1) return num_.to_string();
        return "(" + num_.to_string() + ")/" + den_.constant_value().get_str();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {
std::string latex_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        bool has_var = false;
        for (int x : e) has_var |= x > 0;
        std::string coef;
        if (abs.get_den() == 1)
            coef = abs.get_num().get_str();
        else
            coef = "\\tfrac{" + abs.get_num().get_str() + "}{" + abs.get_den().get_str() + "}";
        if (abs != 1 || !has_var) out << coef;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out << p.vars()[i];
            if (e[i] > 1) out << "^{" << e[i] << "}";
        }
    }
    return out.str();
}
} // namespace

std::string RatFunc::to_latex() const {
    if (is_poly() && den_.constant_value() == 1) return latex_poly(num_);
    return "\\frac{" + latex_poly(num_) + "}{" + latex_poly(den_) + "}";
}

} // namespace charstack
