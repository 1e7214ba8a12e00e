#include "symfunc/symfunc.hpp"

#include <algorithm>
#include <sstream>

namespace charstack {

SymFunc::SymFunc(int degree, Basis basis, std::vector<std::string> cvars)
    : degree_(degree), basis_(basis), cvars_(std::move(cvars)) {}

SymFunc::SymFunc(int degree, Basis basis, std::vector<std::string> cvars,
                 std::map<Partition, RatFunc> coeffs)
    : degree_(degree), basis_(basis), cvars_(std::move(cvars)), coeffs_(std::move(coeffs)) {
    for (const auto& [p, c] : coeffs_)
        if (p.size() != degree_)
            throw std::invalid_argument("symmetric function must be homogeneous");
    prune();
}

void SymFunc::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
}

RatFunc SymFunc::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? RatFunc::zero(cvars_) : it->second;
}

void SymFunc::set_coeff(const Partition& p, RatFunc c) {
    if (p.size() != degree_) throw std::invalid_argument("coefficient of wrong degree");
    if (c.is_zero())
        coeffs_.erase(p);
    else
        coeffs_[p] = std::move(c);
}

SymFunc SymFunc::unit(int degree, Basis basis, const Partition& p,
                      std::vector<std::string> cvars) {
    SymFunc f(degree, basis, cvars);
    f.set_coeff(p, RatFunc::one(cvars));
    return f;
}

SymFunc SymFunc::convert(Basis target) const {
    if (target == basis_) return *this;
    const Transitions& t = transitions(degree_);
    auto apply = [&](const std::vector<std::vector<Rat>>& m, const SymFunc& f, Basis to) {
        SymFunc out(f.degree_, to, f.cvars_);
        for (const auto& [src, c] : f.coeffs_) {
            int j = t.index.at(src);
            for (size_t i = 0; i < t.parts.size(); ++i) {
                if (m[i][j] == 0) continue;
                RatFunc cur = out.coeff(t.parts[i]);
                out.set_coeff(t.parts[i], cur + c * m[i][j]);
            }
        }
        return out;
    };
    // route everything through the Schur basis
    SymFunc in_schur = *this;
    if (basis_ == Basis::powersum) in_schur = apply(t.s_from_p, *this, Basis::schur);
    if (basis_ == Basis::monomial) in_schur = apply(t.s_from_m, *this, Basis::schur);
    if (target == Basis::schur) return in_schur;
    if (target == Basis::powersum) return apply(t.p_from_s, in_schur, Basis::powersum);
    return apply(t.m_from_s, in_schur, Basis::monomial);
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
    SymFunc rhs = o.basis_ == basis_ ? o : o.convert(basis_);
    SymFunc r = *this;
    for (const auto& [p, c] : rhs.coeffs_) r.set_coeff(p, r.coeff(p) + c);
    return r;
}

SymFunc SymFunc::operator*(const RatFunc& c) const {
    SymFunc r(degree_, basis_, cvars_);
    if (c.is_zero()) return r;
    for (const auto& [p, v] : coeffs_) r.coeffs_[p] = v * c;
    return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc a = convert(Basis::powersum);
    SymFunc b = o.convert(Basis::powersum);
    SymFunc r(degree_ + o.degree_, Basis::powersum, cvars_);
    for (const auto& [pa, ca] : a.coeffs_)
        for (const auto& [pb, cb] : b.coeffs_) {
            std::vector<int> parts = pa.parts();
            parts.insert(parts.end(), pb.parts().begin(), pb.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            Partition p(parts);
            r.set_coeff(p, r.coeff(p) + ca * cb);
        }
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (degree_ != o.degree_) return false;
    SymFunc rhs = o.basis_ == basis_ ? o : o.convert(basis_);
    return coeffs_ == rhs.coeffs_;
}

SymFunc SymFunc::plethysm_power(int d) const {
    if (d < 1) throw std::invalid_argument("plethysm_power: d >= 1 required");
    SymFunc p = convert(Basis::powersum);
    SymFunc r(degree_ * d, Basis::powersum, cvars_);
    for (const auto& [part, c] : p.coeffs_) {
        std::vector<int> scaled = part.parts();
        for (int& x : scaled) x *= d;
        r.set_coeff(Partition(scaled), c);
    }
    return r;
}

SymFunc SymFunc::plethystic_scale(const std::function<RatFunc(int)>& scale) const {
    SymFunc p = convert(Basis::powersum);
    SymFunc r(degree_, Basis::powersum, cvars_);
    for (const auto& [part, c] : p.coeffs_) {
        RatFunc v = c;
        for (int x : part.parts()) v = v * scale(x);
        r.set_coeff(part, v);
    }
    return r;
}

SymFunc SymFunc::map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const {
    SymFunc r(degree_, basis_, cvars_);
    for (const auto& [p, c] : coeffs_) r.set_coeff(p, f(c));
    return r;
}

std::string SymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    const char* tag = basis_ == Basis::schur ? "s" : basis_ == Basis::powersum ? "p" : "m";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")*" << tag << p.to_string();
    }
    return out.str();
}

RatFunc hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("hall_inner: degree mismatch");
    SymFunc a = f.convert(Basis::powersum);
    SymFunc b = g.convert(Basis::powersum);
    RatFunc acc = RatFunc::zero(f.cvars());
    for (const auto& [p, ca] : a.coeffs()) {
        auto it = b.coeffs().find(p);
        if (it == b.coeffs().end()) continue;
        acc = acc + ca * it->second * z_lambda(p);
    }
    return acc;
}

SymFunc schur_of_type(const TypeT& omega, Basis basis, std::vector<std::string> cvars) {
    SymFunc acc = SymFunc::unit(0, Basis::powersum, Partition{}, cvars);
    for (const auto& e : omega.entries()) {
        SymFunc s = SymFunc::unit(e.lambda.size(), Basis::schur, e.lambda, cvars);
        SymFunc factor = s.plethysm_power(e.d);
        for (int i = 0; i < e.mult; ++i) acc = acc * factor;
    }
    if (acc.basis() != basis) acc = acc.convert(basis);
    return acc;
}

} // namespace charstack
