#include "exactalg/cyclotomic.hpp"

#include <stdexcept>

namespace charstack {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// x^n - 1 = prod_{d | n} Phi_d(x); peel off the proper divisors by exact division.
std::vector<Int> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1 required");
    std::vector<Int> poly(static_cast<size_t>(n) + 1, Int(0));
    poly.front() = -1;
    poly.back() = 1; // x^n - 1
    auto divide = [](std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> q(a.size() - b.size() + 1, Int(0));
        std::vector<Int> r = a;
        for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
            Int c = r[i + b.size() - 1] / b.back();
            q[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
        }
        a = q;
    };
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Int> phi_d;
        {
            // recursion depth is tiny (divisor chains)
            std::vector<Int> sub = cyclotomic_polynomial(d);
            phi_d = std::move(sub);
        }
        divide(poly, phi_d);
    }
    return poly;
}

CycloRing::CycloRing(long n) : n_(n) {
    std::vector<Int> phi = cyclotomic_polynomial(n);
    phi_.reserve(phi.size());
    for (const Int& c : phi) phi_.emplace_back(c);
    root_powers_.resize(static_cast<size_t>(n));
    for (long e = 0; e < n; ++e) {
        std::vector<Rat> v(static_cast<size_t>(e) + 1, Rat(0));
        v.back() = 1;
        root_powers_[static_cast<size_t>(e)] = reduce(std::move(v));
    }
}

CycloRingPtr CycloRing::make(long n) { return CycloRingPtr(new CycloRing(n)); }

std::vector<Rat> CycloRing::reduce(std::vector<Rat> v) const {
    size_t deg = phi_.size() - 1;
    for (size_t i = v.size(); i-- > deg;) {
        Rat c = v[i];
        if (c == 0) continue;
        // phi is monic: subtract c * x^{i-deg} * phi
        for (size_t j = 0; j < phi_.size(); ++j) v[i - deg + j] -= c * phi_[j];
    }
    v.resize(deg, Rat(0));
    while (v.size() < deg) v.emplace_back(0);
    return v;
}

const std::vector<Rat>& CycloRing::power_of_root(long e) const {
    long m = e % n_;
    if (m < 0) m += n_;
    return root_powers_[static_cast<size_t>(m)];
}

CycloNum::CycloNum(CycloRingPtr ring, std::vector<Rat> coeffs) : ring_(std::move(ring)) {
    coeffs_ = ring_->reduce(std::move(coeffs));
}

CycloNum CycloNum::zero(const CycloRingPtr& ring) {
    return CycloNum(ring, std::vector<Rat>(static_cast<size_t>(ring->degree()), Rat(0)));
}

CycloNum CycloNum::from_rat(const CycloRingPtr& ring, const Rat& c) {
    std::vector<Rat> v(static_cast<size_t>(ring->degree()), Rat(0));
    if (!v.empty()) v[0] = c;
    return CycloNum(ring, std::move(v));
}

CycloNum CycloNum::root(const CycloRingPtr& ring, long e) {
    return CycloNum(ring, ring->power_of_root(e));
}

bool CycloNum::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat CycloNum::as_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
    return coeffs_.empty() ? Rat(0) : coeffs_[0];
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    if (ring_->n() != o.ring_->n()) throw std::invalid_argument("cyclotomic ring mismatch");
    CycloNum r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
    if (ring_->n() != o.ring_->n()) throw std::invalid_argument("cyclotomic ring mismatch");
    std::vector<Rat> prod(2 * coeffs_.size(), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return CycloNum(ring_, std::move(prod));
}

CycloNum CycloNum::operator*(const Rat& c) const {
    CycloNum r = *this;
    for (Rat& x : r.coeffs_) x *= c;
    return r;
}

bool CycloNum::operator==(const CycloNum& o) const {
    return ring_->n() == o.ring_->n() && coeffs_ == o.coeffs_;
}

CycloNum CycloNum::conj() const {
    CycloNum r = zero(ring_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        r = r + root(ring_, -static_cast<long>(i)) * coeffs_[i];
    }
    return r;
}

} // namespace charstack
