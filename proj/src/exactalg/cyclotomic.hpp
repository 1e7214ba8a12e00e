#pragma once

#include "exactalg/rational.hpp"

#include <memory>
#include <vector>

namespace charstack {

// Exact arithmetic in Q[x]/Phi_N(x), with x a primitive N-th root of unity.
class CycloRing;
using CycloRingPtr = std::shared_ptr<const CycloRing>;

class CycloNum {
public:
    CycloNum() = default;
    CycloNum(CycloRingPtr ring, std::vector<Rat> coeffs); // reduced in place

    static CycloNum zero(const CycloRingPtr& ring);
    static CycloNum from_rat(const CycloRingPtr& ring, const Rat& c);
    // zeta_N^e for any integer e
    static CycloNum root(const CycloRingPtr& ring, long e);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const CycloRingPtr& ring() const { return ring_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat as_rational() const; // throws if not rational

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator*(const Rat& c) const;
    bool operator==(const CycloNum& o) const;

    CycloNum conj() const; // complex conjugation, zeta -> zeta^{-1}

private:
    CycloRingPtr ring_;
    std::vector<Rat> coeffs_; // degree < phi(N)
};

class CycloRing : public std::enable_shared_from_this<CycloRing> {
public:
    static CycloRingPtr make(long n);

    long n() const { return n_; }
    long degree() const { return static_cast<long>(phi_.size()) - 1; }
    const std::vector<Rat>& modulus() const { return phi_; } // Phi_n coefficients, low to high

    // Reduce an arbitrary coefficient vector modulo Phi_n.
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    // Reduced representation of x^e (e taken mod n).
    const std::vector<Rat>& power_of_root(long e) const;

private:
    explicit CycloRing(long n);
    long n_;
    std::vector<Rat> phi_;
    std::vector<std::vector<Rat>> root_powers_; // x^e reduced, e in [0, n)
};

// Integer coefficients of the N-th cyclotomic polynomial, low to high degree.
std::vector<Int> cyclotomic_polynomial(long n);

// Euler totient.
long euler_phi(long n);

} // namespace charstack
