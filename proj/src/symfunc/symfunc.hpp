#pragma once

#include "combinat/types.hpp"
#include "exactalg/ratfunc.hpp"
#include "symfunc/transitions.hpp"

#include <functional>
#include <map>

namespace charstack {

enum class Basis { schur, powersum, monomial };

// Homogeneous symmetric function of a fixed degree with coefficients in a
// rational-function field (the coefficient variable set is shared by all
// coefficients).
class SymFunc {
public:
    SymFunc(int degree, Basis basis, std::vector<std::string> cvars);
    SymFunc(int degree, Basis basis, std::vector<std::string> cvars,
            std::map<Partition, RatFunc> coeffs);

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::vector<std::string>& cvars() const { return cvars_; }
    const std::map<Partition, RatFunc>& coeffs() const { return coeffs_; }
    RatFunc coeff(const Partition& p) const;
    void set_coeff(const Partition& p, RatFunc c);

    bool is_zero() const { return coeffs_.empty(); }

    static SymFunc unit(int degree, Basis basis, const Partition& p,
                        std::vector<std::string> cvars);

    SymFunc convert(Basis target) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator*(const RatFunc& c) const;
    // Product of symmetric functions (degrees add).
    SymFunc operator*(const SymFunc& o) const;
    bool operator==(const SymFunc& o) const;

    // Algebra map p_n -> p_{nd}; degree multiplies by d.
    SymFunc plethysm_power(int d) const;
    // Algebra map p_k -> scale(k) * p_k (plethystic substitutions like
    // X -> X(1-q) or X -> X/(1-t)).
    SymFunc plethystic_scale(const std::function<RatFunc(int)>& scale) const;
    // Substitute inside every coefficient.
    SymFunc map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const;

    std::string to_string() const;

private:
    int degree_;
    Basis basis_;
    std::vector<std::string> cvars_;
    std::map<Partition, RatFunc> coeffs_; // only nonzero entries

    void prune();
};

// Hall inner product. Schur functions are orthonormal; computed via
// <p_l, p_m> = delta z_l. Degrees must agree.
RatFunc hall_inner(const SymFunc& f, const SymFunc& g);

// s_omega = prod_i psi_{d_i}(s_{omega^i})^{m_i}.
SymFunc schur_of_type(const TypeT& omega, Basis basis, std::vector<std::string> cvars);

} // namespace charstack
