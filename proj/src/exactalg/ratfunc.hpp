#pragma once

#include "exactalg/multipoly.hpp"

#include <map>
#include <string>

namespace charstack {

// Rational function over Q in the variables of its numerator/denominator.
// Canonical form: gcd(num, den) = 1, den has coprime integer coefficients and
// positive graded-lex leading coefficient. Equality is structural.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc zero(std::vector<std::string> vars);
    static RatFunc one(std::vector<std::string> vars);
    static RatFunc constant(std::vector<std::string> vars, const Rat& c);
    static RatFunc variable(std::vector<std::string> vars, const std::string& name, int exp = 1);
    static RatFunc from_poly(MultiPoly p);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator*(const Rat& c) const;
    RatFunc pow(int e) const; // negative allowed
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc with_vars(const std::vector<std::string>& new_vars) const;

    // Substitute each variable by a rational function over `target_vars`.
    // Every variable must be mapped.
    RatFunc subst(const std::map<std::string, RatFunc>& images,
                  const std::vector<std::string>& target_vars) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    MultiPoly num_, den_; // default-constructed = 0/1 over empty varset
    void normalize();
    void normalize_content();
};

} // namespace charstack
