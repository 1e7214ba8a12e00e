#pragma once

#include "exactalg/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace charstack {

// Laurent polynomial: integer exponents of either sign, no zero terms stored.
// Used for evaluated quantities (u = q^{1/2}, t).
class LaurentPoly {
public:
    using TermMap = std::map<Exps, Rat>; // plain lex order is fine here

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(std::vector<std::string> vars, const Rat& c);
    static LaurentPoly variable(std::vector<std::string> vars, const std::string& name, int exp = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;

    void add_term(const Exps& e, const Rat& c);
    const Rat* find_term(const Exps& e) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;
    LaurentPoly pow(int e) const; // negative only for single-term polynomials
    bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    int min_degree_in(int var) const; // 0 for zero polynomial
    int max_degree_in(int var) const;

    // True iff every exponent of `var` is even and >= 0.
    bool is_poly_in_square(const std::string& var) const;
    // True iff all exponents >= 0.
    bool is_polynomial() const;
    bool has_integer_coeffs() const;

    // Substitute var -> c (rational constant), e.g. t -> -1. Exponents of the
    // substituted variable must be >= 0 unless c != 0.
    LaurentPoly eval_var(const std::string& var, const Rat& c) const;

    // Reinterpret u^2 as q: requires is_poly_in_square(u).
    LaurentPoly halve_exponents(const std::string& var, const std::string& new_name) const;

    RatFunc to_ratfunc() const;
    // Requires the RatFunc denominator to be a single term.
    static LaurentPoly from_ratfunc(const RatFunc& f);

    LaurentPoly with_vars(const std::vector<std::string>& new_vars) const;

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
    void check_same_vars(const LaurentPoly& o) const;
};

} // namespace charstack
