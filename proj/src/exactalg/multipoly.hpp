#pragma once

#include "exactalg/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace charstack {

// Exponent vector, one entry per variable, all entries >= 0.
using Exps = std::vector<int>;

// Graded lexicographic order: total degree first, then lex.
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

// Sparse multivariate polynomial over Q with a fixed, ordered variable list.
// Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exps, Rat, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name, int exp = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    int nvars() const { return static_cast<int>(vars_.size()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()
    int total_degree() const;   // -1 for the zero polynomial
    int degree_in(int var) const;

    void set_term(const Exps& e, const Rat& c);
    void add_term(const Exps& e, const Rat& c);
    const Rat* find_term(const Exps& e) const;

    // Leading term under graded-lex.
    const std::pair<const Exps, Rat>& leading() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly pow(int e) const;
    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    // Rational content: the positive rational c such that this/c has coprime
    // integer coefficients and positive graded-lex leading coefficient is not
    // forced here (sign stays with the polynomial).
    Rat rational_content() const; // 0 for the zero polynomial
    MultiPoly primitive_part() const;

    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
    // Exact division; throws std::domain_error if b does not divide a.
    static MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

    // Rename/extend the variable list; `mapping[i]` is the index of old var i
    // in the new list.
    MultiPoly with_vars(const std::vector<std::string>& new_vars) const;

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void check_same_vars(const MultiPoly& o) const;
};

} // namespace charstack
