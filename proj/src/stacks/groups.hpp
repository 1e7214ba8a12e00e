#pragma once

#include "stacks/genericity.hpp"

#include <optional>

namespace charstack {

// A PGL_n class given by a chosen GL_n lift plus its stabilizer order.
struct PGLClassDatum {
    ClassDatum lift;
    int d = 1; // |A(C)|
};

// Character of A(C_1) x ... x A(C_k): s_i is the exponent of chi_i on the
// canonical generator zeta_{d'}^{d'/d_i} of A(C_i), 0 <= s_i < d_i.
struct CharacterOfA {
    std::vector<int> s;
};

// All group data attached to a tuple of PGL_n classes.
struct TupleData {
    int n = 0;
    long modulus = 1;
    std::vector<PGLClassDatum> classes;
    std::optional<long> lambda_exp; // exponent with n*lambda = sum of det exponents
    std::vector<int> d;             // d_i = |A(C_i)|
    long dprime = 1;                // lcm of the d_i
    long iota = 1;                  // n / d'
    std::vector<long> dprime_i;     // d'/d_i, with gcd над i equal to 1
    long a_order = 1;               // |A| = prod d_i
    long h_order = 1;               // |H| = |A|/d'
    // elements of H as exponent vectors in Z/n (y_i = zeta_n^{e_i})
    std::vector<std::vector<long>> h_elements;

    std::vector<ClassDatum> lifts() const;
    MultiType multitype() const;
    std::vector<int> order_of(const std::vector<long>& h_elem) const; // o(y) per slot
};

// Populates TupleData from the lifts (computes every derived field).
TupleData h_groups(const std::vector<ClassDatum>& classes);

// PGL genericity: every (k+1)-tuple C(zeta), zeta in mu_n, is generic.
bool is_generic_pgl(const TupleData& t, GenericityWitness* witness = nullptr);

// Checked constructor for s_chi: validates 0 <= s_i < d_i.
CharacterOfA s_chi(const std::vector<int>& exponents, const TupleData& t);

// Explicit splitting A ~ H x H' of the Lemma; gamma_i come from an extended
// gcd over the d'/d_i. The returned table maps each y in A (as an exponent
// vector) to (h in H, h' exponent in Z/n); verified to be a bijective
// homomorphism on construction.
struct SplittingIso {
    std::vector<long> gamma;
    // key: exponent vector of y in A; value: (exponent vector of h, h')
    std::vector<std::pair<std::vector<long>, std::pair<std::vector<long>, long>>> table;
};
SplittingIso splitting_iso(const TupleData& t);

} // namespace charstack
