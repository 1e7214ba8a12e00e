#pragma once

#include "stacks/groups.hpp"

namespace charstack {

// C_m = sum of the primitive m-th roots of unity, evaluated exactly in
// Q[x]/Phi_m (equals the Moebius function, which the tests verify
// independently).
long cyclotomic_C(long m);

// Delta^s_r = phi(r_1)...phi(r_k) sum_{j=0}^{d'-1} prod_i
//             C_{r_i/gcd(r_i,s_i+j)} / phi(r_i/gcd(r_i,s_i+j)).
// Requires r_i | d_i.
Rat delta_coeff(const std::vector<int>& r, const CharacterOfA& chi, const TupleData& t);

// R_{d_1,...,d_k}: all tuples of divisors of the d_i, in lexicographic order.
std::vector<std::vector<int>> divisor_tuples(const std::vector<int>& d);

} // namespace charstack
