#pragma once

#include "stacks/delta.hpp"
#include "symfunc/kernel.hpp"

namespace charstack {

enum class Backing { theorem, conjecture };

// A computed cohomology polynomial plus the provenance metadata the CLI
// reports. E- and pure-part values live in {"q"}; IH values in {"q","t"}.
struct PolyResult {
    LaurentPoly value;
    Backing backing = Backing::theorem;
    int d_omega = 0;
    long iota = 0;
    long a_order = 0;
    long h_order = 0;
};

// Specializations of the kernel, cleared to Laurent polynomials in u=q^{1/2}
// (or (u,t)); "denominator does not clear" propagates from exactalg.
LaurentPoly kernel_at_sqrt_q(const MultiType& w);        // H_w(sqrt q, 1/sqrt q), vars {"u"}
LaurentPoly kernel_at_minus_t_sqrt_q(const MultiType& w); // H_w(-t sqrt q, 1/sqrt q), vars {"u","t"}
LaurentPoly kernel_at_pure(const MultiType& w);          // H_w(0, sqrt q), vars {"u"}

// IE(M_C; q) = q^{d_w} H_w(sqrt q, 1/sqrt q); polynomial in q with integer
// coefficients (asserted).
PolyResult e_poly_gln(const MultiType& w);
// Conjectural IH_c(M_C; q,t) = (q t^2)^{d_w} H_w(-t sqrt q, 1/sqrt q).
PolyResult ih_poly_gln(const MultiType& w);
// Twisted: q^{d_w} H_{w_o}(sqrt q, 1/sqrt q); d_w comes from the untwisted w.
PolyResult e_poly_twisted(const MultiType& w, const std::vector<int>& orders);

// PGL_n with local system chi:
//   IE = (q^{d_w} iota/|A|) sum_{r in R} Delta^{s_chi}_r H_{w_r}(sqrt q, 1/sqrt q).
PolyResult e_poly_pgl(const TupleData& t, const CharacterOfA& chi);
PolyResult ih_poly_pgl(const TupleData& t, const CharacterOfA& chi);
// Pure part: q^{d_w} (iota/|A|) sum_r Delta^{s_chi}_r H_{w_r}(0, sqrt q).
PolyResult pure_part_pgl(const TupleData& t, const CharacterOfA& chi);
// Tensor-multiplicity formula: (iota/|A|) sum_r Delta^{s_chi}_r H_{w_r}(0, sqrt q).
PolyResult multiplicity_formula_sln(const TupleData& t, const CharacterOfA& chi);

// Independent route to e_poly_pgl: the I(C) x H(C) double sum of chi-weighted
// twisted E-polynomials, with chi(y) exact in Q[x]/Phi_{d'}.
PolyResult e_poly_pgl_direct(const TupleData& t, const CharacterOfA& chi);

// Evaluate a {"q"}- or {"q","t"}-Laurent polynomial at a concrete q (and t).
Rat eval_at_q(const LaurentPoly& p, const Rat& q);

} // namespace charstack
