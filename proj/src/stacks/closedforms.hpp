#pragma once

#include "exactalg/ratfunc.hpp"

namespace charstack {

// The n = 2 closed forms A_r(z,w) for a fixed number of punctures k,
// 0 <= r <= k (two-case formula; r counts nonsplit components).
RatFunc a_r_closed_form(int r, int k);

// Coefficient of y^l x^{m1+m2-l} in (x-y)^{m1} (x+y)^{m2}.
long c_mml(int m1, int m2, int l);

} // namespace charstack
