#pragma once

#include "combinat/types.hpp"
#include "exactalg/laurent.hpp"
#include "symfunc/macdonald.hpp"

namespace charstack {

// The kernel H_w(z,w) as an exact rational function in the variables {z, w}:
//   (1-z^2)(w^2-1)(-1)^{r(w)} sum_{|l|=n} Hook_l(z,w) prod_i <H~_l(x; z^2,w^2), s_{w_i'}>.
RatFunc hlv_kernel(const MultiType& w);

// Same kernel with z, w replaced by rational-function images over another
// variable set; each summand is formed directly in the target field (the
// specializations used by the theorems make individual summands finite).
RatFunc hlv_kernel_image(const MultiType& w, const RatFunc& image_z, const RatFunc& image_w);

// Hook function of a partition: prod over cells of
// 1/((z^{2a+2} - w^{2l})(z^{2a} - w^{2l+2})), over variables {z, w}.
RatFunc hook_function(const Partition& lambda);

// Substitute each variable of f by a Laurent polynomial and verify that the
// denominator divides the numerator exactly; throws std::domain_error
// ("denominator does not clear") otherwise.
LaurentPoly substitute_and_clear(const RatFunc& f,
                                 const std::map<std::string, LaurentPoly>& subst,
                                 const std::vector<std::string>& target_vars);

} // namespace charstack
