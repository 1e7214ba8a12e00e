#pragma once

#include "stacks/classdata.hpp"

namespace charstack {

// Failure evidence for a genericity check: either the determinant condition
// or some r-eigenvalue selection multiplying to 1.
struct GenericityWitness {
    bool generic = true;
    bool det_failed = false;
    int r = 0;                      // selection size, 0 when det_failed
    long zeta_exp = -1;             // offending zeta (PGL check), -1 for GL
    std::vector<long> selection;    // per class: the selected eigenvalue sum
    std::string to_string() const;
};

// HLV genericity for a tuple of split GL_n classes over Z/N: product of
// determinants is 1, and no selection of r eigenvalues from each class
// (0 < r < n) multiplies to 1.
bool is_generic_gln(const std::vector<ClassDatum>& classes, GenericityWitness* witness = nullptr);

} // namespace charstack
