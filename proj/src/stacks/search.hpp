#pragma once

#include "stacks/groups.hpp"

#include <optional>
#include <random>

namespace charstack {

// Deterministic search for a generic tuple of regular semisimple classes with
// the requested degeneracy pattern (true = degenerate, i.e. |A(C_i)| = 2 for
// n = 2). For n <= 2 the search is exhaustive in lexicographic order of the
// eigenvalue assignment, so either the lexicographically smallest generic
// tuple or a definite "none found" comes back.
std::optional<TupleData> search_generic_tuple(int n, int k, long modulus,
                                              const std::vector<bool>& degenerate);

// Seeded random generic tuples for the symbolic consistency suites (n up to
// ~6). Classes are random split semisimple-by-blocks data with A(C_i)
// containing a requested mu_{d_i}; returns the first generic hit.
std::optional<TupleData> random_generic_tuple(int n, int k, long modulus,
                                              const std::vector<int>& degeneracy,
                                              std::mt19937& rng, int attempts = 200);

} // namespace charstack
