#pragma once

#include "symfunc/symfunc.hpp"

#include <string>

namespace charstack {

// Schur expansion of the modified Macdonald polynomial H~_lambda(x; q, t).
// Coefficients are polynomials in (q, t) with non-negative integer
// coefficients; the coefficient of s_{(n)} is 1.
struct MacdonaldEntry {
    Partition lambda;
    std::map<Partition, RatFunc> schur_coeffs; // over vars {"q","t"}
};

// Computed by solving the triangularity axioms as an exact linear system:
//   H~[X(1-q)] in span{s_mu : mu >= lambda},
//   H~[X(1-t)] in span{s_mu : mu >= lambda'},
//   <H~, s_{(n)}> = 1.
// Results are cached in memory and, if a cache directory is configured, on
// disk (one file per degree, atomic rename on write).
const MacdonaldEntry& modified_macdonald(const Partition& lambda, int max_degree = 8);

// Cache directory: explicit path wins over CHARSTACK_CACHE_DIR; empty string
// disables the disk cache.
void set_macdonald_cache_dir(const std::string& dir);
std::string macdonald_cache_dir();
// Drop the in-memory entries (forces disk reload / recompute).
void macdonald_clear_memory_cache();

} // namespace charstack
