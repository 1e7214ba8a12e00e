#pragma once

#include "combinat/partition.hpp"

#include <map>
#include <vector>

namespace charstack {

// Basis-change data for symmetric functions of one degree. All matrices are
// indexed by the fixed partition order of partitions_of(n); M[i][j] is the
// coefficient of target-basis element i in source-basis element j.
struct Transitions {
    int degree = 0;
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<std::vector<Rat>> p_from_s; // p-expansion of Schur functions
    std::vector<std::vector<Rat>> s_from_p;
    std::vector<std::vector<Rat>> m_from_s; // Kostka numbers K_{lambda,mu}
    std::vector<std::vector<Rat>> s_from_m;
};

const Transitions& transitions(int degree);

// Number of semistandard tableaux of the given shape and content.
long kostka_number(const Partition& shape, const Partition& content);

// Character-table route to the Schur/power-sum transition, used as a test
// oracle: chi^lambda(mu) by Murnaghan-Nakayama recursion.
long murnaghan_nakayama(const Partition& lambda, const Partition& mu);

} // namespace charstack
