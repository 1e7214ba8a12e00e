#pragma once

#include "combinat/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charstack {

// A split conjugacy class of GL_n: eigenvalues are exponents in the abstract
// cyclic group Z/N (N plays the role of q-1), each carrying the partition of
// its Jordan blocks.
struct ClassDatum {
    int n = 0;
    long modulus = 1;
    std::vector<std::pair<long, Partition>> eigen; // sorted, distinct exponents

    static ClassDatum make(int n, long modulus, std::vector<std::pair<long, Partition>> eigen);
    std::string to_string() const;
};

// The split type of the class: multiplicities count eigenvalues sharing a
// Jordan partition.
TypeT type_of(const ClassDatum& c);

// dim C = n^2 - sum_z sum_i (lambda(z)'_i)^2; always even and >= 0.
int dim_class(const ClassDatum& c);

// sum of eigenvalue exponents with multiplicity, i.e. det(C) as an exponent.
long det_exponent(const ClassDatum& c);

// d_omega = d_C / 2 with d_C = -2n^2 + 2 + sum dim(C_i). Throws
// std::domain_error when d_C is odd or negative.
int d_omega(const std::vector<ClassDatum>& classes);

// Same computation from the type alone (types determine dimensions).
int d_omega(const MultiType& w);

// Order of A(C) = {z in mu_n : z C = C}; requires n | modulus.
int a_group(const ClassDatum& c);

} // namespace charstack
