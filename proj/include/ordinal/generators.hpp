#pragma once

#include <cstdint>
#include <vector>

#include "ordinal/lattice.hpp"
#include "ordinal/partition.hpp"
#include "ordinal/poset.hpp"

namespace ordinal {

inline constexpr std::size_t kMaxPartitionAtoms = 8;
inline constexpr std::size_t kMaxBooleanAtoms = 13;

// All partitions of `atoms` ordered by refinement, finest at the bottom.
// Element ids are canonical partition literals ("a|bc").
Poset partition_lattice(std::vector<Atom> atoms);

// Subsets of `atoms` ordered by inclusion; ids are "{}", "{a}", "{a,b}", ...
Poset boolean_lattice(std::vector<Atom> atoms);
std::string subset_id(std::vector<Atom> atoms);
std::vector<Atom> parse_subset_id(const ElementId& id);

// Positive divisors of n ordered by "divides"; ids are decimal.
Poset divisor_lattice(std::uint64_t n);

// 0 <= 1 <= ... <= n-1; ids are decimal.
Poset integer_chain(std::size_t n);

// The algebraic join/meet each generator's order is supposed to realize.
AlgebraOps divisor_ops();        // lcm / gcd
AlgebraOps subset_ops();         // union / intersection
AlgebraOps integer_chain_ops();  // max / min

}  // namespace ordinal
