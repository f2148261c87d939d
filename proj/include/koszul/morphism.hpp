#pragma once

#include <cstddef>
#include <vector>

#include "koszul/sign.hpp"
#include "koszul/symmetric_group.hpp"

namespace koszul {

// Criteria for kappa(-, f) : S_n -> {+1, -1} to be a group morphism.
// All three take the degree vector |f| and reject n < 2 with DomainError.

/// All degrees share a parity, or exactly one is odd.
bool is_morphism(const std::vector<Degree>& degrees);

/// At most one degree is odd.
bool is_constant_one(const std::vector<Degree>& degrees);

/// Checks kappa(st, f) == kappa(s, f) kappa(t, f) over all of S_n x S_n.
/// Throws ResourceError when n > bound.
bool morphism_bruteforce(const std::vector<Degree>& degrees,
                         std::size_t bound = kExhaustiveBound);

} // namespace koszul
