#pragma once

#include "combinach/finite_set.hpp"
#include "combinach/ordinal.hpp"

namespace combinach {

// Membership in the Schreier family S_alpha over the positive integers:
//   S_0 = sets of size <= 1;
//   S_{b+1} = unions of n consecutive nonempty members of S_b with
//             n <= min of the union;
//   S_a (a limit) = sets F in S_{xi(a,k)} for some k <= min(F), with the
//             canonical fundamental sequence xi from the ordinal module.
// The empty set belongs to every S_alpha.
bool schreier_contains(const OrdinalCNF& alpha, const FiniteSet& set);

}  // namespace combinach
