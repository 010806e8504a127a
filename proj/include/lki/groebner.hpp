#pragma once

#include <vector>

#include "lki/poly.hpp"

namespace lki::heis {

struct GroebnerOptions {
  long long step_cap = 20'000'000;  // reduction steps before giving up
};

/// Full normal form of f modulo basis (every term reduced).
MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      long long* steps = nullptr, long long cap = -1);

/// Buchberger with lcm-degree pair selection, the coprimality and chain
/// criteria, and full inter-reduction; returns the unique reduced (monic)
/// Groebner basis for the ring's order, sorted by leading monomial.
std::vector<MultiPoly> groebner(std::vector<MultiPoly> gens,
                                const GroebnerOptions& opts = {});

/// Generators of the basis lying in the sub-ring spanned by `keep` variables
/// (ring order must make the others dominant for this to be the elimination
/// ideal).
std::vector<MultiPoly> contraction(const std::vector<MultiPoly>& reduced_basis,
                                   const std::vector<int>& keep);

/// True iff f reduces to zero against the basis.
bool reduces_to_zero(const MultiPoly& f, const std::vector<MultiPoly>& basis);

}  // namespace lki::heis
