#pragma once

// Entropic geometry on outcome distributions: Shannon entropies,
// information distance, conditional-entropy profiles, and the
// elementary-symmetric-polynomial areas/volumes they feed.
//
// All entropies are in bits.  The k-dimensional "volume" of a party
// subset is the elementary symmetric polynomial e_k of its conditional
// entropy profile; the d=2 face value e_1 is exactly the pairwise
// information distance, which is what makes the tripartite boundary a
// perimeter of pairwise distances.

#include <span>
#include <vector>

#include "qreact/measure.hpp"

namespace qreact {

// -sum p log2 p with 0 log 0 := 0; negative entries are read as 0.
double shannon_entropy(std::span<const double> probs);

// Entropy of the distribution marginalized onto `subset`.
double subset_entropy(const OutcomeDistribution& dist,
                      const std::vector<int>& subset);

// H(target | given) = H(target u given) - H(given).  `given` may be
// empty; overlap is a usage error.
double conditional_entropy(const OutcomeDistribution& dist,
                           const std::vector<int>& target,
                           const std::vector<int>& given);

// D_ij = H(i|j) + H(j|i) = 2 H_ij - H_i - H_j.  Symmetric, nonnegative;
// i == j is the degenerate self-distance 0.
double info_distance(const OutcomeDistribution& dist, int i, int j);

/// Conditional entropies H(i | subset \ {i}), one per party of the
/// subset, computed on the subset's marginal (parties outside the
/// subset are summed out first).
struct EntropyProfile {
    std::vector<int> subset;     // ascending party indices
    std::vector<double> values;  // bits, aligned with subset

    int size() const { return static_cast<int>(values.size()); }
};

EntropyProfile entropy_profile(const OutcomeDistribution& dist,
                               const std::vector<int>& subset);

// Elementary symmetric polynomial e_k of the profile values; e_0 := 1.
// k outside [0, |profile|] is a usage error.
double sym_volume(const EntropyProfile& profile, int k);

// Sum over the |subset| faces (drop one party) of the face's
// e_{|subset|-2} volume.  Requires |subset| >= 3; the bipartite case is
// handled by the averaging layer's e_0 convention.
double boundary_area(const OutcomeDistribution& dist,
                     const std::vector<int>& subset);

} // namespace qreact
