#include "qreact/infogeom.hpp"

#include <algorithm>
#include <cmath>

namespace qreact {

double shannon_entropy(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p <= 0.0) continue;
        h -= p * std::log2(p);
    }
    return h;
}

namespace {

std::vector<int> sorted_unique(const std::vector<int>& parties) {
    std::vector<int> s(parties);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace

double subset_entropy(const OutcomeDistribution& dist,
                      const std::vector<int>& subset) {
    if (subset.empty()) throw UsageError("subset_entropy: subset must be nonempty");
    const OutcomeDistribution marg = marginalize(dist, subset);
    return shannon_entropy(marg.raw());
}

double conditional_entropy(const OutcomeDistribution& dist,
                           const std::vector<int>& target,
                           const std::vector<int>& given) {
    if (target.empty()) throw UsageError("conditional_entropy: target must be nonempty");
    const auto t = sorted_unique(target);
    const auto g = sorted_unique(given);
    std::vector<int> joint;
    std::set_union(t.begin(), t.end(), g.begin(), g.end(), std::back_inserter(joint));
    if (joint.size() != t.size() + g.size())
        throw UsageError("conditional_entropy: target and given overlap");
    if (g.empty()) return subset_entropy(dist, t);
    return subset_entropy(dist, joint) - subset_entropy(dist, g);
}

double info_distance(const OutcomeDistribution& dist, int i, int j) {
    if (i < 0 || i >= dist.party_count() || j < 0 || j >= dist.party_count())
        throw UsageError("info_distance: party index out of range");
    if (i == j) return 0.0; // degenerate self-distance
    const double h_ij = subset_entropy(dist, {i, j});
    const double h_i = subset_entropy(dist, {i});
    const double h_j = subset_entropy(dist, {j});
    return 2.0 * h_ij - h_i - h_j;
}

EntropyProfile entropy_profile(const OutcomeDistribution& dist,
                               const std::vector<int>& subset) {
    if (subset.empty()) throw UsageError("entropy_profile: subset must be nonempty");
    const auto s = sorted_unique(subset);
    const OutcomeDistribution marg = marginalize(dist, s);
    const int k = static_cast<int>(s.size());

    EntropyProfile profile;
    profile.subset = s;
    profile.values.reserve(k);
    const double h_all = shannon_entropy(marg.raw());
    for (int m = 0; m < k; ++m) {
        if (k == 1) {
            profile.values.push_back(h_all);
            continue;
        }
        std::vector<int> rest;
        for (int q = 0; q < k; ++q)
            if (q != m) rest.push_back(q); // indices within the marginal
        profile.values.push_back(h_all - subset_entropy(marg, rest));
    }
    return profile;
}

double sym_volume(const EntropyProfile& profile, int k) {
    const int n = profile.size();
    if (k < 0 || k > n)
        throw UsageError("sym_volume: order k must be in [0, profile size]");
    // e_k via the stable DP recurrence; fine for nonnegative inputs.
    std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        const double v = profile.values[static_cast<std::size_t>(i)];
        for (int j = std::min(k, i + 1); j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e[static_cast<std::size_t>(k)];
}

double boundary_area(const OutcomeDistribution& dist,
                     const std::vector<int>& subset) {
    const auto s = sorted_unique(subset);
    const int d = static_cast<int>(s.size());
    if (d < 3)
        throw UsageError("boundary_area: needs at least 3 parties "
                         "(bipartite reactivity uses the e_0 convention)");
    double area = 0.0;
    for (int drop = 0; drop < d; ++drop) {
        std::vector<int> face;
        for (int q = 0; q < d; ++q)
            if (q != drop) face.push_back(s[q]);
        area += sym_volume(entropy_profile(dist, face), d - 2);
    }
    return area;
}

} // namespace qreact
