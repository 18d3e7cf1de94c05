#pragma once

// Detector model: per-party measurement directions -> projector pairs ->
// exact joint outcome distribution.  Everything downstream (distances,
// areas, volumes) consumes the OutcomeDistribution produced here.

#include <cmath>
#include <utility>
#include <vector>

#include "qreact/qcore.hpp"

namespace qreact {

/// A measurement direction on the Bloch sphere.  Planar angles live in
/// the x-z great circle: alpha -> (sin alpha, 0, cos alpha).  The angle
/// is the Bloch-sphere direction angle, so projector amplitudes go as
/// alpha/2; this is the convention under which the trapezoid angles of
/// the four-detector experiment actually violate the inequality.
struct Direction {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    static Direction planar(double alpha);
    // Validates |n| = 1 within 1e-12.
    static Direction unit(double x, double y, double z);
};

/// One measurement direction per party.
struct DetectorSetting {
    std::vector<Direction> directions;

    int party_count() const { return static_cast<int>(directions.size()); }
    static DetectorSetting planar(const std::vector<double>& angles);
};

/// Joint probability table over binary outcomes of all parties for fixed
/// settings.  Outcome bitstrings index the table with party 0 as the
/// most significant bit; bit value 0 means the +n projector fired.
class OutcomeDistribution {
public:
    OutcomeDistribution(int parties, std::vector<double> probs);

    int party_count() const { return parties_; }
    int size() const { return static_cast<int>(probs_.size()); }
    // Clamped to 0 on read.
    double prob(int outcome) const {
        const double p = probs_[static_cast<std::size_t>(outcome)];
        return p < 0.0 ? 0.0 : p;
    }
    const std::vector<double>& raw() const { return probs_; }

private:
    int parties_;
    std::vector<double> probs_;
};

// P+- = (I +- n.sigma)/2.
std::pair<ComplexMatrix, ComplexMatrix> projectors(const Direction& dir);

// probs[b] = Tr((x)_i P_{b_i} rho), exact (no sampling).  Fast
// party-by-party tensor contraction.
OutcomeDistribution joint_distribution(const DensityMatrix& rho,
                                       const DetectorSetting& settings);

// Same contract, computed by explicitly building each outcome's Kronecker
// projector and tracing against rho.  Serial reference implementation
// kept for testing the contraction kernel.
OutcomeDistribution joint_distribution_reference(const DensityMatrix& rho,
                                                 const DetectorSetting& settings);

// Sums out the discarded parties; kept parties stay in ascending
// original order.  Empty keep set is a usage error.
OutcomeDistribution marginalize(const OutcomeDistribution& dist,
                                const std::vector<int>& keep);

} // namespace qreact
