#include "qreact/measure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qreact {

Direction Direction::planar(double alpha) {
    const double two_pi = 2.0 * M_PI;
    double a = std::fmod(alpha, two_pi);
    if (a < 0.0) a += two_pi;
    return Direction{std::sin(a), 0.0, std::cos(a)};
}

Direction Direction::unit(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (std::abs(norm - 1.0) > 1e-12)
        throw UsageError("Direction: vector must be unit length (|n| - 1 = " +
                         std::to_string(norm - 1.0) + ")");
    return Direction{x, y, z};
}

DetectorSetting DetectorSetting::planar(const std::vector<double>& angles) {
    DetectorSetting s;
    s.directions.reserve(angles.size());
    for (double a : angles) s.directions.push_back(Direction::planar(a));
    return s;
}

OutcomeDistribution::OutcomeDistribution(int parties, std::vector<double> probs)
    : parties_(parties), probs_(std::move(probs)) {
    if (parties_ < 1) throw UsageError("OutcomeDistribution: need at least one party");
    if (probs_.size() != (std::size_t(1) << parties_))
        throw UsageError("OutcomeDistribution: table size must be 2^parties");
    double sum = 0.0;
    for (double p : probs_) {
        // Tolerate the same slack as the density-matrix PSD check.
        if (p < -DensityMatrix::psd_slack)
            throw DegenerateError("OutcomeDistribution: probability " +
                                  std::to_string(p) + " below negativity slack");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw DegenerateError("OutcomeDistribution: probabilities sum to " +
                              std::to_string(sum));
}

std::pair<ComplexMatrix, ComplexMatrix> projectors(const Direction& dir) {
    ComplexMatrix plus(2, 2);
    plus(0, 0) = Complex(0.5 * (1.0 + dir.z), 0.0);
    plus(0, 1) = Complex(0.5 * dir.x, -0.5 * dir.y);
    plus(1, 0) = Complex(0.5 * dir.x, 0.5 * dir.y);
    plus(1, 1) = Complex(0.5 * (1.0 - dir.z), 0.0);
    ComplexMatrix minus = ComplexMatrix::Identity(2, 2) - plus;
    return {plus, minus};
}

namespace {

void require_arity(const DensityMatrix& rho, const DetectorSetting& settings) {
    if (settings.party_count() != rho.party_count()) {
        std::ostringstream msg;
        msg << "joint_distribution: " << settings.party_count()
            << " directions for a " << rho.party_count() << "-party state";
        throw UsageError(msg.str());
    }
    for (int d : rho.dims())
        if (d != 2)
            throw UsageError("joint_distribution: detector model is qubit-only");
}

} // namespace

OutcomeDistribution joint_distribution(const DensityMatrix& rho,
                                       const DetectorSetting& settings) {
    require_arity(rho, settings);
    const int n = rho.party_count();
    const std::size_t dim = std::size_t(1) << n;

    // p(b) = sum_{r,c} prod_i P_{b_i}[r_i, c_i] * rho[c, r].  Work on
    // A = rho^T and contract one party at a time, most significant bit
    // first.  After step i the buffer holds, for each processed outcome
    // prefix o, a (2^{n-i} x 2^{n-i}) block indexed by the remaining
    // row/column bits.
    std::vector<Complex> buf(dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            buf[r * dim + c] = rho.matrix()(static_cast<Eigen::Index>(c),
                                            static_cast<Eigen::Index>(r));
    std::vector<Complex> next;

    for (int i = 0; i < n; ++i) {
        const auto [plus, minus] = projectors(settings.directions[i]);
        const ComplexMatrix* proj[2] = {&plus, &minus};
        const std::size_t outcomes = std::size_t(1) << i;      // prefixes so far
        const std::size_t rest = std::size_t(1) << (n - i);    // block edge
        const std::size_t half = rest >> 1;
        next.assign(outcomes * 2 * half * half, Complex(0.0, 0.0));
        for (std::size_t o = 0; o < outcomes; ++o) {
            const Complex* block = buf.data() + o * rest * rest;
            for (int s = 0; s < 2; ++s) {
                const ComplexMatrix& p = *proj[s];
                Complex* out = next.data() + (o * 2 + s) * half * half;
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b) {
                        const Complex w = p(static_cast<Eigen::Index>(a),
                                            static_cast<Eigen::Index>(b));
                        if (w == Complex(0.0, 0.0)) continue;
                        const Complex* src = block + (a * half) * rest + b * half;
                        for (std::size_t rr = 0; rr < half; ++rr)
                            for (std::size_t cc = 0; cc < half; ++cc)
                                out[rr * half + cc] += w * src[rr * rest + cc];
                    }
            }
        }
        buf.swap(next);
    }

    std::vector<double> probs(dim);
    for (std::size_t b = 0; b < dim; ++b) probs[b] = buf[b].real();
    return OutcomeDistribution(n, std::move(probs));
}

OutcomeDistribution joint_distribution_reference(const DensityMatrix& rho,
                                                 const DetectorSetting& settings) {
    require_arity(rho, settings);
    const int n = rho.party_count();
    const std::size_t dim = std::size_t(1) << n;

    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pairs;
    pairs.reserve(n);
    for (int i = 0; i < n; ++i) pairs.push_back(projectors(settings.directions[i]));

    std::vector<double> probs(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        ComplexMatrix full = ComplexMatrix::Identity(1, 1);
        for (int i = 0; i < n; ++i) {
            const bool minus = (b >> (n - 1 - i)) & 1u;
            full = tensor_product(full, minus ? pairs[i].second : pairs[i].first);
        }
        probs[b] = (full * rho.matrix()).trace().real();
    }
    return OutcomeDistribution(n, std::move(probs));
}

OutcomeDistribution marginalize(const OutcomeDistribution& dist,
                                const std::vector<int>& keep) {
    const int n = dist.party_count();
    if (keep.empty()) throw UsageError("marginalize: keep set must be nonempty");
    std::vector<int> kept(keep);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (int p : kept)
        if (p < 0 || p >= n) throw UsageError("marginalize: party index out of range");

    const int k = static_cast<int>(kept.size());
    std::vector<double> out(std::size_t(1) << k, 0.0);
    const std::size_t full = std::size_t(1) << n;
    for (std::size_t b = 0; b < full; ++b) {
        std::size_t idx = 0;
        for (int j = 0; j < k; ++j) {
            const int bit = (b >> (n - 1 - kept[j])) & 1u;
            idx = (idx << 1) | static_cast<std::size_t>(bit);
        }
        out[idx] += dist.raw()[b];
    }
    return OutcomeDistribution(k, std::move(out));
}

} // namespace qreact
