#pragma once

// Dense complex linear algebra for few-qubit systems: construction,
// composition, reduction and transformation of density matrices.

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qreact/error.hpp"

namespace qreact {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Entrywise comparison with an explicit absolute tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = 1e-12);

// Kronecker product; dimensions multiply.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// A matrix handed to DensityMatrix that fails the Hermiticity / trace /
// positivity checks.
class InvalidDensityMatrix : public UsageError {
public:
    using UsageError::UsageError;
};

// A state file that is not valid JSON or does not match the
// {"dims":[...],"re":[...],"im":[...]} schema.
class MalformedStateFile : public UsageError {
public:
    using UsageError::UsageError;
};

// Kraus channel whose operators do not satisfy completeness.
class ChannelError : public UsageError {
public:
    using UsageError::UsageError;
};

/// Hermitian, unit-trace, PSD operator on a tensor product of qubit
/// spaces.  Immutable after construction; construction validates:
///   max |rho_ij - conj(rho_ji)| <= 1e-10,
///   |Tr rho - 1|               <= 1e-10,
///   all eigenvalues            >= -1e-9.
class DensityMatrix {
public:
    static constexpr double hermitian_tol = 1e-10;
    static constexpr double trace_tol = 1e-10;
    static constexpr double psd_slack = 1e-9;

    DensityMatrix(std::vector<int> dims, ComplexMatrix matrix);

    int party_count() const { return static_cast<int>(dims_.size()); }
    int dim() const { return static_cast<int>(matrix_.rows()); }
    const std::vector<int>& dims() const { return dims_; }
    const ComplexMatrix& matrix() const { return matrix_; }

    double purity() const; // Tr(rho^2)

private:
    std::vector<int> dims_;
    ComplexMatrix matrix_;
};

// Reduced state on the kept parties (ascending original order); trace
// preserved.  Empty keep set is a usage error.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

// Haar-distributed unitary: QR of a seeded complex-Gaussian matrix with
// the R diagonal phases folded into Q.  Deterministic per seed.
ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed);

// Random mixed state from the Ginibre ensemble, G G^dag / Tr(G G^dag).
// Deterministic per seed; test-input and property-battery generator.
DensityMatrix random_density(const std::vector<int>& dims,
                             std::uint64_t seed);

/// Kraus channel: a list of equally-sized square operators K_i with
/// sum K_i^dag K_i = I (within 1e-9).
struct KrausChannel {
    std::vector<ComplexMatrix> operators;
};

bool channel_is_complete(const KrausChannel& channel, double tol = 1e-9);

// Single-qubit depolarizing channel, rho -> (1-p) rho + p I/2.
KrausChannel depolarizing(double p);

// sum_i K_i rho K_i^dag with the channel embedded on one party.  The
// accumulation is symmetrized so Hermiticity is exact; the result is
// re-validated as a DensityMatrix.
DensityMatrix apply_channel(const DensityMatrix& rho,
                            const KrausChannel& channel, int party);

// JSON interchange format used by the CLI's `--state file:<path>` input:
// {"dims":[2,2,...], "re":[...], "im":[...]} flattened row-major.
std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);

} // namespace qreact
