#include "qreact/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <nlohmann/json.hpp>

namespace qreact {

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return ((a - b).cwiseAbs().maxCoeff() <= tol);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

DensityMatrix::DensityMatrix(std::vector<int> dims, ComplexMatrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    if (dims_.empty()) throw InvalidDensityMatrix("density matrix needs at least one party");
    long long total = 1;
    for (int d : dims_) {
        if (d < 2) throw InvalidDensityMatrix("party dimension must be >= 2");
        total *= d;
    }
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() != total) {
        std::ostringstream msg;
        msg << "matrix is " << matrix_.rows() << "x" << matrix_.cols()
            << " but dims multiply to " << total;
        throw InvalidDensityMatrix(msg.str());
    }
    const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > hermitian_tol)
        throw InvalidDensityMatrix("not Hermitian: max |rho_ij - conj(rho_ji)| = " +
                                   std::to_string(herm));
    const double tr_err = std::abs(matrix_.trace() - Complex(1.0, 0.0));
    if (tr_err > trace_tol)
        throw InvalidDensityMatrix("trace differs from 1 by " + std::to_string(tr_err));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -psd_slack)
        throw InvalidDensityMatrix("negative eigenvalue " + std::to_string(min_eig));
}

double DensityMatrix::purity() const {
    return (matrix_ * matrix_).trace().real();
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = rho.party_count();
    if (keep.empty()) throw UsageError("partial_trace: keep set must be nonempty");
    std::vector<int> kept(keep);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (int p : kept)
        if (p < 0 || p >= n)
            throw UsageError("partial_trace: party index out of range");

    std::vector<int> traced;
    for (int p = 0; p < n; ++p)
        if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);

    const auto& dims = rho.dims();
    // Row-major strides: party 0 varies slowest.
    std::vector<long long> stride(n, 1);
    for (int p = n - 2; p >= 0; --p) stride[p] = stride[p + 1] * dims[p + 1];

    long long keep_dim = 1, trace_dim = 1;
    for (int p : kept) keep_dim *= dims[p];
    for (int p : traced) trace_dim *= dims[p];

    auto offset = [&](const std::vector<int>& parties, long long index) {
        long long off = 0;
        for (int k = static_cast<int>(parties.size()) - 1; k >= 0; --k) {
            const int p = parties[k];
            off += (index % dims[p]) * stride[p];
            index /= dims[p];
        }
        return off;
    };

    ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
    for (long long r = 0; r < keep_dim; ++r) {
        const long long row_base = offset(kept, r);
        for (long long c = 0; c < keep_dim; ++c) {
            const long long col_base = offset(kept, c);
            Complex acc(0.0, 0.0);
            for (long long t = 0; t < trace_dim; ++t) {
                const long long toff = offset(traced, t);
                acc += rho.matrix()(row_base + toff, col_base + toff);
            }
            out(r, c) = acc;
        }
    }

    std::vector<int> out_dims;
    for (int p : kept) out_dims.push_back(dims[p]);
    return DensityMatrix(out_dims, std::move(out));
}

namespace {

// Explicit Box-Muller so the Gaussian stream is pinned to the seed and
// not to the standard library's normal_distribution internals.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Complex next_complex() {
        const double re = next();
        const double im = next();
        return Complex(re, im) / std::sqrt(2.0);
    }

private:
    double uniform() {
        // 53-bit mantissa in [0,1)
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace

ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed) {
    if (dim < 1) throw UsageError("haar_random_unitary: dim must be >= 1");
    GaussianStream g(seed);
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = g.next_complex();

    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the gauge: multiply each column by the phase of the matching R
    // diagonal so the distribution is exactly Haar (Mezzadri's recipe).
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double m = std::abs(d);
        const Complex phase = (m > 0.0) ? d / m : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

DensityMatrix random_density(const std::vector<int>& dims, std::uint64_t seed) {
    long long total = 1;
    for (int d : dims) total *= d;
    GaussianStream g(seed);
    ComplexMatrix ginibre(total, total);
    for (long long i = 0; i < total; ++i)
        for (long long j = 0; j < total; ++j) ginibre(i, j) = g.next_complex();
    ComplexMatrix rho = ginibre * ginibre.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()).eval() / 2.0;
    return DensityMatrix(dims, std::move(rho));
}

bool channel_is_complete(const KrausChannel& channel, double tol) {
    if (channel.operators.empty()) return false;
    const Eigen::Index d = channel.operators.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& k : channel.operators) {
        if (k.rows() != d || k.cols() != d) return false;
        sum += k.adjoint() * k;
    }
    return approx_equal(sum, ComplexMatrix::Identity(d, d), tol);
}

KrausChannel depolarizing(double p) {
    if (p < 0.0 || p > 1.0) throw UsageError("depolarizing: p must be in [0,1]");
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    sz << 1, 0, 0, -1;
    KrausChannel ch;
    ch.operators.push_back(std::sqrt(1.0 - 0.75 * p) * id);
    ch.operators.push_back(std::sqrt(0.25 * p) * sx);
    ch.operators.push_back(std::sqrt(0.25 * p) * sy);
    ch.operators.push_back(std::sqrt(0.25 * p) * sz);
    return ch;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel,
                            int party) {
    const int n = rho.party_count();
    if (party < 0 || party >= n) throw UsageError("apply_channel: party index out of range");
    if (channel.operators.empty() ||
        channel.operators.front().rows() != rho.dims()[party])
        throw ChannelError("apply_channel: channel dimension does not match party");
    if (!channel_is_complete(channel))
        throw ChannelError("apply_channel: Kraus operators do not satisfy completeness");

    long long before = 1, after = 1;
    for (int p = 0; p < party; ++p) before *= rho.dims()[p];
    for (int p = party + 1; p < n; ++p) after *= rho.dims()[p];
    const ComplexMatrix id_before = ComplexMatrix::Identity(before, before);
    const ComplexMatrix id_after = ComplexMatrix::Identity(after, after);

    ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (const auto& k : channel.operators) {
        const ComplexMatrix full = tensor_product(tensor_product(id_before, k), id_after);
        out += full * rho.matrix() * full.adjoint();
    }
    out = (out + out.adjoint()).eval() / 2.0;
    return DensityMatrix(rho.dims(), std::move(out));
}

std::string density_to_json(const DensityMatrix& rho) {
    nlohmann::ordered_json j;
    j["dims"] = rho.dims();
    std::vector<double> re, im;
    const int d = rho.dim();
    re.reserve(d * d);
    im.reserve(d * d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            re.push_back(rho.matrix()(r, c).real());
            im.push_back(rho.matrix()(r, c).imag());
        }
    j["re"] = re;
    j["im"] = im;
    return j.dump();
}

DensityMatrix density_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedStateFile(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dims") || !j.contains("re") || !j.contains("im"))
        throw MalformedStateFile("state file must contain dims, re and im");
    std::vector<int> dims;
    std::vector<double> re, im;
    try {
        dims = j.at("dims").get<std::vector<int>>();
        re = j.at("re").get<std::vector<double>>();
        im = j.at("im").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedStateFile(std::string("bad field type in state file: ") + e.what());
    }
    long long total = 1;
    for (int d : dims) {
        if (d < 2) throw MalformedStateFile("party dimension must be >= 2");
        total *= d;
    }
    if (dims.empty() || static_cast<long long>(re.size()) != total * total ||
        re.size() != im.size())
        throw MalformedStateFile("entry count does not match dims");
    ComplexMatrix m(total, total);
    for (long long r = 0; r < total; ++r)
        for (long long c = 0; c < total; ++c) {
            const auto idx = static_cast<std::size_t>(r * total + c);
            m(r, c) = Complex(re[idx], im[idx]);
        }
    return DensityMatrix(dims, std::move(m)); // may throw InvalidDensityMatrix
}

} // namespace qreact
