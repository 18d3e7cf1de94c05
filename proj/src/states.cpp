#include "qreact/states.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qreact {

namespace {

ComplexMatrix pure_projector(const Eigen::VectorXcd& psi) {
    return psi * psi.adjoint();
}

void require_qubit_count(int n, int minimum, const char* who) {
    if (n < minimum || n > max_qubits) {
        std::ostringstream msg;
        msg << who << ": qubit count must be in [" << minimum << ", "
            << max_qubits << "], got " << n;
        throw StateSpecError(StateSpecErrorCode::bad_parameter, msg.str());
    }
}

} // namespace

DensityMatrix bell() {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
    return DensityMatrix({2, 2}, pure_projector(psi));
}

DensityMatrix singlet() {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    return DensityMatrix({2, 2}, pure_projector(psi));
}

DensityMatrix werner(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw StateSpecError(StateSpecErrorCode::bad_parameter,
                             "werner: lambda must be in [0,1]");
    ComplexMatrix m = lambda * bell().matrix() +
                      (1.0 - lambda) / 4.0 * ComplexMatrix::Identity(4, 4);
    return DensityMatrix({2, 2}, std::move(m));
}

DensityMatrix ghz(int n) {
    require_qubit_count(n, 2, "ghz");
    const int d = 1 << n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d);
    psi(0) = psi(d - 1) = 1.0 / std::sqrt(2.0);
    return DensityMatrix(std::vector<int>(n, 2), pure_projector(psi));
}

DensityMatrix wstate(int n) {
    require_qubit_count(n, 2, "wstate");
    const int d = 1 << n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d);
    for (int k = 0; k < n; ++k) psi(1 << k) = 1.0 / std::sqrt(double(n));
    return DensityMatrix(std::vector<int>(n, 2), pure_projector(psi));
}

DensityMatrix product(const std::vector<std::array<double, 3>>& bloch) {
    if (bloch.empty() || static_cast<int>(bloch.size()) > max_qubits)
        throw StateSpecError(StateSpecErrorCode::bad_parameter,
                             "product: need 1.." + std::to_string(max_qubits) +
                                 " Bloch vectors");
    ComplexMatrix m = ComplexMatrix::Identity(1, 1);
    for (const auto& v : bloch) {
        const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (std::abs(norm - 1.0) > 1e-9)
            throw StateSpecError(StateSpecErrorCode::bad_parameter,
                                 "product: Bloch vector is not unit length");
        const double x = v[0] / norm, y = v[1] / norm, z = v[2] / norm;
        ComplexMatrix q(2, 2);
        q(0, 0) = Complex(0.5 * (1.0 + z), 0.0);
        q(0, 1) = Complex(0.5 * x, -0.5 * y);
        q(1, 0) = Complex(0.5 * x, 0.5 * y);
        q(1, 1) = Complex(0.5 * (1.0 - z), 0.0);
        m = tensor_product(m, q);
    }
    return DensityMatrix(std::vector<int>(bloch.size(), 2), std::move(m));
}

DensityMatrix classical_corr() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(3, 3) = 0.5;
    return DensityMatrix({2, 2}, std::move(m));
}

DensityMatrix random_pure(int n, std::uint64_t seed) {
    require_qubit_count(n, 1, "random-pure");
    const int d = 1 << n;
    // First column of a Haar unitary is a Haar-random pure state.
    Eigen::VectorXcd psi = haar_random_unitary(d, seed).col(0);
    return DensityMatrix(std::vector<int>(n, 2), pure_projector(psi));
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) out.push_back(token);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

double parse_real(const std::string& token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw StateSpecError(StateSpecErrorCode::bad_parameter,
                             "not a number: '" + token + "'");
    }
    if (used != token.size())
        throw StateSpecError(StateSpecErrorCode::bad_parameter,
                             "not a number: '" + token + "'");
    return value;
}

long long parse_integer(const std::string& token) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw StateSpecError(StateSpecErrorCode::bad_parameter,
                             "not an integer: '" + token + "'");
    }
    if (used != token.size())
        throw StateSpecError(StateSpecErrorCode::bad_parameter,
                             "not an integer: '" + token + "'");
    return value;
}

void require_arity(const std::string& name, std::size_t got, std::size_t want) {
    if (got != want) {
        std::ostringstream msg;
        msg << name << " takes " << want << " parameter(s), got " << got;
        throw StateSpecError(StateSpecErrorCode::bad_arity, msg.str());
    }
}

} // namespace

DensityMatrix parse_state_spec(const std::string& text) {
    if (text.rfind("file:", 0) == 0) {
        const std::string path = text.substr(5);
        if (path.empty())
            throw StateSpecError(StateSpecErrorCode::bad_arity, "file: needs a path");
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open state file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            return density_from_json(buf.str());
        } catch (const MalformedStateFile& e) {
            throw StateSpecError(StateSpecErrorCode::malformed_file, e.what());
        } catch (const InvalidDensityMatrix& e) {
            throw StateSpecError(StateSpecErrorCode::invalid_matrix, e.what());
        }
    }

    const auto tokens = split(text, ':');
    if (tokens.empty() || tokens.front().empty())
        throw StateSpecError(StateSpecErrorCode::unknown_name, "empty state spec");
    const std::string name = tokens.front();
    const std::vector<std::string> params(tokens.begin() + 1, tokens.end());

    if (name == "bell") {
        require_arity(name, params.size(), 0);
        return bell();
    }
    if (name == "singlet") {
        require_arity(name, params.size(), 0);
        return singlet();
    }
    if (name == "classical-corr") {
        require_arity(name, params.size(), 0);
        return classical_corr();
    }
    if (name == "werner") {
        require_arity(name, params.size(), 1);
        return werner(parse_real(params[0]));
    }
    if (name == "ghz" || name == "wstate") {
        require_arity(name, params.size(), 1);
        const long long n = parse_integer(params[0]);
        if (n < 2 || n > max_qubits)
            throw StateSpecError(StateSpecErrorCode::bad_parameter,
                                 name + ": qubit count out of range");
        return name == "ghz" ? ghz(static_cast<int>(n)) : wstate(static_cast<int>(n));
    }
    if (name == "product") {
        if (params.empty() || params.size() % 3 != 0)
            throw StateSpecError(StateSpecErrorCode::bad_arity,
                                 "product takes 3 numbers per party");
        std::vector<std::array<double, 3>> bloch;
        for (std::size_t i = 0; i < params.size(); i += 3)
            bloch.push_back({parse_real(params[i]), parse_real(params[i + 1]),
                             parse_real(params[i + 2])});
        return product(bloch);
    }
    if (name == "random-pure") {
        require_arity(name, params.size(), 2);
        const long long n = parse_integer(params[0]);
        const long long seed = parse_integer(params[1]);
        if (n < 1 || n > max_qubits)
            throw StateSpecError(StateSpecErrorCode::bad_parameter,
                                 "random-pure: qubit count out of range");
        return random_pure(static_cast<int>(n), static_cast<std::uint64_t>(seed));
    }
    throw StateSpecError(StateSpecErrorCode::unknown_name,
                         "unknown state name '" + name + "'");
}

} // namespace qreact
