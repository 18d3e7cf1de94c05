#pragma once

// Factory for the named states used throughout the experiments, plus the
// textual state mini-language `name[:param[:param...]]` / `file:<path>`.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qreact/qcore.hpp"

namespace qreact {

// What went wrong while parsing a state spec.  Each value is a distinct
// error code surfaced in the exception.
enum class StateSpecErrorCode {
    unknown_name,
    bad_arity,
    bad_parameter,   // e.g. werner:1.5
    malformed_file,
    invalid_matrix,
};

class StateSpecError : public UsageError {
public:
    StateSpecError(StateSpecErrorCode code, const std::string& what)
        : UsageError(what), code_(code) {}
    StateSpecErrorCode code() const { return code_; }

private:
    StateSpecErrorCode code_;
};

// Resource bound: joint-outcome tables and matrices stay desk-scale.
inline constexpr int max_qubits = 6;

// (|00> + |11>)/sqrt(2).  The Phi+ Bell state; the paper's Eq. for the
// Werner mixture writes this state as |S> and calls it a singlet.
DensityMatrix bell();

// (|01> - |10>)/sqrt(2).  The antisymmetric singlet, invariant under
// U (x) U; the state behind the trapezoid experiment.
DensityMatrix singlet();

// lambda * bell() + (1-lambda)/4 * I.  lambda outside [0,1] is a
// domain error.
DensityMatrix werner(double lambda);

DensityMatrix ghz(int n);
DensityMatrix wstate(int n);

// Product of pure qubit states (I + v.sigma)/2, one unit Bloch vector
// per party.
DensityMatrix product(const std::vector<std::array<double, 3>>& bloch);

// (|00><00| + |11><11|)/2 — classically correlated comparison state.
DensityMatrix classical_corr();

// Haar-random pure state on n qubits, deterministic per seed.
DensityMatrix random_pure(int n, std::uint64_t seed);

// Grammar: name[:param[:param...]] with name in {bell, singlet, werner,
// ghz, wstate, product, classical-corr, random-pure} or file:<path>.
DensityMatrix parse_state_spec(const std::string& text);

} // namespace qreact
