#pragma once

#include "monogamy/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace monogamy {

inline constexpr double kNormTol = 1e-12;

// Normalized multiqubit pure state over the computational basis.
struct PureState {
    int num_qubits = 0;
    ComplexVector amplitudes;

    PureState() = default;

    PureState(int n, ComplexVector amps) : num_qubits(n), amplitudes(std::move(amps)) {
        if (num_qubits < 1) throw std::invalid_argument("state needs at least one qubit");
        if (amplitudes.size() != (1L << num_qubits))
            throw std::invalid_argument("amplitude count must be 2^n");
        if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTol)
            throw std::invalid_argument("state is not normalized");
    }

    SubsystemLayout layout() const { return SubsystemLayout::qubits(num_qubits); }
};

// A cut of the qubit register into side A (listed) and side B (the rest).
struct Bipartition {
    std::vector<int> side_a;

    std::vector<int> side_b(int num_qubits) const {
        detail::validate_subset(side_a, num_qubits);
        std::vector<int> b = detail::complement_of(side_a, num_qubits);
        if (b.empty()) throw std::invalid_argument("cut must leave both sides nonempty");
        return b;
    }
};

inline ComplexMatrix density_matrix(const PureState& psi) {
    return psi.amplitudes * psi.amplitudes.adjoint();
}

// Reduced state of the listed qubits.
inline ComplexMatrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
    return partial_trace(density_matrix(psi), psi.layout(), keep);
}

}  // namespace monogamy
