#pragma once

#include "monogamy/states.hpp"

namespace monogamy {

// Concurrence of a pure state across the given cut: sqrt(2 (1 - tr rho_A^2)).
double concurrence_pure(const PureState& psi, const Bipartition& cut);

// Wootters concurrence of a two-qubit density matrix.
double concurrence_two_qubit(const ComplexMatrix& rho);

// Negativity across a cut, in the doubled convention ||rho^{T_A}||_1 - 1,
// where T_A transposes every subsystem on side A of the cut.
double negativity(const ComplexMatrix& rho, const SubsystemLayout& layout, const Bipartition& cut);

// Negativity of a pure state across the given cut: (tr sqrt(rho_A))^2 - 1.
double negativity_pure(const PureState& psi, const Bipartition& cut);

// Convex-roof extended negativity of a two-qubit state; equals the Wootters
// concurrence there, which is the only mixed-state case supported.
double cren_two_qubit(const ComplexMatrix& rho);

}  // namespace monogamy
