#include "monogamy/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace monogamy {

namespace {

double clamp_measure(double v) {
    if (v < 0.0 && v >= -kPsdClampTol) return 0.0;
    return v;
}

// sigma_y tensor sigma_y, the spin-flip kernel of the Wootters formula.
ComplexMatrix spin_flip_kernel() {
    ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
    yy(0, 3) = Complex(-1.0, 0.0);
    yy(1, 2) = Complex(1.0, 0.0);
    yy(2, 1) = Complex(1.0, 0.0);
    yy(3, 0) = Complex(-1.0, 0.0);
    return yy;
}

void check_density(const ComplexMatrix& rho, Eigen::Index dim) {
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("density matrix has wrong dimension");
    if (!is_hermitian(rho)) throw std::invalid_argument("density matrix is not Hermitian");
}

}  // namespace

double concurrence_pure(const PureState& psi, const Bipartition& cut) {
    cut.side_b(psi.num_qubits);  // validates the cut
    ComplexMatrix rho_a = reduced_density(psi, cut.side_a);
    double purity = (rho_a * rho_a).trace().real();
    return clamp_measure(std::sqrt(std::max(0.0, 2.0 * (1.0 - purity))));
}

double concurrence_two_qubit(const ComplexMatrix& rho) {
    check_density(rho, 4);
    // sqrt(mu_i) for mu_i = eigenvalues of rho (YY) conj(rho) (YY) are the
    // singular values of L^T (YY) L where rho = L L^dagger; this form avoids
    // squaring the spectrum and keeps small concurrences accurate.
    ComplexMatrix l = psd_factor(rho);
    ComplexMatrix s = l.transpose() * spin_flip_kernel() * l;
    Eigen::JacobiSVD<ComplexMatrix> svd(s);
    RealVector sv = svd.singularValues();
    double c = 2.0 * sv(0) - sv.sum();
    return std::max(0.0, c);
}

double negativity(const ComplexMatrix& rho, const SubsystemLayout& layout,
                  const Bipartition& cut) {
    check_density(rho, layout.total_dim());
    cut.side_b(layout.subsystems());  // validates the cut
    ComplexMatrix pt = rho;
    for (int s : cut.side_a) pt = partial_transpose(pt, layout, s);
    return clamp_measure(trace_norm(pt) - 1.0);
}

double negativity_pure(const PureState& psi, const Bipartition& cut) {
    cut.side_b(psi.num_qubits);  // validates the cut
    ComplexMatrix rho_a = reduced_density(psi, cut.side_a);
    double root_sum = 0.0;
    RealVector vals = hermitian_eigenvalues(rho_a);
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        double v = vals(i);
        if (v < -kPsdErrorTol) throw std::domain_error("marginal is not positive semidefinite");
        root_sum += std::sqrt(std::max(0.0, v));
    }
    return clamp_measure(root_sum * root_sum - 1.0);
}

double cren_two_qubit(const ComplexMatrix& rho) { return concurrence_two_qubit(rho); }

}  // namespace monogamy
