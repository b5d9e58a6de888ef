#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace monogamy {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerance for treating a matrix as Hermitian (max elementwise deviation).
inline constexpr double kHermitianTol = 1e-12;
// Negative eigenvalues above this magnitude are clamped to zero; below it they
// are treated as evidence the input is not positive semidefinite.
inline constexpr double kPsdClampTol = 1e-12;
inline constexpr double kPsdErrorTol = 1e-9;

// Ordered list of local dimensions. Subsystem 0 is the most significant digit
// of a basis index, so for qubits the basis ket |q0 q1 ... q_{n-1}> sits at
// index q0*2^(n-1) + q1*2^(n-2) + ... + q_{n-1}.
struct SubsystemLayout {
    std::vector<int> local_dims;

    static SubsystemLayout qubits(int n) {
        if (n < 1) throw std::invalid_argument("qubit count must be positive");
        return SubsystemLayout{std::vector<int>(static_cast<std::size_t>(n), 2)};
    }

    int subsystems() const { return static_cast<int>(local_dims.size()); }

    long total_dim() const {
        long d = 1;
        for (int dim : local_dims) {
            if (dim < 1) throw std::invalid_argument("local dimensions must be positive");
            d *= dim;
        }
        return d;
    }

    void validate_against(long dim) const {
        if (local_dims.empty()) throw std::invalid_argument("layout has no subsystems");
        if (total_dim() != dim)
            throw std::invalid_argument("layout dimensions do not match matrix size");
    }
};

namespace detail {

// Flat index <-> per-subsystem digits, most significant subsystem first.
inline void decompose_index(long index, const std::vector<int>& dims, std::vector<int>& digits) {
    for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
        digits[static_cast<std::size_t>(s)] = static_cast<int>(index % dims[static_cast<std::size_t>(s)]);
        index /= dims[static_cast<std::size_t>(s)];
    }
}

inline long compose_index(const std::vector<int>& digits, const std::vector<int>& dims) {
    long index = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) index = index * dims[s] + digits[s];
    return index;
}

inline std::vector<int> complement_of(const std::vector<int>& keep, int subsystems) {
    std::vector<int> rest;
    for (int s = 0; s < subsystems; ++s)
        if (std::find(keep.begin(), keep.end(), s) == keep.end()) rest.push_back(s);
    return rest;
}

inline void validate_subset(const std::vector<int>& subset, int subsystems) {
    if (subset.empty()) throw std::invalid_argument("subsystem subset must be nonempty");
    for (int s : subset)
        if (s < 0 || s >= subsystems) throw std::invalid_argument("subsystem index out of range");
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("subsystem indices must be distinct");
}

}  // namespace detail

template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
tensor_product(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    static_assert(std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                  "tensor_product requires matching scalar types");
    Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
        a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
    return out;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kHermitianTol) {
    if (m.rows() != m.cols()) return false;
    return (m.derived() - m.derived().adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// Trace out every subsystem not listed in `keep`; kept subsystems retain their
// relative order from the layout. An empty keep list traces everything,
// leaving the 1x1 matrix holding the trace.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
partial_trace(const Eigen::MatrixBase<Derived>& rho, const SubsystemLayout& layout,
              const std::vector<int>& keep) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("partial_trace needs a square matrix");
    layout.validate_against(rho.rows());
    if (!keep.empty()) detail::validate_subset(keep, layout.subsystems());
    std::vector<int> keep_sorted = keep;
    std::sort(keep_sorted.begin(), keep_sorted.end());
    std::vector<int> traced = detail::complement_of(keep_sorted, layout.subsystems());

    std::vector<int> keep_dims, traced_dims;
    for (int s : keep_sorted) keep_dims.push_back(layout.local_dims[static_cast<std::size_t>(s)]);
    for (int s : traced) traced_dims.push_back(layout.local_dims[static_cast<std::size_t>(s)]);
    const long dk = std::accumulate(keep_dims.begin(), keep_dims.end(), 1L, std::multiplies<>());
    const long dt = std::accumulate(traced_dims.begin(), traced_dims.end(), 1L, std::multiplies<>());

    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(dk, dk);
    out.setZero();

    const std::size_t n = layout.local_dims.size();
    std::vector<int> kd_r(keep_dims.size()), kd_c(keep_dims.size()), td(traced_dims.size());
    std::vector<int> row(n), col(n);
    for (long rk = 0; rk < dk; ++rk) {
        detail::decompose_index(rk, keep_dims, kd_r);
        for (long ck = 0; ck < dk; ++ck) {
            detail::decompose_index(ck, keep_dims, kd_c);
            typename Derived::Scalar acc{};
            for (long t = 0; t < dt; ++t) {
                if (!traced_dims.empty()) detail::decompose_index(t, traced_dims, td);
                for (std::size_t p = 0; p < keep_sorted.size(); ++p) {
                    row[static_cast<std::size_t>(keep_sorted[p])] = kd_r[p];
                    col[static_cast<std::size_t>(keep_sorted[p])] = kd_c[p];
                }
                for (std::size_t p = 0; p < traced.size(); ++p) {
                    row[static_cast<std::size_t>(traced[p])] = td[p];
                    col[static_cast<std::size_t>(traced[p])] = td[p];
                }
                acc += rho.derived()(detail::compose_index(row, layout.local_dims),
                                     detail::compose_index(col, layout.local_dims));
            }
            out(rk, ck) = acc;
        }
    }
    return out;
}

// Transpose the indices of one subsystem, leaving the rest untouched.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
partial_transpose(const Eigen::MatrixBase<Derived>& rho, const SubsystemLayout& layout,
                  int subsystem) {
    if (rho.rows() != rho.cols())
        throw std::invalid_argument("partial_transpose needs a square matrix");
    layout.validate_against(rho.rows());
    if (subsystem < 0 || subsystem >= layout.subsystems())
        throw std::invalid_argument("subsystem index out of range");

    const long d = rho.rows();
    const std::size_t n = layout.local_dims.size();
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(d, d);
    std::vector<int> ri(n), ci(n);
    for (long i = 0; i < d; ++i) {
        detail::decompose_index(i, layout.local_dims, ri);
        for (long j = 0; j < d; ++j) {
            detail::decompose_index(j, layout.local_dims, ci);
            std::swap(ri[static_cast<std::size_t>(subsystem)], ci[static_cast<std::size_t>(subsystem)]);
            out(detail::compose_index(ri, layout.local_dims),
                detail::compose_index(ci, layout.local_dims)) = rho.derived()(i, j);
            std::swap(ri[static_cast<std::size_t>(subsystem)], ci[static_cast<std::size_t>(subsystem)]);
        }
    }
    return out;
}

// Eigenvalues of a Hermitian matrix, sorted descending.
template <typename Derived>
RealVector hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& h) {
    if (!is_hermitian(h)) throw std::invalid_argument("matrix is not Hermitian");
    ComplexMatrix sym = (h.derived().template cast<Complex>() +
                         h.derived().template cast<Complex>().adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solve failed");
    RealVector vals = solver.eigenvalues();
    std::sort(vals.data(), vals.data() + vals.size(), std::greater<>());
    return vals;
}

// Sum of singular values.
template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m.derived().template cast<Complex>());
    return svd.singularValues().sum();
}

// Principal square root of a positive semidefinite Hermitian matrix. Slightly
// negative eigenvalues from roundoff are clamped; clearly negative ones throw.
template <typename Derived>
ComplexMatrix psd_sqrt(const Eigen::MatrixBase<Derived>& rho) {
    if (!is_hermitian(rho)) throw std::invalid_argument("matrix is not Hermitian");
    ComplexMatrix sym = (rho.derived().template cast<Complex>() +
                         rho.derived().template cast<Complex>().adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solve failed");
    RealVector vals = solver.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < -kPsdErrorTol) throw std::domain_error("matrix is not positive semidefinite");
        if (vals(i) < 0.0) vals(i) = 0.0;
    }
    return solver.eigenvectors() * vals.cwiseSqrt().asDiagonal() *
           solver.eigenvectors().adjoint();
}

// Factor a PSD Hermitian matrix as rho = L L^dagger with L = V diag(sqrt(p)).
template <typename Derived>
ComplexMatrix psd_factor(const Eigen::MatrixBase<Derived>& rho) {
    if (!is_hermitian(rho)) throw std::invalid_argument("matrix is not Hermitian");
    ComplexMatrix sym = (rho.derived().template cast<Complex>() +
                         rho.derived().template cast<Complex>().adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solve failed");
    RealVector vals = solver.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < -kPsdErrorTol) throw std::domain_error("matrix is not positive semidefinite");
        if (vals(i) < 0.0) vals(i) = 0.0;
    }
    return solver.eigenvectors() * vals.cwiseSqrt().asDiagonal();
}

}  // namespace monogamy
