#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace surfband {

/// Thin wrappers over LAPACK. Failures throw std::runtime_error mentioning
/// `label`.

/// Lowest k eigenpairs of a real symmetric matrix (lower triangle used).
void symmetric_lowest(const Eigen::MatrixXd& a, int k, bool want_vectors, Eigen::VectorXd& values,
                      Eigen::MatrixXd& vectors, const std::string& label);

/// Lowest k eigenpairs of a complex Hermitian matrix (lower triangle used).
void hermitian_lowest(const Eigen::MatrixXcd& a, int k, bool want_vectors, Eigen::VectorXd& values,
                      Eigen::MatrixXcd& vectors, const std::string& label);

/// All eigenpairs of a general complex matrix, unsorted.
void general_eigen(const Eigen::MatrixXcd& a, bool want_vectors, Eigen::VectorXcd& values,
                   Eigen::MatrixXcd& vectors, const std::string& label);

/// Lowest k eigenpairs of the symmetric tridiagonal matrix (diag, offdiag).
void tridiagonal_lowest(const std::vector<double>& diag, const std::vector<double>& offdiag, int k,
                        std::vector<double>& values, Eigen::MatrixXd& vectors,
                        const std::string& label);

}  // namespace surfband
