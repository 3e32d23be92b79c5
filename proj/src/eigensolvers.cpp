#include "surfband/eigensolvers.hpp"

#include <lapacke.h>

#include <stdexcept>

namespace surfband {

namespace {

void check(lapack_int info, const char* routine, const std::string& label) {
  if (info != 0)
    throw std::runtime_error(std::string(routine) + " failed (info " + std::to_string(info) +
                             ") for operator '" + label + "'");
}

void check_count(int k, Eigen::Index n) {
  if (k < 1 || k > n) throw std::invalid_argument("requested eigenvalue count out of range");
}

}  // namespace

void symmetric_lowest(const Eigen::MatrixXd& a, int k, bool want_vectors, Eigen::VectorXd& values,
                      Eigen::MatrixXd& vectors, const std::string& label) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  check_count(k, n);
  Eigen::MatrixXd work = a;
  Eigen::VectorXd w(n);
  vectors.resize(want_vectors ? n : 1, want_vectors ? k : 1);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(k));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'I', 'L', n, work.data(), n, 0.0, 0.0, 1, k,
      0.0, &found, w.data(), vectors.data(), want_vectors ? n : 1, support.data());
  check(info, "dsyevr", label);
  if (found != k) throw std::runtime_error("dsyevr returned too few eigenvalues for operator '" + label + "'");
  values = w.head(k);
}

void hermitian_lowest(const Eigen::MatrixXcd& a, int k, bool want_vectors, Eigen::VectorXd& values,
                      Eigen::MatrixXcd& vectors, const std::string& label) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  check_count(k, n);
  Eigen::MatrixXcd work = a;
  Eigen::VectorXd w(n);
  vectors.resize(want_vectors ? n : 1, want_vectors ? k : 1);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(k));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'I', 'L', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n, 0.0, 0.0, 1, k, 0.0, &found,
      w.data(), reinterpret_cast<lapack_complex_double*>(vectors.data()), want_vectors ? n : 1,
      support.data());
  check(info, "zheevr", label);
  if (found != k) throw std::runtime_error("zheevr returned too few eigenvalues for operator '" + label + "'");
  values = w.head(k);
}

void general_eigen(const Eigen::MatrixXcd& a, bool want_vectors, Eigen::VectorXcd& values,
                   Eigen::MatrixXcd& vectors, const std::string& label) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Eigen::MatrixXcd work = a;
  values.resize(n);
  vectors.resize(want_vectors ? n : 1, want_vectors ? n : 1);
  std::complex<double> dummy;
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(values.data()),
      reinterpret_cast<lapack_complex_double*>(&dummy), 1,
      reinterpret_cast<lapack_complex_double*>(vectors.data()), want_vectors ? n : 1);
  check(info, "zgeev", label);
}

void tridiagonal_lowest(const std::vector<double>& diag, const std::vector<double>& offdiag, int k,
                        std::vector<double>& values, Eigen::MatrixXd& vectors,
                        const std::string& label) {
  const lapack_int n = static_cast<lapack_int>(diag.size());
  check_count(k, n);
  if (offdiag.size() + 1 != diag.size()) throw std::invalid_argument("tridiagonal size mismatch");
  std::vector<double> d = diag, e = offdiag;
  e.push_back(0.0);
  std::vector<double> w(n);
  vectors.resize(n, k);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(k));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0,
                                         0.0, 1, k, 0.0, &found, w.data(), vectors.data(), n,
                                         support.data());
  check(info, "dstevr", label);
  if (found != k) throw std::runtime_error("dstevr returned too few eigenvalues for operator '" + label + "'");
  values.assign(w.begin(), w.begin() + k);
}

}  // namespace surfband
