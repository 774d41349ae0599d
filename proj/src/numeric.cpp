#include "gpd/numeric.hpp"

namespace gpd {

Eigen::MatrixXcd to_complex(const QMatrix& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = m.at(i, j).to_complex();
  return out;
}

Eigen::VectorXcd to_complex(const QVec& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_complex();
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::VectorXd ev = hermitian_eigenvalues(m.adjoint() * m);
  double top = ev(ev.size() - 1);
  return top <= 0.0 ? 0.0 : std::sqrt(top);
}

namespace {

Eigen::MatrixXcd gram_conjugated(const Eigen::MatrixXcd& t, const QMatrix& q) {
  Eigen::LLT<Eigen::MatrixXcd> llt(to_complex(q));
  Eigen::MatrixXcd c = llt.matrixU();  // q = c^* c
  return c * t * c.inverse();
}

}  // namespace

double operator_norm_with_gram(const Eigen::MatrixXcd& t, const QMatrix& q) {
  if (t.rows() == 0) return 0.0;
  return spectral_norm(gram_conjugated(t, q));
}

double min_eigenvalue_with_gram(const Eigen::MatrixXcd& t, const QMatrix& q) {
  if (t.rows() == 0) return 0.0;
  Eigen::MatrixXcd m = gram_conjugated(t, q);
  // Symmetrize: m is Hermitian up to conjugation round-off.
  Eigen::VectorXd ev = hermitian_eigenvalues(0.5 * (m + m.adjoint()));
  return ev(0);
}

}  // namespace gpd
