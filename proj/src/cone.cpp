#include "conegeo/cone.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace conegeo {

namespace {

// Perceptron-style search for a strictly interior point of {x : F x >= 0}.
// Converges in finitely many steps whenever a strictly feasible point exists.
Point find_interior_witness(const Matrix& facets) {
  const int m = static_cast<int>(facets.rows());
  const int n = static_cast<int>(facets.cols());
  Matrix rows(m, n);
  for (int i = 0; i < m; ++i) rows.row(i) = facets.row(i).normalized();

  Point x = rows.colwise().sum().transpose();
  if (x.norm() == 0.0) x = Vector::Ones(n);
  for (long iter = 0; iter < 200000; ++iter) {
    Vector vals = rows * x;
    int worst = 0;
    const double lo = vals.minCoeff(&worst);
    if (lo > 1e-7 * x.norm()) return x / sup_norm(x);
    x += rows.row(worst).transpose();
  }
  throw invalid_input("facet matrix admits no strictly interior point");
}

}  // namespace

ConeSpec ConeSpec::Orthant(int n) {
  if (n < 1) throw invalid_input("orthant dimension must be >= 1");
  ConeSpec c;
  c.kind_ = ConeKind::orthant;
  c.ambient_ = c.order_ = n;
  c.facets_ = Matrix::Identity(n, n);
  c.witness_ = Vector::Ones(n);
  return c;
}

ConeSpec ConeSpec::Polyhedral(Matrix facets) {
  Point w = find_interior_witness(facets);
  return Polyhedral(std::move(facets), std::move(w));
}

ConeSpec ConeSpec::Polyhedral(Matrix facets, Point interior_witness) {
  const int m = static_cast<int>(facets.rows());
  const int n = static_cast<int>(facets.cols());
  if (m < n || n < 1) throw invalid_input("polyhedral cone needs at least dim facets");
  for (int i = 0; i < m; ++i)
    if (facets.row(i).norm() == 0.0) throw invalid_input("zero facet row");
  Eigen::JacobiSVD<Matrix> svd(facets);
  if (svd.singularValues()(n - 1) < 1e-10 * svd.singularValues()(0))
    throw invalid_input("facet matrix is column rank deficient (cone not pointed)");

  ConeSpec c;
  c.kind_ = ConeKind::polyhedral;
  c.ambient_ = c.order_ = n;
  c.facets_ = std::move(facets);
  c.witness_ = std::move(interior_witness);
  if (classify(c, c.witness_).region != Region::interior)
    throw invalid_input("supplied witness is not interior to the polyhedral cone");
  return c;
}

ConeSpec ConeSpec::Lorentz(int ambient_dim) {
  if (ambient_dim < 2) throw invalid_input("lorentz cone needs ambient dimension >= 2");
  ConeSpec c;
  c.kind_ = ConeKind::lorentz;
  c.ambient_ = c.order_ = ambient_dim;
  c.witness_ = Vector::Zero(ambient_dim);
  c.witness_(0) = 1.0;
  return c;
}

ConeSpec ConeSpec::Psd(int order) {
  if (order < 1) throw invalid_input("psd cone needs order >= 1");
  ConeSpec c;
  c.kind_ = ConeKind::psd;
  c.ambient_ = order * order;
  c.order_ = order;
  c.witness_ = from_sym_matrix(Matrix::Identity(order, order));
  return c;
}

const Matrix& ConeSpec::facets() const {
  if (!has_facets()) throw invalid_input("cone family has no facet description");
  return facets_;
}

Point ConeSpec::interior_anchor() const { return witness_; }

Vector ConeSpec::positive_functional() const {
  switch (kind_) {
    case ConeKind::orthant:
      return Vector::Ones(ambient_);
    case ConeKind::polyhedral:
      // Sum of facet functionals: zero on the closed cone only at the origin.
      return facets_.colwise().sum().transpose();
    case ConeKind::lorentz: {
      Vector f = Vector::Zero(ambient_);
      f(0) = 1.0;
      return f;
    }
    case ConeKind::psd:
      return from_sym_matrix(Matrix::Identity(order_, order_));  // trace
  }
  throw invalid_input("unknown cone kind");
}

Membership classify(const ConeSpec& cone, const Point& x) {
  if (x.size() != cone.ambient_dim())
    throw invalid_input("point dimension does not match the cone's ambient dimension");
  const double scale = sup_norm(x);
  if (scale == 0.0) return {Region::boundary, 0.0};  // the apex
  const Point xn = x / scale;

  double margin = 0.0;
  switch (cone.kind()) {
    case ConeKind::orthant:
      margin = xn.minCoeff();
      break;
    case ConeKind::polyhedral:
      margin = (cone.facets() * xn).minCoeff();
      break;
    case ConeKind::lorentz:
      margin = xn(0) - xn.tail(xn.size() - 1).norm();
      break;
    case ConeKind::psd: {
      Matrix a = to_sym_matrix(xn, cone.order());
      const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
      if (asym > tol::sym_asymmetry)
        throw invalid_input("matrix point is not symmetric within tolerance");
      a = 0.5 * (a + a.transpose());
      Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
      if (es.info() != Eigen::Success) throw numeric_failure("eigensolver failed in classify");
      margin = es.eigenvalues().minCoeff();
      break;
    }
  }

  Region region = Region::boundary;
  if (margin > tol::membership)
    region = Region::interior;
  else if (margin < -tol::membership)
    region = Region::outside;
  return {region, margin};
}

void require_interior(const ConeSpec& cone, const Point& x, const char* who) {
  if (!is_interior(cone, x))
    throw invalid_input(std::string(who) + ": point is not in the cone's interior");
}

}  // namespace conegeo
