#include "conegeo/jordan.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace conegeo {

namespace {

// Merge a sorted list of (eigenvalue, multiplicity-1) entries into clusters
// whose adjacent relative gap is <= tol::cluster_rel.  Returns cluster means
// and the member index ranges.
struct Cluster {
  double value;
  int begin, end;  // half-open member range
};

std::vector<Cluster> cluster_sorted(const Vector& sorted) {
  std::vector<Cluster> out;
  const int n = static_cast<int>(sorted.size());
  int begin = 0;
  for (int i = 1; i <= n; ++i) {
    bool split = (i == n);
    if (!split) {
      const double gap = sorted(i) - sorted(i - 1);
      const double scale = std::max({std::abs(sorted(i)), std::abs(sorted(i - 1)), 1e-300});
      split = gap > tol::cluster_rel * scale;
    }
    if (split) {
      double mean = 0.0;
      for (int j = begin; j < i; ++j) mean += sorted(j);
      out.push_back({mean / (i - begin), begin, i});
      begin = i;
    }
  }
  return out;
}

bool is_nonneg_integer(double p) { return p >= 0.0 && p == std::floor(p); }

}  // namespace

JordanAlgebra JordanAlgebra::Orthant(int n) {
  if (n < 1) throw invalid_input("orthant algebra needs n >= 1");
  return JordanAlgebra(Family::orthant, n, n);
}

JordanAlgebra JordanAlgebra::Sym(int order) {
  if (order < 1) throw invalid_input("sym algebra needs order >= 1");
  return JordanAlgebra(Family::sym, order * order, order);
}

JordanAlgebra JordanAlgebra::Spin(int ambient_dim) {
  if (ambient_dim < 2) throw invalid_input("spin algebra needs ambient dimension >= 2");
  return JordanAlgebra(Family::spin, ambient_dim, ambient_dim);
}

JordanAlgebra JordanAlgebra::ForCone(const ConeSpec& cone) {
  switch (cone.kind()) {
    case ConeKind::orthant:
      return Orthant(cone.ambient_dim());
    case ConeKind::lorentz:
      return Spin(cone.ambient_dim());
    case ConeKind::psd:
      return Sym(cone.order());
    case ConeKind::polyhedral:
      break;
  }
  throw invalid_input("general polyhedral cones carry no Jordan algebra here");
}

int JordanAlgebra::rank() const {
  switch (family_) {
    case Family::orthant:
      return order_;
    case Family::sym:
      return order_;
    case Family::spin:
      return 2;
  }
  return 0;
}

void JordanAlgebra::check_dim(const Point& p, const char* who) const {
  if (p.size() != dim_)
    throw invalid_input(std::string(who) + ": element has wrong coordinate length");
}

Point JordanAlgebra::unit() const {
  switch (family_) {
    case Family::orthant:
      return Vector::Ones(dim_);
    case Family::sym:
      return from_sym_matrix(Matrix::Identity(order_, order_));
    case Family::spin: {
      Vector e = Vector::Zero(dim_);
      e(0) = 1.0;
      return e;
    }
  }
  throw invalid_input("unknown algebra family");
}

Point JordanAlgebra::product(const Point& a, const Point& b) const {
  check_dim(a, "product");
  check_dim(b, "product");
  switch (family_) {
    case Family::orthant:
      return a.cwiseProduct(b);
    case Family::sym: {
      const Matrix ma = to_sym_matrix(a, order_), mb = to_sym_matrix(b, order_);
      return from_sym_matrix(0.5 * (ma * mb + mb * ma));
    }
    case Family::spin: {
      Point out(dim_);
      out(0) = a.dot(b);  // st + <u,v>
      out.tail(dim_ - 1) = a(0) * b.tail(dim_ - 1) + b(0) * a.tail(dim_ - 1);
      return out;
    }
  }
  throw invalid_input("unknown algebra family");
}

Matrix JordanAlgebra::lmul(const Point& a) const {
  check_dim(a, "lmul");
  Matrix l(dim_, dim_);
  Vector basis = Vector::Zero(dim_);
  for (int j = 0; j < dim_; ++j) {
    basis(j) = 1.0;
    l.col(j) = product(a, basis);
    basis(j) = 0.0;
  }
  return l;
}

Point JordanAlgebra::apply_quadratic(const Point& a, const Point& z) const {
  check_dim(a, "apply_quadratic");
  check_dim(z, "apply_quadratic");
  switch (family_) {
    case Family::orthant:
      return a.cwiseProduct(a).cwiseProduct(z);
    case Family::sym: {
      const Matrix ma = to_sym_matrix(a, order_), mz = to_sym_matrix(z, order_);
      return from_sym_matrix(ma * mz * ma);
    }
    case Family::spin: {
      // P(a) z = 2 <a, z> a - q(a) J z with q(a) = s^2 - |u|^2 and
      // J(t, v) = (t, -v).
      const double q = a(0) * a(0) - a.tail(dim_ - 1).squaredNorm();
      Point out = 2.0 * a.dot(z) * a;
      out(0) -= q * z(0);
      out.tail(dim_ - 1) += q * z.tail(dim_ - 1);
      return out;
    }
  }
  throw invalid_input("unknown algebra family");
}

Matrix JordanAlgebra::quadratic_rep(const Point& a) const {
  check_dim(a, "quadratic_rep");
  Matrix p(dim_, dim_);
  Vector basis = Vector::Zero(dim_);
  for (int j = 0; j < dim_; ++j) {
    basis(j) = 1.0;
    p.col(j) = apply_quadratic(a, basis);
    basis(j) = 0.0;
  }
  return p;
}

SpectralDecomp JordanAlgebra::spectral(const Point& x) const {
  check_dim(x, "spectral");
  SpectralDecomp out;
  switch (family_) {
    case Family::orthant: {
      std::vector<int> idx(dim_);
      for (int i = 0; i < dim_; ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](int i, int j) { return x(i) < x(j); });
      Vector sorted(dim_);
      for (int i = 0; i < dim_; ++i) sorted(i) = x(idx[i]);
      for (const Cluster& c : cluster_sorted(sorted)) {
        Point id = Vector::Zero(dim_);
        for (int j = c.begin; j < c.end; ++j) id(idx[j]) = 1.0;
        out.eigenvalues.push_back(c.value);
        out.idempotents.push_back(std::move(id));
      }
      return out;
    }
    case Family::sym: {
      Matrix a = to_sym_matrix(x, order_);
      const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
      const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
      if (asym > tol::sym_asymmetry * scale)
        throw invalid_input("spectral: matrix element is not symmetric");
      a = 0.5 * (a + a.transpose());
      Eigen::SelfAdjointEigenSolver<Matrix> es(a);
      if (es.info() != Eigen::Success) throw numeric_failure("eigensolver failed in spectral");
      const Vector& vals = es.eigenvalues();  // ascending
      const Matrix& vecs = es.eigenvectors();
      for (const Cluster& c : cluster_sorted(vals)) {
        Matrix proj = Matrix::Zero(order_, order_);
        for (int j = c.begin; j < c.end; ++j)
          proj += vecs.col(j) * vecs.col(j).transpose();
        out.eigenvalues.push_back(c.value);
        out.idempotents.push_back(from_sym_matrix(proj));
      }
      return out;
    }
    case Family::spin: {
      const double s = x(0);
      const Vector w = x.tail(dim_ - 1);
      const double r = w.norm();
      // Eigenvalues s -+ |w| with idempotents (1, -+w/|w|)/2; a single
      // eigenvalue s with idempotent e when the two coincide under clustering.
      if (r <= 0.5 * tol::cluster_rel * std::max(std::abs(s), 1e-300)) {
        out.eigenvalues.push_back(s);
        out.idempotents.push_back(unit());
        return out;
      }
      Point lo = Vector::Zero(dim_), hi = Vector::Zero(dim_);
      lo(0) = hi(0) = 0.5;
      lo.tail(dim_ - 1) = -0.5 * w / r;
      hi.tail(dim_ - 1) = 0.5 * w / r;
      out.eigenvalues = {s - r, s + r};
      out.idempotents = {std::move(lo), std::move(hi)};
      return out;
    }
  }
  throw invalid_input("unknown algebra family");
}

Point JordanAlgebra::power(const Point& x, double p) const {
  SpectralDecomp d = spectral(x);
  Point out = Vector::Zero(dim_);
  for (size_t i = 0; i < d.eigenvalues.size(); ++i) {
    const double lam = d.eigenvalues[i];
    if (lam <= 0.0 && !is_nonneg_integer(p))
      throw invalid_input("power: non-positive eigenvalue with a non-integer exponent");
    out += std::pow(lam, p) * d.idempotents[i];
  }
  return out;
}

std::vector<double> JordanAlgebra::relative_spectrum(const Point& x, const Point& y) const {
  SpectralDecomp dx = spectral(x), dy = spectral(y);
  if (dx.eigenvalues.front() <= 0.0 || dy.eigenvalues.front() <= 0.0)
    throw invalid_input("relative_spectrum: elements must have strictly positive spectra");
  Point y_inv_sqrt = Vector::Zero(dim_);
  for (size_t i = 0; i < dy.eigenvalues.size(); ++i)
    y_inv_sqrt += std::pow(dy.eigenvalues[i], -0.5) * dy.idempotents[i];
  return spectral(apply_quadratic(y_inv_sqrt, x)).eigenvalues;
}

double JordanAlgebra::max_relative_eigenvalue(const Point& x, const Point& y) const {
  switch (family_) {
    case Family::spin: {
      // Closed form: for z = P(y^{-1/2}) x, lambda_max = s_z + |w_z| is a sum
      // of nonnegative-scale terms and never suffers the s - |w| cancellation.
      const Point y_inv_sqrt = power(y, -0.5);
      const Point z = apply_quadratic(y_inv_sqrt, x);
      return z(0) + z.tail(dim_ - 1).norm();
    }
    default:
      return relative_spectrum(x, y).back();
  }
}

double jordan_thompson(const JordanAlgebra& alg, const Point& x, const Point& y) {
  return std::log(std::max(alg.max_relative_eigenvalue(x, y),
                           alg.max_relative_eigenvalue(y, x)));
}

}  // namespace conegeo
