#include "kappa/quadratic_space.hpp"

#include <cmath>
#include <stdexcept>

namespace kappa {

namespace {

std::vector<int> eigen_sign_pattern(const Mat& metric) {
  Eigen::SelfAdjointEigenSolver<Mat> es(metric);
  const Vec& ev = es.eigenvalues();
  int plus = 0;
  int minus = 0;
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) < kTolStructural) {
      throw std::invalid_argument("metric is degenerate");
    }
    (ev[i] > 0 ? plus : minus)++;
  }
  std::vector<int> sig;
  sig.reserve(plus + minus);
  for (int i = 0; i < plus; ++i) sig.push_back(+1);
  for (int i = 0; i < minus; ++i) sig.push_back(-1);
  return sig;
}

bool is_signature_diagonal(const Mat& metric) {
  const int d = static_cast<int>(metric.rows());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) {
        if (std::abs(std::abs(metric(i, i)) - 1.0) > kTolStructural) return false;
      } else if (std::abs(metric(i, j)) > kTolStructural) {
        return false;
      }
    }
  }
  // Signs must come sorted, all +1 before all -1.
  bool seen_minus = false;
  for (int i = 0; i < d; ++i) {
    if (metric(i, i) < 0) {
      seen_minus = true;
    } else if (seen_minus) {
      return false;
    }
  }
  return true;
}

}  // namespace

QuadraticSpace QuadraticSpace::minkowski(int dim) {
  if (dim < 2) throw std::invalid_argument("Minkowski space needs dim >= 2");
  Mat metric = -Mat::Identity(dim, dim);
  metric(0, 0) = 1.0;
  std::vector<int> sig(static_cast<size_t>(dim), -1);
  sig[0] = +1;
  return QuadraticSpace(dim, std::move(metric), std::move(sig), true);
}

QuadraticSpace QuadraticSpace::from_metric(const Mat& metric) {
  if (metric.rows() != metric.cols() || metric.rows() < 1) {
    throw std::invalid_argument("metric must be square");
  }
  if (max_abs_diff(metric, metric.transpose()) > kTolStructural) {
    throw std::invalid_argument("metric must be symmetric");
  }
  std::vector<int> sig = eigen_sign_pattern(metric);
  const bool canonical = is_signature_diagonal(metric);
  return QuadraticSpace(static_cast<int>(metric.rows()), metric, std::move(sig), canonical);
}

double QuadraticSpace::eta(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  return x.dot(metric_ * y);
}

double QuadraticSpace::sgn(const Vec& v) const {
  const double n = eta(v, v);
  if (std::abs(std::abs(n) - 1.0) > kTolMembership) {
    throw std::invalid_argument("sgn requires |eta(v,v)| = 1");
  }
  return n > 0 ? 1.0 : -1.0;
}

Vec QuadraticSpace::basis_vector(int i) const {
  if (i < 0 || i >= dim_) throw std::invalid_argument("basis index out of range");
  Vec e = Vec::Zero(dim_);
  e[i] = 1.0;
  return e;
}

QuadraticSpace make_minkowski(int n_total) {
  if (n_total < 4) {
    throw std::invalid_argument("ambient Minkowski space requires dim = n+2 >= 4");
  }
  return QuadraticSpace::minkowski(n_total);
}

}  // namespace kappa
