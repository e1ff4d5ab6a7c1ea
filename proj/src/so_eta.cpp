#include "kappa/so_eta.hpp"

#include <stdexcept>

namespace kappa {

bool is_skew(const QuadraticSpace& space, const Mat& m, double tol) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) return false;
  const Mat& eta = space.metric();
  return (eta * m + m.transpose() * eta).cwiseAbs().maxCoeff() <= tol;
}

SkewOperator skew_operator(const QuadraticSpace& space, const Mat& m) {
  if (!is_skew(space, m)) {
    throw std::invalid_argument("matrix is not eta-skew");
  }
  return SkewOperator{m};
}

SkewOperator lambda_op(const QuadraticSpace& space, const Vec& x, const Vec& y) {
  if (x.size() != space.dim() || y.size() != space.dim()) {
    throw std::invalid_argument("lambda_op: vector dimension mismatch");
  }
  const Vec ex = space.eta_lower(x);
  const Vec ey = space.eta_lower(y);
  return SkewOperator{x * ey.transpose() - y * ex.transpose()};
}

std::vector<std::pair<int, int>> so_pairs(int dim) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(so_dim(dim)));
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) pairs.emplace_back(a, b);
  }
  return pairs;
}

int so_pair_index(int dim, int a, int b) {
  if (a < 0 || b <= a || b >= dim) throw std::invalid_argument("bad so-pair");
  // Pairs (0,1)..(0,dim-1), (1,2)..; offset of row a is a*dim - a(a+1)/2.
  return a * dim - a * (a + 1) / 2 + (b - a - 1);
}

SkewOperator so_basis_element(const QuadraticSpace& space, int pair_index) {
  const auto pairs = so_pairs(space.dim());
  if (pair_index < 0 || pair_index >= static_cast<int>(pairs.size())) {
    throw std::invalid_argument("so basis index out of range");
  }
  const auto [a, b] = pairs[static_cast<size_t>(pair_index)];
  return lambda_op(space, space.basis_vector(a), space.basis_vector(b));
}

namespace {

void require_canonical(const QuadraticSpace& space) {
  if (!space.is_canonical_diagonal()) {
    throw std::logic_error("so(eta) coordinates require the canonical diagonal metric");
  }
}

}  // namespace

Vec so_coords(const QuadraticSpace& space, const SkewOperator& x) {
  require_canonical(space);
  const int d = space.dim();
  Vec c(so_dim(d));
  int idx = 0;
  // Lambda_{ab} has entry (a,b) = eta_bb, entry (b,a) = -eta_aa, zero elsewhere,
  // so the coefficient on Lambda_{ab} is eta_bb * X(a,b).
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      c[idx++] = space.metric()(b, b) * x.m(a, b);
    }
  }
  return c;
}

SkewOperator so_from_coords(const QuadraticSpace& space, const Vec& coords) {
  require_canonical(space);
  const int d = space.dim();
  if (coords.size() != so_dim(d)) throw std::invalid_argument("so coords size mismatch");
  Mat m = Mat::Zero(d, d);
  int idx = 0;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const double c = coords[idx++];
      m(a, b) += c * space.metric()(b, b);
      m(b, a) -= c * space.metric()(a, a);
    }
  }
  return SkewOperator{m};
}

Vec k_gram_diagonal(const QuadraticSpace& space) {
  require_canonical(space);
  const int d = space.dim();
  Vec k(so_dim(d));
  int idx = 0;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      k[idx++] = -space.metric()(a, a) * space.metric()(b, b);
    }
  }
  return k;
}

double form_k(const QuadraticSpace& space, const SkewOperator& x, const SkewOperator& y) {
  const Vec cx = so_coords(space, x);
  const Vec cy = so_coords(space, y);
  const Vec k = k_gram_diagonal(space);
  return cx.cwiseProduct(k).dot(cy);
}

double pair_with(const QuadraticSpace& space, const Covector& phi, const SkewOperator& x) {
  return phi.coords.dot(so_coords(space, x));
}

Covector k_musical(const QuadraticSpace& space, const SkewOperator& x) {
  return Covector{k_gram_diagonal(space).cwiseProduct(so_coords(space, x))};
}

SkewOperator k_inverse(const QuadraticSpace& space, const Covector& phi) {
  const Vec k = k_gram_diagonal(space);
  if (phi.coords.size() != k.size()) throw std::invalid_argument("covector size mismatch");
  // k is diagonal with entries +-1, hence its own inverse.
  return so_from_coords(space, k.cwiseProduct(phi.coords));
}

double form_k_tilde(const QuadraticSpace& space, const Covector& phi, const Covector& psi) {
  const Vec k = k_gram_diagonal(space);
  if (phi.coords.size() != k.size() || psi.coords.size() != k.size()) {
    throw std::invalid_argument("covector size mismatch");
  }
  return phi.coords.dot(k.cwiseProduct(psi.coords));
}

}  // namespace kappa
