#include "kappa/group.hpp"

#include <cmath>
#include <stdexcept>

namespace kappa {

std::string to_string(Component c) {
  switch (c) {
    case Component::SO0: return "SO0";
    case Component::TimeRefl: return "TimeRefl";
    case Component::SpaceRefl: return "SpaceRefl";
    case Component::SO1: return "SO1";
  }
  return "?";
}

namespace {

// (det sign, time-orientation sign) characters; both are multiplicative.
std::pair<int, int> characters(Component c) {
  switch (c) {
    case Component::SO0: return {+1, +1};
    case Component::TimeRefl: return {-1, -1};
    case Component::SpaceRefl: return {-1, +1};
    case Component::SO1: return {+1, -1};
  }
  return {0, 0};
}

Component from_characters(int det, int time) {
  if (det > 0) return time > 0 ? Component::SO0 : Component::SO1;
  return time > 0 ? Component::SpaceRefl : Component::TimeRefl;
}

}  // namespace

Component compose(Component a, Component b) {
  const auto [da, ta] = characters(a);
  const auto [db, tb] = characters(b);
  return from_characters(da * db, ta * tb);
}

bool is_orthogonal(const QuadraticSpace& space, const Mat& m, double tol) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) return false;
  const Mat& eta = space.metric();
  return (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff() <= tol;
}

Component classify_component(const QuadraticSpace& space, const Mat& m) {
  if (!is_orthogonal(space, m)) {
    throw std::invalid_argument("classify_component: matrix is not in O(eta)");
  }
  if (space.signature().empty() || space.signature()[0] != +1) {
    throw std::invalid_argument("component classification requires Minkowski signature");
  }
  const int det = m.determinant() > 0 ? +1 : -1;
  // Time orientation: sign of <eta(e0), g e0> = g(0,0) in the canonical basis.
  const int time = m(0, 0) > 0 ? +1 : -1;
  return from_characters(det, time);
}

GroupElement group_element(const QuadraticSpace& space, const Mat& m) {
  if (!is_orthogonal(space, m)) {
    throw std::invalid_argument("matrix is not in O(eta)");
  }
  return GroupElement{m, classify_component(space, m)};
}

SkewOperator ad(const QuadraticSpace& space, const GroupElement& g, const SkewOperator& x) {
  // g^{-1} = eta^{-1} g^T eta for g in O(eta); at these sizes a direct solve
  // is just as good and keeps the formula readable.
  const Mat ginv = g.m.inverse();
  return skew_operator(space, g.m * x.m * ginv);
}

Covector ad_sharp(const QuadraticSpace& space, const GroupElement& g, const Covector& phi) {
  // ad#(g) k(X) = k(ad(g) X); every covector is k(X) for X = k^{-1} phi.
  return k_musical(space, ad(space, g, k_inverse(space, phi)));
}

GroupElement exp_null(const QuadraticSpace& space, const Vec& u, const Vec& f) {
  if (std::abs(space.eta(f, f)) > kTolMembership || std::abs(space.eta(u, f)) > kTolMembership) {
    throw std::invalid_argument("exp_null requires eta(f,f) = 0 and eta(u,f) = 0");
  }
  const Mat lam = lambda_op(space, u, f).m;
  const Vec ef = space.eta_lower(f);
  const Mat m = Mat::Identity(space.dim(), space.dim()) + lam -
                0.5 * space.eta(u, u) * (f * ef.transpose());
  return group_element(space, m);
}

GroupElement exp_boost(const QuadraticSpace& space, const Vec& a, const Vec& b, double nu) {
  const double na = space.eta(a, a);
  const double nb = space.eta(b, b);
  if (std::abs(std::abs(na) - 1.0) > kTolMembership || std::abs(na * nb + 1.0) > kTolMembership ||
      std::abs(space.eta(a, b)) > kTolMembership) {
    throw std::invalid_argument("exp_boost requires an orthonormal pair of opposite signs");
  }
  const Mat p = projection_p(space, a, b);
  const Mat lam = lambda_op(space, a, b).m;
  const Mat id = Mat::Identity(space.dim(), space.dim());
  return group_element(space, id - p + std::cosh(nu) * p + std::sinh(nu) * lam);
}

GroupElement exp_rotation(const QuadraticSpace& space, const Vec& x, const Vec& y, double nu) {
  const double nx = space.eta(x, x);
  const double ny = space.eta(y, y);
  if (std::abs(nx - ny) > kTolMembership || std::abs(std::abs(nx) - 1.0) > kTolMembership ||
      std::abs(space.eta(x, y)) > kTolMembership) {
    throw std::invalid_argument("exp_rotation requires an orthonormal pair of equal signs");
  }
  const Mat p = projection_p(space, x, y);
  const Mat lam = lambda_op(space, x, y).m;
  const Mat id = Mat::Identity(space.dim(), space.dim());
  return group_element(space, id - p + std::cos(nu) * p + std::sin(nu) * lam);
}

GroupElement exp_series(const QuadraticSpace& space, const SkewOperator& x, double tol) {
  const int d = space.dim();
  Mat sum = Mat::Identity(d, d);
  Mat term = Mat::Identity(d, d);
  for (int k = 1; k <= 256; ++k) {
    term = (term * x.m) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < tol) break;
  }
  // The truncation is only orthogonal within ~10*tol, so classify from the
  // determinant and time signs directly instead of the validating constructor.
  const int det = sum.determinant() > 0 ? +1 : -1;
  const int time = sum(0, 0) > 0 ? +1 : -1;
  return GroupElement{sum, from_characters(det, time)};
}

GroupElement reflection(const QuadraticSpace& space, const Vec& v) {
  const double n = space.eta(v, v);
  if (std::abs(n) < kTolMembership) {
    throw std::invalid_argument("reflection requires a non-null vector");
  }
  const Vec ev = space.eta_lower(v);
  const Mat m = Mat::Identity(space.dim(), space.dim()) - (2.0 / n) * (v * ev.transpose());
  return group_element(space, m);
}

Mat projection_p(const QuadraticSpace& space, const Vec& v, const Vec& w) {
  const double nv = space.eta(v, v);
  const double nw = space.eta(w, w);
  if (std::abs(std::abs(nv) - 1.0) > kTolMembership || std::abs(std::abs(nw) - 1.0) > kTolMembership ||
      std::abs(space.eta(v, w)) > kTolMembership) {
    throw std::invalid_argument("projection_p requires an orthonormal pair");
  }
  const Vec ev = space.eta_lower(v);
  const Vec ew = space.eta_lower(w);
  return space.sgn(v) * (v * ev.transpose()) + space.sgn(w) * (w * ew.transpose());
}

}  // namespace kappa
