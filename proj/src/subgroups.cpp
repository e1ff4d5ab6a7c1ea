#include "kappa/subgroups.hpp"

#include <cmath>
#include <stdexcept>

namespace kappa {

AElement a_element(const Frame& frame, const GroupElement& g) {
  if (g.component != Component::SO0) {
    throw std::invalid_argument("A elements live in SO0(eta)");
  }
  const Vec gs = g.m * frame.s();
  if (max_abs_diff(gs, frame.s()) <= kTolMembership) return AElement{g, +1.0};
  if (max_abs_diff(gs, Vec(-frame.s())) <= kTolMembership) return AElement{g, -1.0};
  throw std::invalid_argument("matrix does not normalize <s>");
}

AElement a_identity(const Frame& frame) {
  const int d = frame.dim();
  return AElement{group_element(frame.space(), Mat::Identity(d, d)), +1.0};
}

AElement a_compose(const Frame& frame, const AElement& a1, const AElement& a2) {
  return a_element(frame, group_element(frame.space(), a1.g.m * a2.g.m));
}

AElement a_inverse(const Frame& frame, const AElement& a) {
  return a_element(frame, group_element(frame.space(), a.g.m.inverse()));
}

CElement c_element(const Frame& frame, const Vec& u, double nu) {
  if (std::abs(frame.space().eta(u, frame.s())) > kTolMembership ||
      std::abs(frame.space().eta(u, frame.t())) > kTolMembership) {
    throw std::invalid_argument("C coordinate u must lie in U = <s,t>-perp");
  }
  return CElement{u, nu};
}

GroupElement c_to_matrix(const Frame& frame, const CElement& c) {
  const auto& sp = frame.space();
  const GroupElement n = exp_null(sp, c.u, frame.f());
  const GroupElement b = exp_boost(sp, frame.t(), frame.s(), c.nu);  // exp(nu Lambda_{ts})
  return group_element(sp, n.m * b.m);
}

CElement c_compose(const Frame& frame, const CElement& c1, const CElement& c2) {
  return c_element(frame, c1.u + std::exp(c1.nu) * c2.u, c1.nu + c2.nu);
}

CElement c_inverse(const Frame& frame, const CElement& c) {
  return c_element(frame, -std::exp(-c.nu) * c.u, -c.nu);
}

std::optional<CAFactors> factor_gamma(const Frame& frame, const GroupElement& g) {
  const auto& sp = frame.space();
  const Vec gs = g.m * frame.s();
  const double proj = sp.eta(frame.f(), gs);
  if (std::abs(proj) < kTolMembership) return std::nullopt;
  const double d = proj > 0 ? +1.0 : -1.0;
  const double nu = -std::log(std::abs(proj));
  const Vec u = std::exp(nu) * frame.project_u(d * gs);
  const CElement c = c_element(frame, u, nu);
  const Mat cinv = c_to_matrix(frame, c_inverse(frame, c)).m;
  const AElement a = a_element(frame, group_element(sp, cinv * g.m));
  if (a.d != d) throw std::logic_error("factor_gamma: inconsistent d flag");
  return CAFactors{c, a};
}

BCFactors factor_bc(const Frame& frame, const GroupElement& g) {
  const auto& sp = frame.space();
  if (g.component != Component::SO0) {
    throw std::invalid_argument("factor_bc requires g in SO0(eta)");
  }
  const Vec ginv_t = g.m.inverse() * frame.t();
  const double proj = sp.eta(frame.f(), ginv_t);
  if (proj <= kTolMembership) {
    throw std::logic_error("factor_bc: eta(f, g^{-1} t) must be positive on SO0");
  }
  const double nu = std::log(proj);
  // c^{-1} t = cosh(nu) t + sinh(nu) s - u - eta(u,u)/2 e^{-nu} f, so the
  // U component of g^{-1} t recovers u.
  const Vec u = -frame.project_u(ginv_t);
  const CElement c = c_element(frame, u, nu);
  const Mat cinv = c_to_matrix(frame, c_inverse(frame, c)).m;
  const GroupElement b = group_element(sp, g.m * cinv);
  if (max_abs_diff(Vec(b.m * frame.t()), frame.t()) > kTolNumeric) {
    throw std::logic_error("factor_bc: residual factor does not fix t");
  }
  return BCFactors{b, c};
}

GroupElement normalizer_flip(const Frame& frame, const Vec& u) {
  const auto& sp = frame.space();
  if (std::abs(sp.eta(u, u) + 1.0) > kTolMembership ||
      std::abs(sp.eta(u, frame.s())) > kTolMembership ||
      std::abs(sp.eta(u, frame.t())) > kTolMembership) {
    throw std::invalid_argument("normalizer_flip requires a unit spacelike u in U");
  }
  return exp_rotation(sp, u, frame.s(), M_PI);
}

}  // namespace kappa
