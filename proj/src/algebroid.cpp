#include "kappa/algebroid.hpp"

#include <stdexcept>

namespace kappa {

AlgebroidSection section_from_vector(const Frame& frame, const Vec& x) {
  if (std::abs(frame.space().eta(x, frame.s())) > kTolMembership) {
    throw std::invalid_argument("section vector must lie in s-perp");
  }
  return AlgebroidSection{x, lambda_op(frame.space(), x, frame.f())};
}

AlgebroidSection section_from_operator(const Frame& frame, const SkewOperator& p) {
  // p in c iff p f = 0 and p = Lambda_{xf} with x = the t-component trick:
  // recover x from p s (Lambda_{xf} s = x, eta(f,s) = 1).
  const auto parts = frame.project_onto_a(p);
  if (parts.second.m.cwiseAbs().maxCoeff() > kTolMembership) {
    throw std::invalid_argument("operator is not in the subalgebra c");
  }
  const Vec x = p.m * frame.s();
  return AlgebroidSection{x, p};
}

SkewOperator anchor(const Frame& frame, const AlgebroidSection& p, const AElement& a) {
  const auto& sp = frame.space();
  const SkewOperator lam_xt = lambda_op(sp, p.x, frame.t());
  const Vec ax = a.g.m * p.x;
  const Mat z = ad(sp, a.g, lam_xt).m - a.d * lambda_op(sp, ax, frame.t()).m;
  return SkewOperator{z};
}

double ktilde_matrix_fn(const Frame& frame, const Covector& phi, const Covector& psi,
                        const GroupElement& g) {
  return form_k_tilde(frame.space(), phi, ad_sharp(frame.space(), g, psi));
}

double anchor_derivative(const Frame& frame, const AlgebroidSection& p, const Covector& phi,
                         const Covector& psi, const AElement& a) {
  if (!frame.in_a0(phi) || !frame.in_a0(psi)) {
    throw std::invalid_argument("anchor_derivative covectors must lie in a0");
  }
  const auto& sp = frame.space();
  const Covector rho = k_musical(sp, lambda_op(sp, p.x, frame.s()));
  const Covector& rho0 = frame.rho_bold();
  const double k_rho_psi = form_k_tilde(sp, rho, psi);
  const double k_rho0_phi = form_k_tilde(sp, rho0, phi);
  const double k_rho0_psi = form_k_tilde(sp, rho0, psi);
  const double f_phi_rho0 = ktilde_matrix_fn(frame, phi, rho0, a.g);
  const double f_phi_rho = ktilde_matrix_fn(frame, phi, rho, a.g);
  const double f_rho0_psi = ktilde_matrix_fn(frame, rho0, psi, a.g);
  return k_rho_psi * (k_rho0_phi - f_phi_rho0) + f_phi_rho * (k_rho0_psi - f_rho0_psi);
}

double anchor_derivative_fd(const Frame& frame, const AlgebroidSection& p, const Covector& phi,
                            const Covector& psi, const AElement& a, double step) {
  const auto& sp = frame.space();
  const SkewOperator z = anchor(frame, p, a);
  const GroupElement flow_p = exp_series(sp, SkewOperator{step * z.m});
  const GroupElement flow_m = exp_series(sp, SkewOperator{-step * z.m});
  const GroupElement gp = group_element(sp, flow_p.m * a.g.m);
  const GroupElement gm = group_element(sp, flow_m.m * a.g.m);
  return (ktilde_matrix_fn(frame, phi, psi, gp) - ktilde_matrix_fn(frame, phi, psi, gm)) /
         (2.0 * step);
}

}  // namespace kappa
