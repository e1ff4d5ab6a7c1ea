#pragma once

#include "kappa/subgroups.hpp"

namespace kappa {

// A left-invariant section of the algebroid over A, determined by
// p = Lambda_{xf} in c with x in s-perp.
struct AlgebroidSection {
  Vec x;           // the defining vector, x in s-perp
  SkewOperator p;  // Lambda_{xf}
};

AlgebroidSection section_from_vector(const Frame& frame, const Vec& x);
AlgebroidSection section_from_operator(const Frame& frame, const SkewOperator& p);

// Anchor value at a: Z = ad(a) Lambda_{xt} - d(a) Lambda_{(ax)t}, the a-part
// of ad(a) p, so the anchor vector field at a is Z a. Z s = 0.
SkewOperator anchor(const Frame& frame, const AlgebroidSection& p, const AElement& a);

// k~_{phi psi}(g) := k~(phi, ad#(g) psi), the matrix-type generator as a
// function on the group.
double ktilde_matrix_fn(const Frame& frame, const Covector& phi, const Covector& psi,
                        const GroupElement& g);

// Closed form of the anchor derivative of k~_{phi psi} along the section
// p = Lambda_{xf} at a:
//   k~(rho,psi) [k~(rho0,phi) - k~_{phi rho0}(a)] + k~_{phi rho}(a) [k~(rho0,psi) - k~_{rho0 psi}(a)]
// with rho = k(Lambda_{xs}) and rho0 = k(Lambda_{ts}).
double anchor_derivative(const Frame& frame, const AlgebroidSection& p, const Covector& phi,
                         const Covector& psi, const AElement& a);

// Central finite difference of t -> k~_{phi psi}(exp(t Z) a); the independent
// oracle for anchor_derivative.
double anchor_derivative_fd(const Frame& frame, const AlgebroidSection& p, const Covector& phi,
                            const Covector& psi, const AElement& a, double step = 1e-5);

}  // namespace kappa
