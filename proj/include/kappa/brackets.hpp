#pragma once

#include "kappa/algebroid.hpp"
#include "kappa/exterior.hpp"
#include "kappa/poly.hpp"
#include "kappa/sampling.hpp"

namespace kappa {

// Point of the group a0 x A (the kappa-Poincare group inside g* x| G).
struct GroupPoint {
  Covector phi;
  AElement a;
};

// (phi, g)(psi, h) = (phi + ad#(g) psi, g h).
GroupPoint semidirect_compose(const Frame& frame, const GroupPoint& p1, const GroupPoint& p2);
GroupPoint group_point_inverse(const Frame& frame, const GroupPoint& p);

GroupPoint random_group_point(const Frame& frame, Rng& rng);

// Values of every atom at one point under the k~ interpretation:
// T_a -> k~(rho_a, phi), M_{ab} -> k~(rho_a, ad#(a) rho_b).
struct PointAtoms {
  Vec t;
  Mat m;
  double atom(const Generator& g) const {
    return g.kind == GenKind::Translation ? t[g.a] : m(g.a, g.b);
  }
};

PointAtoms atoms_at(const Frame& frame, const GroupPoint& pt);
double eval(const PolyFunction& f, const PointAtoms& atoms);

// The affine matrix picture: Lambda a Lorentz matrix of the (n+1)-dim
// Minkowski form, v the translation column.
struct AffinePoincareElement {
  Mat lambda;
  Vec v;
};

AffinePoincareElement affine_poincare(const QuadraticSpace& a0_space, const Mat& lambda,
                                      const Vec& v);
// Image of a group point: Lambda_{ab} = sgn_a k~(rho_a, ad#(a) rho_b),
// v_a = sgn_a k~(rho_a, phi). A group homomorphism onto the affine picture.
AffinePoincareElement to_affine(const Frame& frame, const GroupPoint& pt);
// Atom values under the v/Lambda interpretation (direct matrix entries).
PointAtoms atoms_affine(const AffinePoincareElement& g);

// Two-sided evaluation of the expansion
// k~_phi = sum_a sgn(rho_a) k~_{phi rho_a} X~_{c_a}; returns (lhs, rhs).
std::pair<double, double> lemma21_check(const Frame& frame, const Covector& phi,
                                        const GroupPoint& pt);

// Bracket of two coordinate functions from the bivector field
// Pi(g) = b g - g b on the affine picture; iso_a0 is the iso algebra of the
// (n+1)-dim Minkowski space.
double bracket_geometric(const IsoAlgebra& iso_a0, const Generator& g1, const Generator& g2,
                         const AffinePoincareElement& pt, const Multivector& b);
// Full tensor at one point; bracket_geometric is one entry lookup.
Mat geometric_tensor(const IsoAlgebra& iso_a0, const Multivector& b,
                     const AffinePoincareElement& pt);

// Least-squares fit of the unique h making the Zakrzewski brackets coincide
// with the structural ones under v_a = sgn_a k~_{rho_a},
// Lambda_{ab} = sgn_a k~_{rho_a rho_b}. Throws if no h fits below 1e-8.
struct HMatch {
  double h;
  double residual;          // max |structural - h * zakrzewski_1| at the fit
  double residual_at_plus_one;
};
HMatch match_h(const Frame& frame, Rng& rng, int n_points);

}  // namespace kappa
