#pragma once

#include <string>

#include "kappa/so_eta.hpp"

namespace kappa {

// The four connected components of O(eta) in Minkowski signature.
enum class Component { SO0, TimeRefl, SpaceRefl, SO1 };

std::string to_string(Component c);

// Component of the product, Klein four-group table.
Component compose(Component a, Component b);

// An element of O(eta); M^T eta M = eta validated and component classified
// at construction.
struct GroupElement {
  Mat m;
  Component component;
};

bool is_orthogonal(const QuadraticSpace& space, const Mat& m, double tol = kTolMembership);
GroupElement group_element(const QuadraticSpace& space, const Mat& m);

Component classify_component(const QuadraticSpace& space, const Mat& m);

// ad(g)X = g X g^{-1} and the coadjoint ad#(g) = ad(g^{-1})^*, which
// satisfies ad#(g) k(X) = k(ad(g) X).
SkewOperator ad(const QuadraticSpace& space, const GroupElement& g, const SkewOperator& x);
Covector ad_sharp(const QuadraticSpace& space, const GroupElement& g, const Covector& phi);

// Closed-form one-parameter groups.
//
// exp(Lambda_{uf}) = I + Lambda_{uf} - eta(u,u)/2 f (eta f)^T for a null f
// orthogonal to u; nilpotent of order 3.
GroupElement exp_null(const QuadraticSpace& space, const Vec& u, const Vec& f);
// exp(nu Lambda_{ab}) = I - P_ab + cosh(nu) P_ab + sinh(nu) Lambda_{ab} for an
// orthogonal pair with eta(a,a) eta(b,b) = -1.
GroupElement exp_boost(const QuadraticSpace& space, const Vec& a, const Vec& b, double nu);
// exp(nu Lambda_{xy}) = I - P_xy + cos(nu) P_xy + sin(nu) Lambda_{xy} for an
// orthonormal pair of equal signs.
GroupElement exp_rotation(const QuadraticSpace& space, const Vec& x, const Vec& y, double nu);

// Truncated power series sum X^k / k!, terms until norm < tol. Independent of
// the closed forms above; result is orthogonal within 10*tol.
GroupElement exp_series(const QuadraticSpace& space, const SkewOperator& x, double tol = 1e-16);

// Reflection across v-perp, R_v = I - 2/eta(v,v) v (eta v)^T.
GroupElement reflection(const QuadraticSpace& space, const Vec& v);

// Orthogonal projection onto span{v,w} for an orthonormal pair:
// sgn(v) v (eta v)^T + sgn(w) w (eta w)^T = -sgn(v) sgn(w) Lambda_vw^2.
Mat projection_p(const QuadraticSpace& space, const Vec& v, const Vec& w);

}  // namespace kappa
