#pragma once

#include <optional>

#include "kappa/frame.hpp"

namespace kappa {

// Element of A = {g in SO0 : g s = d s, d = +-1}, the normalizer of the
// stabilizer of s. The d flag is computed from the matrix, not stored charts.
struct AElement {
  GroupElement g;
  double d;  // +1 or -1
};

AElement a_element(const Frame& frame, const GroupElement& g);
AElement a_identity(const Frame& frame);
AElement a_compose(const Frame& frame, const AElement& a1, const AElement& a2);
AElement a_inverse(const Frame& frame, const AElement& a);

// Element of C = {exp(Lambda_{uf}) exp(nu Lambda_{ts})} ~ U x| R with
// composition (u, mu)(v, nu) = (u + e^mu v, mu + nu).
struct CElement {
  Vec u;  // in U = <s,t>-perp
  double nu;
};

CElement c_element(const Frame& frame, const Vec& u, double nu);
GroupElement c_to_matrix(const Frame& frame, const CElement& c);
CElement c_compose(const Frame& frame, const CElement& c1, const CElement& c2);
CElement c_inverse(const Frame& frame, const CElement& c);

// Factorization g = c * a on the open set where eta(f, g s) != 0:
//   d = sign(eta(f, g s)), nu = -ln|eta(f, g s)|, u = e^nu P_U(d * g s).
// Returns nullopt (not in Gamma) within 1e-8 of the boundary.
struct CAFactors {
  CElement c;
  AElement a;
};
std::optional<CAFactors> factor_gamma(const Frame& frame, const GroupElement& g);

// Iwasawa-type factorization g = b * c with b t = t; always succeeds on SO0
// (eta(f, g^{-1} t) > 0 for orthochronous g; asserted).
struct BCFactors {
  GroupElement b;
  CElement c;
};
BCFactors factor_bc(const Frame& frame, const GroupElement& g);

// exp(pi Lambda_{us}) for a unit spacelike u in U; maps s -> -s and
// normalizes the stabilizer of s.
GroupElement normalizer_flip(const Frame& frame, const Vec& u);

}  // namespace kappa
