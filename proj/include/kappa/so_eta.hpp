#pragma once

#include <utility>
#include <vector>

#include "kappa/quadratic_space.hpp"

namespace kappa {

// An element of so(eta): eta*M + M^T*eta = 0. Validated at construction.
struct SkewOperator {
  Mat m;
};

bool is_skew(const QuadraticSpace& space, const Mat& m, double tol = kTolMembership);
SkewOperator skew_operator(const QuadraticSpace& space, const Mat& m);

// Lambda_{xy} := x (eta y)^T - y (eta x)^T.
SkewOperator lambda_op(const QuadraticSpace& space, const Vec& x, const Vec& y);

// --- fixed basis of so(eta): {Lambda_{ab} : a < b} in lexicographic order ---

inline int so_dim(int dim) { return dim * (dim - 1) / 2; }

// Ordered list of index pairs (a,b), a < b.
std::vector<std::pair<int, int>> so_pairs(int dim);
int so_pair_index(int dim, int a, int b);

// Basis matrix Lambda_{ab} for pair index I.
SkewOperator so_basis_element(const QuadraticSpace& space, int pair_index);

// Coordinates of X in the Lambda_{ab} basis (canonical diagonal metric only;
// the basis matrices have disjoint support so extraction is entrywise exact).
Vec so_coords(const QuadraticSpace& space, const SkewOperator& x);
SkewOperator so_from_coords(const QuadraticSpace& space, const Vec& coords);

// Diagonal of the Gram matrix of the form k in the Lambda basis:
// k(Lambda_{ab}, Lambda_{ab}) = -eta_aa * eta_bb (off-diagonal vanishes).
Vec k_gram_diagonal(const QuadraticSpace& space);

// k(X, Y), the bilinear nondegenerate form on so(eta); on generators
// k(Lambda_{xy}, Lambda_{zt}) = eta(x,t)eta(y,z) - eta(x,z)eta(y,t),
// extended bilinearly through the fixed basis.
double form_k(const QuadraticSpace& space, const SkewOperator& x, const SkewOperator& y);

// --- covectors on so(eta) ---

// Stored by coordinates in the basis dual to {Lambda_{ab}}.
struct Covector {
  Vec coords;
};

// <phi, X> pairing.
double pair_with(const QuadraticSpace& space, const Covector& phi, const SkewOperator& x);

// Musical isomorphisms of k: so(eta) <-> so(eta)*.
Covector k_musical(const QuadraticSpace& space, const SkewOperator& x);
SkewOperator k_inverse(const QuadraticSpace& space, const Covector& phi);

// k~(phi, psi) := k(k^{-1} phi, k^{-1} psi) = <phi, k^{-1} psi>.
double form_k_tilde(const QuadraticSpace& space, const Covector& phi, const Covector& psi);

}  // namespace kappa
