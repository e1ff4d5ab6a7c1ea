#pragma once

#include <map>
#include <vector>

#include "kappa/group.hpp"

namespace kappa {

// Element of iso(eta) = V x so(eta).
struct IsoElement {
  Vec v;
  Mat x;
};

// [(v,A),(w,B)] = (Aw - Bv, [A,B]).
IsoElement iso_bracket(const QuadraticSpace& space, const IsoElement& p, const IsoElement& q);

// Element of IG = V x| G acting on V by v -> w + Av.
struct IGElement {
  Vec w;
  GroupElement a;
};

// Affine (d+1)x(d+1) pictures of IG and iso(eta).
Mat ig_affine_matrix(const IGElement& g);
Mat iso_affine_matrix(const IsoElement& e);

// Fixed ordered basis of iso(eta): translations e_0..e_{d-1} first, then
// Lambda_{ab} (a < b) lexicographic. Precomputes bracket structure constants
// and affine matrices once per space.
class IsoAlgebra {
 public:
  explicit IsoAlgebra(const QuadraticSpace& space);

  const QuadraticSpace& space() const { return space_; }
  int vdim() const { return space_.dim(); }
  int dim() const { return static_cast<int>(basis_.size()); }

  const IsoElement& basis(int i) const { return basis_.at(static_cast<size_t>(i)); }
  const Mat& affine(int i) const { return affine_.at(static_cast<size_t>(i)); }
  // Coordinates of [E_i, E_j] in the basis.
  const Vec& bracket_coords(int i, int j) const;

  Vec coords(const IsoElement& e) const;
  IsoElement from_coords(const Vec& c) const;

 private:
  QuadraticSpace space_;
  std::vector<IsoElement> basis_;
  std::vector<Mat> affine_;
  std::vector<Vec> bracket_table_;  // dense dim x dim of coordinate vectors
};

// Sparse exterior element over the iso(eta) basis, degree 1..3. Keys are
// strictly increasing index tuples; coefficients below kCoeffPrune are
// dropped after every operation.
class Multivector {
 public:
  explicit Multivector(int degree);

  int degree() const { return degree_; }
  const std::map<std::vector<int>, double>& terms() const { return terms_; }

  // Adds coeff * e_{idx[0]} ^ ... ^ e_{idx[k-1]}; indices in any order,
  // repeated indices annihilate.
  void add_term(std::vector<int> idx, double coeff);

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(double scale);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(double s, Multivector m) { return m *= s; }

  double max_abs_coeff() const;
  bool is_zero(double tol = kCoeffPrune) const;

  static Multivector from_vector(const Vec& coords);  // degree 1

 private:
  void prune();

  int degree_;
  std::map<std::vector<int>, double> terms_;
};

double max_coeff_diff(const Multivector& a, const Multivector& b);

// Graded-antisymmetric product; total degree must stay <= 3.
Multivector wedge(const Multivector& a, const Multivector& b);

// Degree-1 pictures of iso elements.
Multivector mv_translation(const IsoAlgebra& iso, const Vec& v);
Multivector mv_rotation(const IsoAlgebra& iso, const SkewOperator& x);
Multivector mv_iso(const IsoAlgebra& iso, const IsoElement& e);

// b_v := sum eta^{jk} e_j ^ Lambda_{v, e_k} in the given V-basis (columns);
// the value is basis independent.
Multivector make_bv(const IsoAlgebra& iso, const Vec& v);
Multivector make_bv_in_basis(const IsoAlgebra& iso, const Vec& v, const Mat& basis_cols);

// Omega := sum eta^{jk} eta^{mn} e_j ^ e_m ^ Lambda_{e_k, e_n}, the canonical
// invariant trivector.
Multivector make_omega(const IsoAlgebra& iso);
Multivector make_omega_in_basis(const IsoAlgebra& iso, const Mat& basis_cols);

// Algebraic Schouten bracket of two bivectors,
// [a^b, c^d] = a^[b,c]^d - a^[b,d]^c - b^[a,c]^d + b^[a,d]^c,
// extended bilinearly; symmetric in its (2,2) arguments.
Multivector schouten_22(const IsoAlgebra& iso, const Multivector& m1, const Multivector& m2);

// Adjoint action of IG on iso(eta) wedges: conjugation g E g^{-1} on each leg.
Mat adjoint_matrix(const IsoAlgebra& iso, const IGElement& g);
Multivector adjoint_action(const IsoAlgebra& iso, const IGElement& g, const Multivector& m);

// --- bivectors with matrix legs (tangent objects at a group element) ---

// A wedge leg translated on both sides: left * E * right, weighted.
struct LegContext {
  Mat left;
  Mat right;
  double sign;
};

// The antisymmetric pairing tensor of a translated bivector on matrix-entry
// coordinate functions: entry ((i1,j1),(i2,j2)) is the bracket of the two
// entry-extraction functions. Flat index per entry_flat_index.
inline int entry_flat_index(int n_aff, int row, int col) { return row + col * n_aff; }
Mat entry_pair_tensor(const IsoAlgebra& iso, const Multivector& b,
                      const std::vector<LegContext>& contexts);

// Poisson-Lie bivector Pi(g) = b g - g b at g, as the entry-pair tensor.
Mat pl_bivector(const IsoAlgebra& iso, const Multivector& b, const IGElement& g);

}  // namespace kappa
