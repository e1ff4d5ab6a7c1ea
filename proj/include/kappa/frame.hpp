#pragma once

#include <vector>

#include "kappa/group.hpp"

namespace kappa {

enum class Subalgebra { A, B, C };

// The reference data of the construction: a spacelike s, a timelike t in
// s-perp, the null vector f = t - s, and an orthonormal basis of
// U = <s,t>-perp. Canonical choice: t = e0, s = e_{dim-1}, U = e1..e_{dim-2}.
//
// Also precomputes the rho basis of the annihilator of the subalgebra a
// (rho_alpha = k(Lambda_{e_alpha s}), e_0 = t), its signs, the c_alpha
// sections, and the solver for the decomposition so(eta) = c (+) a.
class Frame {
 public:
  explicit Frame(const QuadraticSpace& space);

  const QuadraticSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  // Dimension of a0 (= dim - 1, the n+1 of the construction).
  int a0_dim() const { return dim() - 1; }

  const Vec& s() const { return s_; }
  const Vec& t() const { return t_; }
  const Vec& f() const { return f_; }
  const std::vector<Vec>& u_basis() const { return u_basis_; }

  // Orthonormal basis e_0 = t, e_1..e_{dim-2} of s-perp.
  Vec s_perp_basis(int alpha) const;

  // rho_alpha = k(Lambda_{e_alpha, s}); orthonormal in (a0, k~) with
  // signature (+, -, ..., -).
  const Covector& rho(int alpha) const { return rho_.at(static_cast<size_t>(alpha)); }
  double rho_sign(int alpha) const { return alpha == 0 ? 1.0 : -1.0; }
  // The distinguished covector k(Lambda_{ts}) (= rho_0).
  const Covector& rho_bold() const { return rho_.front(); }

  // c_alpha = -Lambda_{e_alpha, f}.
  const SkewOperator& c_op(int alpha) const { return c_.at(static_cast<size_t>(alpha)); }

  std::vector<SkewOperator> subalgebra_basis(Subalgebra which) const;

  // Direct-sum decomposition X = c_part + a_part, so(eta) = c (+) a.
  std::pair<SkewOperator, SkewOperator> project_onto_a(const SkewOperator& x) const;

  // eta-orthogonal projection of x onto U.
  Vec project_u(const Vec& x) const;

  // Membership of a covector in a0 = annihilator of the subalgebra a.
  bool in_a0(const Covector& phi, double tol = kTolMembership) const;
  // Conversion pair for the identification a0 ~ s-perp, phi = k(Lambda_{vs}).
  Covector a0_from_vector(const Vec& v) const;
  Vec vector_from_a0(const Covector& phi) const;
  // Covector with given coordinates in the rho basis.
  Covector a0_from_rho_coords(const Vec& coords) const;
  Vec rho_coords(const Covector& phi) const;

 private:
  QuadraticSpace space_;
  Vec s_, t_, f_;
  std::vector<Vec> u_basis_;
  std::vector<Covector> rho_;
  std::vector<SkewOperator> c_;
  // Columns: so-coords of the c basis then the a basis; inverted once.
  Eigen::PartialPivLU<Mat> split_lu_;
};

}  // namespace kappa
