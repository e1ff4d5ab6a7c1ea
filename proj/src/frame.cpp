#include "kappa/frame.hpp"

#include <stdexcept>

namespace kappa {

Frame::Frame(const QuadraticSpace& space) : space_(space) {
  const int d = space_.dim();
  if (d < 4 || !space_.is_canonical_diagonal() || space_.signature()[0] != +1) {
    throw std::invalid_argument("Frame requires canonical Minkowski space of dim >= 4");
  }
  t_ = space_.basis_vector(0);
  s_ = space_.basis_vector(d - 1);
  f_ = t_ - s_;
  for (int i = 1; i <= d - 2; ++i) u_basis_.push_back(space_.basis_vector(i));

  for (int alpha = 0; alpha <= d - 2; ++alpha) {
    const Vec e = s_perp_basis(alpha);
    rho_.push_back(k_musical(space_, lambda_op(space_, e, s_)));
    c_.push_back(SkewOperator{-lambda_op(space_, e, f_).m});
  }

  // so(eta) = c (+) a as columns of one matrix in so-coordinates.
  const int sd = so_dim(d);
  Mat cols(sd, sd);
  int col = 0;
  for (const auto& op : subalgebra_basis(Subalgebra::C)) {
    cols.col(col++) = so_coords(space_, op);
  }
  for (const auto& op : subalgebra_basis(Subalgebra::A)) {
    cols.col(col++) = so_coords(space_, op);
  }
  split_lu_.compute(cols);
}

Vec Frame::s_perp_basis(int alpha) const {
  if (alpha < 0 || alpha > dim() - 2) throw std::invalid_argument("s-perp basis index out of range");
  return space_.basis_vector(alpha);  // e_0 = t, e_1..e_{d-2} span U
}

std::vector<SkewOperator> Frame::subalgebra_basis(Subalgebra which) const {
  const int d = dim();
  std::vector<SkewOperator> basis;
  switch (which) {
    case Subalgebra::A:  // {Y : Ys = 0} = Lambda pairs inside s-perp
      for (int a = 0; a <= d - 2; ++a)
        for (int b = a + 1; b <= d - 2; ++b)
          basis.push_back(lambda_op(space_, space_.basis_vector(a), space_.basis_vector(b)));
      break;
    case Subalgebra::B:  // {Y : Yt = 0} = Lambda pairs inside t-perp
      for (int a = 1; a <= d - 1; ++a)
        for (int b = a + 1; b <= d - 1; ++b)
          basis.push_back(lambda_op(space_, space_.basis_vector(a), space_.basis_vector(b)));
      break;
    case Subalgebra::C:  // {Lambda_{xf} : x in s-perp}
      for (int a = 0; a <= d - 2; ++a)
        basis.push_back(lambda_op(space_, space_.basis_vector(a), f_));
      break;
  }
  return basis;
}

std::pair<SkewOperator, SkewOperator> Frame::project_onto_a(const SkewOperator& x) const {
  const Vec coeff = split_lu_.solve(so_coords(space_, x));
  const int nc = dim() - 1;
  const auto c_basis = subalgebra_basis(Subalgebra::C);
  const auto a_basis = subalgebra_basis(Subalgebra::A);
  Mat c_part = Mat::Zero(dim(), dim());
  Mat a_part = Mat::Zero(dim(), dim());
  for (int i = 0; i < nc; ++i) c_part += coeff[i] * c_basis[static_cast<size_t>(i)].m;
  for (size_t i = 0; i < a_basis.size(); ++i) a_part += coeff[nc + static_cast<int>(i)] * a_basis[i].m;
  return {SkewOperator{c_part}, SkewOperator{a_part}};
}

Vec Frame::project_u(const Vec& x) const {
  Vec p = Vec::Zero(dim());
  for (const Vec& u : u_basis_) p += -space_.eta(x, u) * u;  // sgn(u) = -1
  return p;
}

bool Frame::in_a0(const Covector& phi, double tol) const {
  for (const auto& op : subalgebra_basis(Subalgebra::A)) {
    if (std::abs(pair_with(space_, phi, op)) > tol) return false;
  }
  return true;
}

Covector Frame::a0_from_vector(const Vec& v) const {
  if (std::abs(space_.eta(v, s_)) > kTolMembership) {
    throw std::invalid_argument("a0_from_vector requires v in s-perp");
  }
  return k_musical(space_, lambda_op(space_, v, s_));
}

Vec Frame::vector_from_a0(const Covector& phi) const {
  if (!in_a0(phi)) throw std::invalid_argument("covector is not in a0");
  // phi = k(Lambda_{vs}) with v = sum_alpha sgn(rho_alpha) k~(phi, rho_alpha) e_alpha.
  Vec v = Vec::Zero(dim());
  for (int alpha = 0; alpha < a0_dim(); ++alpha) {
    v += rho_sign(alpha) * form_k_tilde(space_, phi, rho(alpha)) * s_perp_basis(alpha);
  }
  return v;
}

Covector Frame::a0_from_rho_coords(const Vec& coords) const {
  if (coords.size() != a0_dim()) throw std::invalid_argument("rho coords size mismatch");
  Covector phi{Vec::Zero(so_dim(dim()))};
  for (int alpha = 0; alpha < a0_dim(); ++alpha) phi.coords += coords[alpha] * rho(alpha).coords;
  return phi;
}

Vec Frame::rho_coords(const Covector& phi) const {
  Vec coords(a0_dim());
  for (int alpha = 0; alpha < a0_dim(); ++alpha) {
    coords[alpha] = rho_sign(alpha) * form_k_tilde(space_, phi, rho(alpha));
  }
  return coords;
}

}  // namespace kappa
