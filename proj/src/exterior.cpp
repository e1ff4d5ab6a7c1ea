#include "kappa/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kappa {

IsoElement iso_bracket(const QuadraticSpace& space, const IsoElement& p, const IsoElement& q) {
  if (p.v.size() != space.dim() || q.v.size() != space.dim()) {
    throw std::invalid_argument("iso_bracket: dimension mismatch");
  }
  return IsoElement{p.x * q.v - q.x * p.v, p.x * q.x - q.x * p.x};
}

Mat ig_affine_matrix(const IGElement& g) {
  const int d = static_cast<int>(g.w.size());
  Mat m = Mat::Zero(d + 1, d + 1);
  m.topLeftCorner(d, d) = g.a.m;
  m.topRightCorner(d, 1) = g.w;
  m(d, d) = 1.0;
  return m;
}

Mat iso_affine_matrix(const IsoElement& e) {
  const int d = static_cast<int>(e.v.size());
  Mat m = Mat::Zero(d + 1, d + 1);
  m.topLeftCorner(d, d) = e.x;
  m.topRightCorner(d, 1) = e.v;
  return m;
}

IsoAlgebra::IsoAlgebra(const QuadraticSpace& space) : space_(space) {
  const int d = space_.dim();
  const int n = d + so_dim(d);
  basis_.reserve(static_cast<size_t>(n));
  for (int i = 0; i < d; ++i) {
    basis_.push_back(IsoElement{space_.basis_vector(i), Mat::Zero(d, d)});
  }
  for (int i = 0; i < so_dim(d); ++i) {
    basis_.push_back(IsoElement{Vec::Zero(d), so_basis_element(space_, i).m});
  }
  affine_.reserve(basis_.size());
  for (const auto& e : basis_) affine_.push_back(iso_affine_matrix(e));

  bracket_table_.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bracket_table_[static_cast<size_t>(i * n + j)] =
          coords(iso_bracket(space_, basis(i), basis(j)));
    }
  }
}

const Vec& IsoAlgebra::bracket_coords(int i, int j) const {
  return bracket_table_.at(static_cast<size_t>(i * dim() + j));
}

Vec IsoAlgebra::coords(const IsoElement& e) const {
  const int d = space_.dim();
  Vec c(dim());
  c.head(d) = e.v;
  c.tail(so_dim(d)) = so_coords(space_, SkewOperator{e.x});
  return c;
}

IsoElement IsoAlgebra::from_coords(const Vec& c) const {
  const int d = space_.dim();
  if (c.size() != dim()) throw std::invalid_argument("iso coords size mismatch");
  return IsoElement{c.head(d), so_from_coords(space_, c.tail(so_dim(d))).m};
}

// --- Multivector ---

Multivector::Multivector(int degree) : degree_(degree) {
  if (degree < 1 || degree > 3) throw std::invalid_argument("multivector degree must be 1..3");
}

void Multivector::add_term(std::vector<int> idx, double coeff) {
  if (static_cast<int>(idx.size()) != degree_) {
    throw std::invalid_argument("term length does not match degree");
  }
  // Insertion sort tracking the permutation sign; equal indices kill the term.
  double sign = 1.0;
  for (size_t i = 1; i < idx.size(); ++i) {
    for (size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
      if (idx[j] == idx[j - 1]) return;
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  }
  const double value = (terms_[idx] += sign * coeff);
  if (std::abs(value) < kCoeffPrune) terms_.erase(idx);
}

Multivector& Multivector::operator+=(const Multivector& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("degree mismatch");
  for (const auto& [idx, c] : other.terms_) {
    const double value = (terms_[idx] += c);
    if (std::abs(value) < kCoeffPrune) terms_.erase(idx);
  }
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("degree mismatch");
  for (const auto& [idx, c] : other.terms_) {
    const double value = (terms_[idx] -= c);
    if (std::abs(value) < kCoeffPrune) terms_.erase(idx);
  }
  return *this;
}

Multivector& Multivector::operator*=(double scale) {
  for (auto& [idx, c] : terms_) c *= scale;
  prune();
  return *this;
}

void Multivector::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = std::abs(it->second) < kCoeffPrune ? terms_.erase(it) : std::next(it);
  }
}

double Multivector::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [idx, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

bool Multivector::is_zero(double tol) const {
  for (const auto& [idx, c] : terms_) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

Multivector Multivector::from_vector(const Vec& coords) {
  Multivector m(1);
  for (int i = 0; i < coords.size(); ++i) {
    if (std::abs(coords[i]) >= kCoeffPrune) m.terms_[{i}] = coords[i];
  }
  return m;
}

double max_coeff_diff(const Multivector& a, const Multivector& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  double m = 0.0;
  for (const auto& [idx, c] : a.terms()) {
    const auto it = b.terms().find(idx);
    m = std::max(m, std::abs(c - (it == b.terms().end() ? 0.0 : it->second)));
  }
  for (const auto& [idx, c] : b.terms()) {
    if (a.terms().find(idx) == a.terms().end()) m = std::max(m, std::abs(c));
  }
  return m;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  const int degree = a.degree() + b.degree();
  if (degree > 3) throw std::invalid_argument("wedge exceeds supported degree 3");
  Multivector out(degree);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx;
      idx.reserve(ia.size() + ib.size());
      idx.insert(idx.end(), ia.begin(), ia.end());
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), ca * cb);
    }
  }
  return out;
}

Multivector mv_translation(const IsoAlgebra& iso, const Vec& v) {
  Vec c = Vec::Zero(iso.dim());
  c.head(iso.vdim()) = v;
  return Multivector::from_vector(c);
}

Multivector mv_rotation(const IsoAlgebra& iso, const SkewOperator& x) {
  Vec c = Vec::Zero(iso.dim());
  c.tail(so_dim(iso.vdim())) = so_coords(iso.space(), x);
  return Multivector::from_vector(c);
}

Multivector mv_iso(const IsoAlgebra& iso, const IsoElement& e) {
  return Multivector::from_vector(iso.coords(e));
}

Multivector make_bv_in_basis(const IsoAlgebra& iso, const Vec& v, const Mat& basis_cols) {
  const auto& sp = iso.space();
  const int d = sp.dim();
  if (basis_cols.rows() != d || basis_cols.cols() != d) {
    throw std::invalid_argument("basis must be d x d");
  }
  const Mat gram = basis_cols.transpose() * sp.metric() * basis_cols;
  const Mat gram_inv = gram.inverse();
  Multivector out(2);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const double g = gram_inv(j, k);
      if (std::abs(g) < kCoeffPrune) continue;
      const Multivector ej = mv_translation(iso, basis_cols.col(j));
      const Multivector lam = mv_rotation(iso, lambda_op(sp, v, basis_cols.col(k)));
      out += g * wedge(ej, lam);
    }
  }
  return out;
}

Multivector make_bv(const IsoAlgebra& iso, const Vec& v) {
  // Canonical diagonal metric: eta^{jk} = eta_jj delta_jk.
  const auto& sp = iso.space();
  Multivector out(2);
  for (int j = 0; j < sp.dim(); ++j) {
    const Multivector ej = mv_translation(iso, sp.basis_vector(j));
    const Multivector lam = mv_rotation(iso, lambda_op(sp, v, sp.basis_vector(j)));
    out += sp.metric()(j, j) * wedge(ej, lam);
  }
  return out;
}

Multivector make_omega_in_basis(const IsoAlgebra& iso, const Mat& basis_cols) {
  const auto& sp = iso.space();
  const int d = sp.dim();
  const Mat gram_inv = (basis_cols.transpose() * sp.metric() * basis_cols).inverse();
  Multivector out(3);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (std::abs(gram_inv(j, k)) < kCoeffPrune) continue;
      for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
          const double g = gram_inv(j, k) * gram_inv(m, n);
          if (std::abs(g) < kCoeffPrune) continue;
          const Multivector ej = mv_translation(iso, basis_cols.col(j));
          const Multivector em = mv_translation(iso, basis_cols.col(m));
          const Multivector lam =
              mv_rotation(iso, lambda_op(sp, basis_cols.col(k), basis_cols.col(n)));
          out += g * wedge(wedge(ej, em), lam);
        }
      }
    }
  }
  return out;
}

Multivector make_omega(const IsoAlgebra& iso) {
  const auto& sp = iso.space();
  Multivector out(3);
  for (int j = 0; j < sp.dim(); ++j) {
    for (int m = 0; m < sp.dim(); ++m) {
      if (j == m) continue;
      const double g = sp.metric()(j, j) * sp.metric()(m, m);
      const Multivector ej = mv_translation(iso, sp.basis_vector(j));
      const Multivector em = mv_translation(iso, sp.basis_vector(m));
      const Multivector lam =
          mv_rotation(iso, lambda_op(sp, sp.basis_vector(j), sp.basis_vector(m)));
      out += g * wedge(wedge(ej, em), lam);
    }
  }
  return out;
}

Multivector schouten_22(const IsoAlgebra& iso, const Multivector& m1, const Multivector& m2) {
  if (m1.degree() != 2 || m2.degree() != 2) {
    throw std::invalid_argument("schouten_22 needs two bivectors");
  }
  Multivector out(3);
  auto leg = [&](int i) {
    Multivector m(1);
    m.add_term({i}, 1.0);
    return m;
  };
  for (const auto& [ab, c1] : m1.terms()) {
    for (const auto& [cd, c2] : m2.terms()) {
      const int a = ab[0], b = ab[1], c = cd[0], d = cd[1];
      const double w = c1 * c2;
      // [a^b, c^d] = a^[b,c]^d - a^[b,d]^c - b^[a,c]^d + b^[a,d]^c
      out += w * wedge(wedge(leg(a), Multivector::from_vector(iso.bracket_coords(b, c))), leg(d));
      out -= w * wedge(wedge(leg(a), Multivector::from_vector(iso.bracket_coords(b, d))), leg(c));
      out -= w * wedge(wedge(leg(b), Multivector::from_vector(iso.bracket_coords(a, c))), leg(d));
      out += w * wedge(wedge(leg(b), Multivector::from_vector(iso.bracket_coords(a, d))), leg(c));
    }
  }
  return out;
}

Mat adjoint_matrix(const IsoAlgebra& iso, const IGElement& g) {
  const int d = iso.vdim();
  const Mat gm = ig_affine_matrix(g);
  const Mat gm_inv = gm.inverse();
  Mat out(iso.dim(), iso.dim());
  for (int i = 0; i < iso.dim(); ++i) {
    const Mat conj = gm * iso.affine(i) * gm_inv;
    out.col(i) = iso.coords(IsoElement{conj.topRightCorner(d, 1), conj.topLeftCorner(d, d)});
  }
  return out;
}

Multivector adjoint_action(const IsoAlgebra& iso, const IGElement& g, const Multivector& m) {
  const Mat ad = adjoint_matrix(iso, g);
  Multivector out(m.degree());
  for (const auto& [idx, c] : m.terms()) {
    Multivector acc = Multivector::from_vector(ad.col(idx[0]));
    for (size_t k = 1; k < idx.size(); ++k) {
      acc = wedge(acc, Multivector::from_vector(ad.col(idx[static_cast<int>(k)])));
    }
    out += c * acc;
  }
  return out;
}

Mat entry_pair_tensor(const IsoAlgebra& iso, const Multivector& b,
                      const std::vector<LegContext>& contexts) {
  if (b.degree() != 2) throw std::invalid_argument("entry_pair_tensor needs a bivector");
  const int n_aff = iso.vdim() + 1;
  const int n = n_aff * n_aff;
  Mat out = Mat::Zero(n, n);
  for (const auto& ctx : contexts) {
    for (const auto& [idx, c] : b.terms()) {
      const Mat lega = ctx.left * iso.affine(idx[0]) * ctx.right;
      const Mat legb = ctx.left * iso.affine(idx[1]) * ctx.right;
      const Vec va = Eigen::Map<const Vec>(lega.data(), n);
      const Vec vb = Eigen::Map<const Vec>(legb.data(), n);
      out += (ctx.sign * c) * (va * vb.transpose() - vb * va.transpose());
    }
  }
  return out;
}

Mat pl_bivector(const IsoAlgebra& iso, const Multivector& b, const IGElement& g) {
  const int n_aff = iso.vdim() + 1;
  const Mat gm = ig_affine_matrix(g);
  const Mat id = Mat::Identity(n_aff, n_aff);
  return entry_pair_tensor(iso, b, {{id, gm, +1.0}, {gm, id, -1.0}});
}

}  // namespace kappa
