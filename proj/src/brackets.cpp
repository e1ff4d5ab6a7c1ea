#include "kappa/brackets.hpp"

#include <cmath>
#include <stdexcept>

namespace kappa {

GroupPoint semidirect_compose(const Frame& frame, const GroupPoint& p1, const GroupPoint& p2) {
  const auto& sp = frame.space();
  Covector phi{p1.phi.coords + ad_sharp(sp, p1.a.g, p2.phi).coords};
  return GroupPoint{std::move(phi), a_compose(frame, p1.a, p2.a)};
}

GroupPoint group_point_inverse(const Frame& frame, const GroupPoint& p) {
  const AElement ainv = a_inverse(frame, p.a);
  Covector phi{-ad_sharp(frame.space(), ainv.g, p.phi).coords};
  return GroupPoint{std::move(phi), ainv};
}

GroupPoint random_group_point(const Frame& frame, Rng& rng) {
  return GroupPoint{random_a0(frame, rng), random_a(frame, rng)};
}

PointAtoms atoms_at(const Frame& frame, const GroupPoint& pt) {
  const auto& sp = frame.space();
  const int n1 = frame.a0_dim();
  PointAtoms atoms{Vec(n1), Mat(n1, n1)};
  std::vector<Covector> pushed;
  pushed.reserve(static_cast<size_t>(n1));
  for (int b = 0; b < n1; ++b) pushed.push_back(ad_sharp(sp, pt.a.g, frame.rho(b)));
  for (int a = 0; a < n1; ++a) {
    atoms.t[a] = form_k_tilde(sp, frame.rho(a), pt.phi);
    for (int b = 0; b < n1; ++b) {
      atoms.m(a, b) = form_k_tilde(sp, frame.rho(a), pushed[static_cast<size_t>(b)]);
    }
  }
  return atoms;
}

double eval(const PolyFunction& f, const PointAtoms& atoms) {
  double sum = 0.0;
  for (const auto& [mono, coeff] : f.terms()) {
    double prod = coeff;
    for (const Generator& g : mono) prod *= atoms.atom(g);
    sum += prod;
  }
  return sum;
}

AffinePoincareElement affine_poincare(const QuadraticSpace& a0_space, const Mat& lambda,
                                      const Vec& v) {
  if (!is_orthogonal(a0_space, lambda)) {
    throw std::invalid_argument("affine element: Lambda is not a Lorentz matrix");
  }
  if (v.size() != a0_space.dim()) throw std::invalid_argument("affine element: bad v size");
  return AffinePoincareElement{lambda, v};
}

AffinePoincareElement to_affine(const Frame& frame, const GroupPoint& pt) {
  const int n1 = frame.a0_dim();
  const PointAtoms atoms = atoms_at(frame, pt);
  Mat lambda(n1, n1);
  Vec v(n1);
  for (int a = 0; a < n1; ++a) {
    v[a] = frame.rho_sign(a) * atoms.t[a];
    for (int b = 0; b < n1; ++b) lambda(a, b) = frame.rho_sign(a) * atoms.m(a, b);
  }
  return AffinePoincareElement{lambda, v};
}

PointAtoms atoms_affine(const AffinePoincareElement& g) {
  return PointAtoms{g.v, g.lambda};
}

std::pair<double, double> lemma21_check(const Frame& frame, const Covector& phi,
                                        const GroupPoint& pt) {
  const auto& sp = frame.space();
  const double lhs = form_k_tilde(sp, phi, pt.phi);
  double rhs = 0.0;
  for (int alpha = 0; alpha < frame.a0_dim(); ++alpha) {
    const double coeff = ktilde_matrix_fn(frame, phi, frame.rho(alpha), pt.a.g);
    const SkewOperator ad_c = ad(sp, pt.a.g, frame.c_op(alpha));
    rhs += frame.rho_sign(alpha) * coeff * pair_with(sp, pt.phi, ad_c);
  }
  return {lhs, rhs};
}

Mat geometric_tensor(const IsoAlgebra& iso_a0, const Multivector& b,
                     const AffinePoincareElement& pt) {
  return pl_bivector(iso_a0, b, IGElement{pt.v, group_element(iso_a0.space(), pt.lambda)});
}

double bracket_geometric(const IsoAlgebra& iso_a0, const Generator& g1, const Generator& g2,
                         const AffinePoincareElement& pt, const Multivector& b) {
  const int n_aff = iso_a0.vdim() + 1;
  const Mat tensor = geometric_tensor(iso_a0, b, pt);
  auto flat = [&](const Generator& g) {
    return g.kind == GenKind::Translation ? entry_flat_index(n_aff, g.a, n_aff - 1)
                                          : entry_flat_index(n_aff, g.a, g.b);
  };
  return tensor(flat(g1), flat(g2));
}

HMatch match_h(const Frame& frame, Rng& rng, int n_points) {
  const int n1 = frame.a0_dim();
  std::vector<Generator> gens;
  for (int a = 0; a < n1; ++a) gens.push_back(gen_t(a));
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n1; ++b) gens.push_back(gen_m(a, b));
  }

  std::vector<PointAtoms> atoms;
  atoms.reserve(static_cast<size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    atoms.push_back(atoms_at(frame, random_group_point(frame, rng)));
  }

  // For coordinate atoms P, Q the structural bracket of their k~ pictures is
  // compared with h * (Zakrzewski bracket at h = 1); h enters (28) linearly.
  double szz = 0.0;
  double zz = 0.0;
  std::vector<std::pair<double, double>> samples;  // (structural, zak_1)
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      const PolyFunction s = bracket_structural(sign_substitution(PolyFunction::atom(gens[i])),
                                                sign_substitution(PolyFunction::atom(gens[j])));
      const PolyFunction z1 = sign_substitution(
          bracket_zakrzewski(PolyFunction::atom(gens[i]), PolyFunction::atom(gens[j]), 1.0));
      for (const auto& at : atoms) {
        const double sv = eval(s, at);
        const double zv = eval(z1, at);
        szz += sv * zv;
        zz += zv * zv;
        samples.emplace_back(sv, zv);
      }
    }
  }
  if (zz < 1e-12) throw std::runtime_error("match_h: degenerate sample set");
  const double h = szz / zz;
  double residual = 0.0;
  double residual_plus = 0.0;
  for (const auto& [sv, zv] : samples) {
    residual = std::max(residual, std::abs(sv - h * zv));
    residual_plus = std::max(residual_plus, std::abs(sv - zv));
  }
  if (residual > 1e-8) {
    throw std::runtime_error("match_h: no h reproduces the structural brackets");
  }
  return HMatch{h, residual, residual_plus};
}

}  // namespace kappa
