#include "kappa/affine.hpp"

#include <stdexcept>

namespace kappa {

Line make_line(const AffinePoint& base, const Vec& dir) {
  if (dir.norm() < kCoeffPrune) throw std::invalid_argument("line direction must be nonzero");
  return Line{base, dir};
}

Multivector transferred_structure(const IsoAlgebra& iso, const Line& l,
                                  const AffinePoint& origin_point) {
  if (l.dir.norm() < kCoeffPrune) throw std::invalid_argument("line direction must be nonzero");
  const Vec x = l.base.offset - origin_point.offset;
  Multivector out = make_bv(iso, l.dir);
  out += wedge(mv_translation(iso, x), mv_translation(iso, l.dir));
  return out;
}

bool structures_equal(const IsoAlgebra& iso, const Line& l, const Line& k, double tol) {
  const AffinePoint origin{Vec::Zero(iso.vdim())};
  return max_coeff_diff(transferred_structure(iso, l, origin),
                        transferred_structure(iso, k, origin)) <= tol;
}

Multivector line_trivector(const IsoAlgebra& iso, const Line& l, const Line& k) {
  const Vec x = k.base.offset - l.base.offset;
  return wedge(wedge(mv_translation(iso, x), mv_translation(iso, k.dir)),
               mv_translation(iso, l.dir));
}

bool group_compatible(const IsoAlgebra& iso, const Line& l, const Line& k, bool orientation_only,
                      double tol) {
  if (iso.vdim() == 3 && orientation_only) return true;
  return line_trivector(iso, l, k).max_abs_coeff() <= tol;
}

AffineVectorField euler_field(const AffinePoint& center) {
  return AffineVectorField{1.0, -center.offset};
}

AffineVectorField constant_field(const Vec& c) { return AffineVectorField{0.0, c}; }

Vec eval_field(const AffineVectorField& f, const AffinePoint& p) {
  return f.euler * p.offset + f.constant;
}

AffineVectorField field_bracket(const AffineVectorField& f, const AffineVectorField& g) {
  // [a1 V + c1, a2 V + c2] = a2 c1 - a1 c2 (constant field).
  return AffineVectorField{0.0, g.euler * f.constant - f.euler * g.constant};
}

namespace {

Vec leg_coords(int vdim, const AffineVectorField& f) {
  Vec c = Vec::Zero(vdim + 1);
  c[0] = f.euler;
  c.tail(vdim) = f.constant;
  return c;
}

// [leg_i, leg_j] in leg coordinates: [V, e_i] = -e_i.
Vec leg_bracket(int vdim, int i, int j) {
  Vec c = Vec::Zero(vdim + 1);
  if (i == 0 && j > 0) c[j] = -1.0;
  if (j == 0 && i > 0) c[i] = +1.0;
  return c;
}

}  // namespace

Multivector field_wedge(int vdim, const AffineVectorField& f1, const AffineVectorField& f2) {
  return wedge(Multivector::from_vector(leg_coords(vdim, f1)),
               Multivector::from_vector(leg_coords(vdim, f2)));
}

Multivector field_wedge3(int vdim, const AffineVectorField& f1, const AffineVectorField& f2,
                         const AffineVectorField& f3) {
  return wedge(field_wedge(vdim, f1, f2), Multivector::from_vector(leg_coords(vdim, f3)));
}

Multivector pi_field(int vdim, const Line& l) {
  if (l.dir.norm() < kCoeffPrune) throw std::invalid_argument("line direction must be nonzero");
  return field_wedge(vdim, euler_field(l.base), constant_field(l.dir));
}

Mat eval_bivector_field(int vdim, const Multivector& field, const AffinePoint& p) {
  if (field.degree() != 2) throw std::invalid_argument("bivector field expected");
  auto leg_value = [&](int i) -> Vec {
    return i == 0 ? p.offset : Vec(Vec::Unit(vdim, i - 1));
  };
  Mat out = Mat::Zero(vdim, vdim);
  for (const auto& [idx, c] : field.terms()) {
    const Vec a = leg_value(idx[0]);
    const Vec b = leg_value(idx[1]);
    out += c * (a * b.transpose() - b * a.transpose());
  }
  return out;
}

Multivector field_schouten(int vdim, const Multivector& p, const Multivector& q) {
  if (p.degree() != 2 || q.degree() != 2) {
    throw std::invalid_argument("field_schouten needs two bivector fields");
  }
  auto leg = [&](int i) {
    Multivector m(1);
    m.add_term({i}, 1.0);
    return m;
  };
  Multivector out(3);
  for (const auto& [ab, c1] : p.terms()) {
    for (const auto& [cd, c2] : q.terms()) {
      const int a = ab[0], b = ab[1], c = cd[0], d = cd[1];
      const double w = c1 * c2;
      out += w * wedge(wedge(leg(a), Multivector::from_vector(leg_bracket(vdim, b, c))), leg(d));
      out -= w * wedge(wedge(leg(a), Multivector::from_vector(leg_bracket(vdim, b, d))), leg(c));
      out -= w * wedge(wedge(leg(b), Multivector::from_vector(leg_bracket(vdim, a, c))), leg(d));
      out += w * wedge(wedge(leg(b), Multivector::from_vector(leg_bracket(vdim, a, d))), leg(c));
    }
  }
  return out;
}

bool is_poisson_action(const QuadraticSpace& space, const Line& l, const Line& k, int samples,
                       std::uint64_t seed, double tol) {
  const int d = space.dim();
  const Vec x = k.base.offset - l.base.offset;
  const Vec& w = l.dir;
  const Vec& u = k.dir;
  auto wedge_mat = [](const Vec& a, const Vec& b) -> Mat {
    return a * b.transpose() - b * a.transpose();
  };
  auto condition_holds = [&](const Vec& y, const Vec& v, const Mat& a) {
    const Mat lhs = wedge_mat(x + y + a * v, w);
    const Mat rhs = wedge_mat(a * (x + v), a * w) + wedge_mat(y + a * v, u) -
                    wedge_mat(a * v, a * u);
    return max_abs_diff(lhs, rhs) <= tol;
  };
  // Deterministic probes from the proof: v = 0, A = I, y over basis vectors.
  const Mat id = Mat::Identity(d, d);
  const Vec zero = Vec::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (!condition_holds(space.basis_vector(i), zero, id)) return false;
  }
  Rng rng = Rng::stream(seed, "poisson-action", d);
  for (int s = 0; s < samples; ++s) {
    const Vec y = rng.vec(d);
    const Vec v = rng.vec(d);
    const Mat a = random_so0(space, rng).m;
    if (!condition_holds(y, v, a)) return false;
  }
  return true;
}

}  // namespace kappa
