#pragma once

#include <cstdint>

#include "kappa/exterior.hpp"
#include "kappa/sampling.hpp"

namespace kappa {

// Points of the affine space (M, V, eta), stored as offsets from one fixed
// global origin.
struct AffinePoint {
  Vec offset;
};

// Parametrized line {base + t dir}.
struct Line {
  AffinePoint base;
  Vec dir;
};

Line make_line(const AffinePoint& base, const Vec& dir);

// The Poisson-Lie structure of the line pulled to IG through the chart at
// origin_point: x ^ dir + b_dir with x = base - origin_point.
Multivector transferred_structure(const IsoAlgebra& iso, const Line& l,
                                  const AffinePoint& origin_point);

// Pi_l = Pi_k iff dir_l = dir_k and base_k - base_l is parallel to dir_l;
// decided by comparing transferred structures at a common origin.
bool structures_equal(const IsoAlgebra& iso, const Line& l, const Line& k,
                      double tol = kTolStructural);

// x ^ u ^ v over V with x = base_k - base_l, u = dir_k, v = dir_l.
Multivector line_trivector(const IsoAlgebra& iso, const Line& l, const Line& k);

// Compatibility of Pi_l and Pi_k: the trivector above must be G-invariant.
// dim > 3: iff it vanishes; dim = 3 with orientation-preserving G: always.
bool group_compatible(const IsoAlgebra& iso, const Line& l, const Line& k,
                      bool orientation_only, double tol = kTolMembership);

// --- affine vector fields: span{Euler field at the origin} + constants ---

// a * V-hat + c-hat where V-hat(p) = p (offset from the global origin) and
// c-hat is constant. The Euler field centered at m is V-hat - m-hat.
struct AffineVectorField {
  double euler = 0.0;
  Vec constant;
};

AffineVectorField euler_field(const AffinePoint& center);
AffineVectorField constant_field(const Vec& c);
Vec eval_field(const AffineVectorField& f, const AffinePoint& p);
// [V-hat, c-hat] = -c-hat, constants commute.
AffineVectorField field_bracket(const AffineVectorField& f, const AffineVectorField& g);

// Bivector/trivector fields are sparse exterior elements over the field-leg
// basis: index 0 = Euler field at the origin, index i+1 = constant e_i.
Multivector field_wedge(int vdim, const AffineVectorField& f1, const AffineVectorField& f2);
Multivector field_wedge3(int vdim, const AffineVectorField& f1, const AffineVectorField& f2,
                         const AffineVectorField& f3);

// pi_l := Euler(base) ^ dir-hat; evaluates at base + v to v ^ dir.
Multivector pi_field(int vdim, const Line& l);

// Value of a bivector field at a point, as the antisymmetric matrix of the
// bivector over V (entry (i,j) = coefficient on e_i x e_j of v ^ w form).
Mat eval_bivector_field(int vdim, const Multivector& field, const AffinePoint& p);

// Schouten bracket of bivector fields over the Euler+constant algebra; for
// pi_l, pi_k the result is the constant trivector field 2 w ^ x ^ u.
Multivector field_schouten(int vdim, const Multivector& p, const Multivector& q);

// Samples the multiplicativity condition of the affine action on (M, pi_l)
// against (Aff(G), Pi_k); true iff every sample passes. Holds iff l = k.
bool is_poisson_action(const QuadraticSpace& space, const Line& l, const Line& k, int samples,
                       std::uint64_t seed, double tol = kTolNumeric);

}  // namespace kappa
