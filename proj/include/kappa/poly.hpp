#pragma once

#include <compare>
#include <map>
#include <vector>

#include "kappa/linalg.hpp"

namespace kappa {

// Atoms of the function algebra on a0 x A over the rho basis:
// Translation a   -> the function k~_{rho_a}
// MatrixElement a,b -> the function k~_{rho_a rho_b}
// The same atoms double as the coordinates v_a, Lambda_{ab} of the affine
// matrix picture under the identification v_a = sgn_a k~_{rho_a},
// Lambda_{ab} = sgn_a k~_{rho_a rho_b}.
enum class GenKind : int { Translation = 0, MatrixElement = 1 };

struct Generator {
  GenKind kind;
  int a;
  int b;  // unused (-1) for Translation
  auto operator<=>(const Generator&) const = default;
};

inline Generator gen_t(int a) { return Generator{GenKind::Translation, a, -1}; }
inline Generator gen_m(int a, int b) { return Generator{GenKind::MatrixElement, a, b}; }

// Sorted multiset of generators; the empty monomial is the constant 1.
using Monomial = std::vector<Generator>;

// Polynomial in the generators, canonical form: sorted monomial keys,
// coefficients pruned below kCoeffPrune.
class PolyFunction {
 public:
  PolyFunction() = default;
  static PolyFunction constant(double c);
  static PolyFunction atom(const Generator& g, double coeff = 1.0);

  const std::map<Monomial, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double max_abs_coeff() const;

  void add(const Monomial& m, double coeff);

  PolyFunction& operator+=(const PolyFunction& other);
  PolyFunction& operator-=(const PolyFunction& other);
  PolyFunction& operator*=(double s);
  friend PolyFunction operator+(PolyFunction a, const PolyFunction& b) { return a += b; }
  friend PolyFunction operator-(PolyFunction a, const PolyFunction& b) { return a -= b; }
  friend PolyFunction operator*(double s, PolyFunction p) { return p *= s; }
  friend PolyFunction operator*(const PolyFunction& a, const PolyFunction& b);

  bool operator==(const PolyFunction& other) const { return terms_ == other.terms_; }

 private:
  std::map<Monomial, double> terms_;
};

double max_coeff_diff(const PolyFunction& a, const PolyFunction& b);

enum class BracketKind { Structural, Zakrzewski };

// Bracket of two atoms. Structural implements the algebroid-dual brackets in
// k~ generators (rho0 distinguished, index 0); Zakrzewski implements the
// matrix-coordinate brackets with deformation parameter h on v/Lambda atoms.
// Both close in the polynomial algebra.
PolyFunction generator_bracket(BracketKind kind, const Generator& g1, const Generator& g2,
                               double h);

// Bilinear + Leibniz extension of the generator bracket; antisymmetric.
PolyFunction poisson_bracket(BracketKind kind, const PolyFunction& f, const PolyFunction& g,
                             double h = -1.0);

inline PolyFunction bracket_structural(const PolyFunction& f, const PolyFunction& g) {
  return poisson_bracket(BracketKind::Structural, f, g);
}
inline PolyFunction bracket_zakrzewski(const PolyFunction& f, const PolyFunction& g, double h) {
  return poisson_bracket(BracketKind::Zakrzewski, f, g, h);
}

// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
PolyFunction jacobiator(BracketKind kind, const PolyFunction& f, const PolyFunction& g,
                        const PolyFunction& p, double h = -1.0);

// Rescales every atom by the rho-basis sign of its first index; realizes the
// identification between k~ generators and v/Lambda coordinates in either
// direction (the map is an involution).
PolyFunction sign_substitution(const PolyFunction& f);

}  // namespace kappa
