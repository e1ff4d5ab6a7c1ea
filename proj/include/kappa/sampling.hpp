#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "kappa/exterior.hpp"
#include "kappa/subgroups.hpp"

namespace kappa {

// Seeded RNG wrapper. Each suite derives an independent stream from
// (seed, suite-name, dim) so adding suites never perturbs others.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  static Rng stream(std::uint64_t seed, std::string_view suite, int dim);

  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds
  bool coin() { return uniform_int(0, 1) == 1; }
  Vec vec(int dim, double lo = -1.0, double hi = 1.0);

 private:
  std::mt19937_64 gen_;
};

// Group elements as products of <= max_factors closed-form exponentials,
// parameters uniform in [-1.5, 1.5].
GroupElement random_so0(const QuadraticSpace& space, Rng& rng, int max_factors = 3);
// Any of the four components: a component representative times a random SO0.
GroupElement random_o_eta(const QuadraticSpace& space, Rng& rng);
GroupElement component_representative(const QuadraticSpace& space, Component c);

// Columns form an eta-orthonormal basis (signature order of the standard one).
Mat random_orthonormal_basis(const QuadraticSpace& space, Rng& rng);

SkewOperator random_skew(const QuadraticSpace& space, Rng& rng);

// Frame-relative samplers.
Vec random_u(const Frame& frame, Rng& rng);
Vec random_unit_u(const Frame& frame, Rng& rng);
Vec random_s_perp(const Frame& frame, Rng& rng);
AElement random_a(const Frame& frame, Rng& rng, bool allow_flip = true);
CElement random_c(const Frame& frame, Rng& rng);
GroupElement random_b(const Frame& frame, Rng& rng);
Covector random_a0(const Frame& frame, Rng& rng);

IGElement random_ig(const QuadraticSpace& space, Rng& rng, bool orientation_preserving = true);

// Well-conditioned random basis of V (columns); |det| bounded away from 0.
Mat random_v_basis(const QuadraticSpace& space, Rng& rng);

}  // namespace kappa
