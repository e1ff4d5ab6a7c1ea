#include "kappa/sampling.hpp"

#include <functional>

namespace kappa {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : s) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::string_view suite, int dim) {
  std::uint64_t mix = seed;
  mix ^= fnv1a(suite) + 0x9e3779b97f4a7c15ull + (mix << 6) + (mix >> 2);
  mix ^= static_cast<std::uint64_t>(dim) + 0x9e3779b97f4a7c15ull + (mix << 6) + (mix >> 2);
  return Rng(mix);
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen_);
}

int Rng::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen_);
}

Vec Rng::vec(int dim, double lo, double hi) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = uniform(lo, hi);
  return v;
}

GroupElement random_so0(const QuadraticSpace& space, Rng& rng, int max_factors) {
  const int d = space.dim();
  Mat m = Mat::Identity(d, d);
  const int n_factors = rng.uniform_int(1, max_factors);
  for (int f = 0; f < n_factors; ++f) {
    const double nu = rng.uniform(-1.5, 1.5);
    if (d >= 3 && rng.coin()) {
      int i = rng.uniform_int(1, d - 1);
      int j = rng.uniform_int(1, d - 2);
      if (j >= i) ++j;
      m = m * exp_rotation(space, space.basis_vector(i), space.basis_vector(j), nu).m;
    } else {
      const int i = rng.uniform_int(1, d - 1);
      m = m * exp_boost(space, space.basis_vector(0), space.basis_vector(i), nu).m;
    }
  }
  return group_element(space, m);
}

GroupElement component_representative(const QuadraticSpace& space, Component c) {
  const int d = space.dim();
  const GroupElement rt = reflection(space, space.basis_vector(0));
  const GroupElement rs = reflection(space, space.basis_vector(d - 1));
  switch (c) {
    case Component::SO0: return group_element(space, Mat::Identity(d, d));
    case Component::TimeRefl: return rt;
    case Component::SpaceRefl: return rs;
    case Component::SO1: return group_element(space, rt.m * rs.m);
  }
  throw std::invalid_argument("bad component");
}

GroupElement random_o_eta(const QuadraticSpace& space, Rng& rng) {
  static constexpr Component kAll[] = {Component::SO0, Component::TimeRefl,
                                       Component::SpaceRefl, Component::SO1};
  const GroupElement rep = component_representative(space, kAll[rng.uniform_int(0, 3)]);
  return group_element(space, rep.m * random_so0(space, rng).m);
}

Mat random_orthonormal_basis(const QuadraticSpace& space, Rng& rng) {
  return random_o_eta(space, rng).m;
}

SkewOperator random_skew(const QuadraticSpace& space, Rng& rng) {
  return so_from_coords(space, rng.vec(so_dim(space.dim())));
}

Vec random_u(const Frame& frame, Rng& rng) {
  Vec u = Vec::Zero(frame.dim());
  for (const Vec& e : frame.u_basis()) u += rng.uniform(-1.0, 1.0) * e;
  return u;
}

Vec random_unit_u(const Frame& frame, Rng& rng) {
  for (;;) {
    const Vec u = random_u(frame, rng);
    const double n2 = -frame.space().eta(u, u);
    if (n2 > 1e-4) return u / std::sqrt(n2);
  }
}

Vec random_s_perp(const Frame& frame, Rng& rng) {
  Vec x = Vec::Zero(frame.dim());
  for (int alpha = 0; alpha < frame.a0_dim(); ++alpha) {
    x += rng.uniform(-1.0, 1.0) * frame.s_perp_basis(alpha);
  }
  return x;
}

AElement random_a(const Frame& frame, Rng& rng, bool allow_flip) {
  const auto& sp = frame.space();
  const int d = frame.dim();
  Mat m = Mat::Identity(d, d);
  const int n_factors = rng.uniform_int(1, 3);
  for (int f = 0; f < n_factors; ++f) {
    const double nu = rng.uniform(-1.5, 1.5);
    const bool rotate = d >= 4 && rng.coin();  // rotations inside U need dim(U) >= 2
    if (rotate) {
      int i = rng.uniform_int(1, d - 2);
      int j = rng.uniform_int(1, d - 3);
      if (j >= i) ++j;
      m = m * exp_rotation(sp, sp.basis_vector(i), sp.basis_vector(j), nu).m;
    } else {
      const int i = rng.uniform_int(1, d - 2);
      m = m * exp_boost(sp, sp.basis_vector(0), sp.basis_vector(i), nu).m;
    }
  }
  if (allow_flip && rng.coin()) {
    m = m * normalizer_flip(frame, frame.u_basis().front()).m;
  }
  return a_element(frame, group_element(sp, m));
}

CElement random_c(const Frame& frame, Rng& rng) {
  return c_element(frame, random_u(frame, rng), rng.uniform(-1.5, 1.5));
}

GroupElement random_b(const Frame& frame, Rng& rng) {
  const auto& sp = frame.space();
  const int d = frame.dim();
  Mat m = Mat::Identity(d, d);
  const int n_factors = rng.uniform_int(1, 3);
  for (int f = 0; f < n_factors; ++f) {
    const double nu = rng.uniform(-1.5, 1.5);
    int i = rng.uniform_int(1, d - 1);
    int j = rng.uniform_int(1, d - 2);
    if (j >= i) ++j;
    m = m * exp_rotation(sp, sp.basis_vector(i), sp.basis_vector(j), nu).m;
  }
  return group_element(sp, m);
}

Covector random_a0(const Frame& frame, Rng& rng) {
  return frame.a0_from_rho_coords(rng.vec(frame.a0_dim()));
}

IGElement random_ig(const QuadraticSpace& space, Rng& rng, bool orientation_preserving) {
  GroupElement a = orientation_preserving ? random_so0(space, rng) : random_o_eta(space, rng);
  return IGElement{rng.vec(space.dim()), std::move(a)};
}

Mat random_v_basis(const QuadraticSpace& space, Rng& rng) {
  const int d = space.dim();
  for (;;) {
    Mat b(d, d);
    for (int j = 0; j < d; ++j) b.col(j) = rng.vec(d);
    if (std::abs(b.determinant()) > 0.1) return b;
  }
}

}  // namespace kappa
