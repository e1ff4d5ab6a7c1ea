#include <doctest.h>

#include "kappa/group.hpp"
#include "kappa/sampling.hpp"

using namespace kappa;

namespace {

// Independent bilinear route for the form k: on generators
// tr(Lambda_xy Lambda_zt) = 2 [eta(x,t)eta(y,z) - eta(x,z)eta(y,t)],
// so k(X,Y) = tr(XY)/2 for all of so(eta).
double k_trace_oracle(const SkewOperator& x, const SkewOperator& y) {
  return 0.5 * (x.m * y.m).trace();
}

}  // namespace

TEST_CASE("minkowski spaces and their invariants") {
  const auto sp4 = make_minkowski(4);
  CHECK(sp4.dim() == 4);
  CHECK(sp4.signature() == std::vector<int>{1, -1, -1, -1});
  CHECK(sp4.metric()(0, 0) == 1.0);
  CHECK(sp4.metric()(3, 3) == -1.0);

  const auto sp6 = make_minkowski(6);
  CHECK(sp6.signature() == std::vector<int>{1, -1, -1, -1, -1, -1});

  CHECK_THROWS_AS(make_minkowski(3), std::invalid_argument);

  // general constructor recovers the sign pattern from eigenvalues
  Mat m = Mat::Zero(3, 3);
  m << 2.0, 0.5, 0.0, 0.5, -1.0, 0.0, 0.0, 0.0, -3.0;
  const auto sp = QuadraticSpace::from_metric(m);
  CHECK(sp.signature() == std::vector<int>{1, -1, -1});
  CHECK_FALSE(sp.is_canonical_diagonal());

  CHECK_THROWS_AS(QuadraticSpace::from_metric(Mat::Zero(2, 2)), std::invalid_argument);
}

TEST_CASE("lambda operators") {
  const auto sp = make_minkowski(4);
  const Vec t = sp.basis_vector(0);
  const Vec s = sp.basis_vector(3);

  SUBCASE("antisymmetry in the arguments") {
    Rng rng(11);
    const Vec x = rng.vec(4);
    CHECK(lambda_op(sp, x, x).m.cwiseAbs().maxCoeff() == 0.0);
    CHECK(max_abs_diff(lambda_op(sp, x, t).m, Mat(-lambda_op(sp, t, x).m)) == 0.0);
  }

  SUBCASE("action on the defining plane") {
    // Lambda_ts t = t eta(s,t) - s eta(t,t) = -s; Lambda_ts s = -t
    const SkewOperator lam = lambda_op(sp, t, s);
    CHECK(max_abs_diff(Vec(lam.m * t), Vec(-s)) < 1e-15);
    CHECK(max_abs_diff(Vec(lam.m * s), Vec(-t)) < 1e-15);
  }

  SUBCASE("equivariance under the group") {
    Rng rng(12);
    for (int i = 0; i < 20; ++i) {
      const GroupElement g = random_so0(sp, rng);
      const Vec x = rng.vec(4);
      const Vec y = rng.vec(4);
      const SkewOperator lhs = lambda_op(sp, Vec(g.m * x), Vec(g.m * y));
      const SkewOperator rhs = ad(sp, g, lambda_op(sp, x, y));
      CHECK(max_abs_diff(lhs.m, rhs.m) < 1e-12);
    }
  }

  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(lambda_op(sp, Vec::Zero(3), t), std::invalid_argument);
  }

  SUBCASE("skewness is validated") {
    CHECK_THROWS_AS(skew_operator(sp, Mat::Identity(4, 4)), std::invalid_argument);
    CHECK(is_skew(sp, lambda_op(sp, t, s).m));
  }
}

TEST_CASE("the form k and its dual") {
  const auto sp = make_minkowski(5);
  const Vec t = sp.basis_vector(0);
  const Vec s = sp.basis_vector(4);
  Rng rng(13);

  SUBCASE("generator values") {
    CHECK(form_k(sp, lambda_op(sp, t, s), lambda_op(sp, t, s)) == doctest::Approx(1.0));
    // x, y in s-perp: k(Lambda_xs, Lambda_ys) = eta(x,y)
    for (int i = 0; i < 10; ++i) {
      Vec x = rng.vec(5);
      Vec y = rng.vec(5);
      x[4] = 0.0;
      y[4] = 0.0;
      const double k = form_k(sp, lambda_op(sp, x, s), lambda_op(sp, y, s));
      CHECK(k == doctest::Approx(sp.eta(x, y)).epsilon(1e-12));
    }
  }

  SUBCASE("bilinear extension agrees with the trace route") {
    for (int i = 0; i < 25; ++i) {
      const SkewOperator x = random_skew(sp, rng);
      const SkewOperator y = random_skew(sp, rng);
      CHECK(form_k(sp, x, y) == doctest::Approx(k_trace_oracle(x, y)).epsilon(1e-12));
    }
  }

  SUBCASE("musical isomorphisms invert each other") {
    for (int i = 0; i < 10; ++i) {
      const SkewOperator x = random_skew(sp, rng);
      CHECK(max_abs_diff(k_inverse(sp, k_musical(sp, x)).m, x.m) < 1e-14);
      const SkewOperator y = random_skew(sp, rng);
      CHECK(form_k_tilde(sp, k_musical(sp, x), k_musical(sp, y)) ==
            doctest::Approx(form_k(sp, x, y)).epsilon(1e-12));
      CHECK(pair_with(sp, k_musical(sp, x), y) == doctest::Approx(form_k(sp, x, y)));
    }
  }

  SUBCASE("invariance under ad and ad#") {
    for (int i = 0; i < 25; ++i) {
      const GroupElement g = random_so0(sp, rng);
      const SkewOperator x = random_skew(sp, rng);
      const SkewOperator y = random_skew(sp, rng);
      CHECK(form_k(sp, ad(sp, g, x), ad(sp, g, y)) ==
            doctest::Approx(form_k(sp, x, y)).epsilon(1e-10));
      const Covector phi = k_musical(sp, x);
      const Covector psi = k_musical(sp, y);
      CHECK(form_k_tilde(sp, ad_sharp(sp, g, phi), ad_sharp(sp, g, psi)) ==
            doctest::Approx(form_k_tilde(sp, phi, psi)).epsilon(1e-10));
    }
  }
}

TEST_CASE("adjoint actions") {
  const auto sp = make_minkowski(4);
  Rng rng(14);
  const Mat id = Mat::Identity(4, 4);

  SUBCASE("identity acts trivially") {
    const SkewOperator x = random_skew(sp, rng);
    CHECK(max_abs_diff(ad(sp, group_element(sp, id), x).m, x.m) == 0.0);
  }

  SUBCASE("homomorphism property") {
    for (int i = 0; i < 20; ++i) {
      const GroupElement g1 = random_so0(sp, rng);
      const GroupElement g2 = random_so0(sp, rng);
      const SkewOperator x = random_skew(sp, rng);
      const SkewOperator lhs = ad(sp, group_element(sp, g1.m * g2.m), x);
      const SkewOperator rhs = ad(sp, g1, ad(sp, g2, x));
      CHECK(max_abs_diff(lhs.m, rhs.m) < 1e-12);
    }
  }

  SUBCASE("pi-rotation conjugation of Lambda_xs") {
    // exp(pi Lambda_us) Lambda_xs exp(-pi Lambda_us) = -Lambda_xs - 2 eta(x,u) Lambda_us
    const Vec s = sp.basis_vector(3);
    const Vec u = sp.basis_vector(1);
    const GroupElement flip = exp_rotation(sp, u, s, M_PI);
    for (int i = 0; i < 10; ++i) {
      Vec x = rng.vec(4);
      x[3] = 0.0;
      const Covector lhs = ad_sharp(sp, flip, k_musical(sp, lambda_op(sp, x, s)));
      const Mat expect = -lambda_op(sp, x, s).m - 2.0 * sp.eta(x, u) * lambda_op(sp, u, s).m;
      const Covector rhs = k_musical(sp, skew_operator(sp, expect));
      CHECK(max_abs_diff(lhs.coords, rhs.coords) < 1e-12);
    }
  }

  SUBCASE("non-orthogonal matrices are rejected") {
    CHECK_THROWS_AS(group_element(sp, Mat(2.0 * id)), std::invalid_argument);
  }
}

TEST_CASE("closed-form one-parameter groups vs the series oracle") {
  const auto sp = make_minkowski(4);
  const Vec t = sp.basis_vector(0);
  const Vec s = sp.basis_vector(3);
  const Vec f = t - s;
  Rng rng(15);

  SUBCASE("null kind") {
    CHECK(max_abs_diff(exp_null(sp, Vec::Zero(4), f).m, Mat::Identity(4, 4)) == 0.0);
    for (int i = 0; i < 10; ++i) {
      Vec u = rng.uniform(-1.5, 1.5) * sp.basis_vector(1) +
              rng.uniform(-1.5, 1.5) * sp.basis_vector(2);
      const GroupElement closed = exp_null(sp, u, f);
      const GroupElement series = exp_series(sp, lambda_op(sp, u, f));
      CHECK(max_abs_diff(closed.m, series.m) < 1e-9);
      CHECK(closed.component == Component::SO0);
      // nilpotency of order three: the series is exactly I + L + L^2/2
      const Mat l = lambda_op(sp, u, f).m;
      CHECK((l * l * l).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(max_abs_diff(closed.m, Mat(Mat::Identity(4, 4) + l + 0.5 * l * l)) < 1e-14);
    }
  }

  SUBCASE("boost kind") {
    for (int i = 0; i < 10; ++i) {
      const double nu = rng.uniform(-1.5, 1.5);
      const GroupElement closed = exp_boost(sp, s, t, nu);
      const Mat p = projection_p(sp, s, t);
      const Mat expect = Mat::Identity(4, 4) - p + std::cosh(nu) * p +
                         std::sinh(nu) * lambda_op(sp, s, t).m;
      CHECK(max_abs_diff(closed.m, expect) == 0.0);
      const GroupElement series = exp_series(sp, SkewOperator{nu * lambda_op(sp, s, t).m});
      CHECK(max_abs_diff(closed.m, series.m) < 1e-9);
      CHECK(closed.component == Component::SO0);
    }
  }

  SUBCASE("rotation kind") {
    for (int i = 0; i < 10; ++i) {
      const double nu = rng.uniform(-1.5, 1.5);
      const Vec x = sp.basis_vector(1);
      const Vec y = sp.basis_vector(2);
      const GroupElement closed = exp_rotation(sp, x, y, nu);
      const GroupElement series = exp_series(sp, SkewOperator{nu * lambda_op(sp, x, y).m});
      CHECK(max_abs_diff(closed.m, series.m) < 1e-9);
    }
  }

  SUBCASE("series of zero and orthogonality") {
    CHECK(max_abs_diff(exp_series(sp, SkewOperator{Mat::Zero(4, 4)}).m, Mat::Identity(4, 4)) ==
          0.0);
    Rng r2(16);
    for (int i = 0; i < 10; ++i) {
      const GroupElement g = exp_series(sp, random_skew(sp, r2), 1e-16);
      CHECK(is_orthogonal(sp, g.m, 1e-15 * 10));
    }
  }

  SUBCASE("preconditions are enforced") {
    CHECK_THROWS_AS(exp_null(sp, t, f), std::invalid_argument);                  // eta(u,f) != 0
    CHECK_THROWS_AS(exp_null(sp, sp.basis_vector(1), t), std::invalid_argument); // f not null
    CHECK_THROWS_AS(exp_boost(sp, s, sp.basis_vector(1), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(exp_rotation(sp, t, s, 1.0), std::invalid_argument);
  }
}

TEST_CASE("reflections and components") {
  const auto sp = make_minkowski(4);
  const Vec t = sp.basis_vector(0);
  const Vec s = sp.basis_vector(3);
  Rng rng(17);

  SUBCASE("reflection basics") {
    for (int i = 0; i < 10; ++i) {
      Vec v = rng.vec(4);
      if (std::abs(sp.eta(v, v)) < 0.1) continue;
      const GroupElement r = reflection(sp, v);
      CHECK(max_abs_diff(r.m * r.m, Mat::Identity(4, 4)) < 1e-12);
      CHECK(max_abs_diff(Vec(r.m * v), Vec(-v)) < 1e-12);
    }
    CHECK(reflection(sp, t).component == Component::TimeRefl);
    CHECK(reflection(sp, s).component == Component::SpaceRefl);
    const Vec null_vec = t - s;
    CHECK_THROWS_AS(reflection(sp, null_vec), std::invalid_argument);
  }

  SUBCASE("component classification") {
    CHECK(classify_component(sp, Mat::Identity(4, 4)) == Component::SO0);
    CHECK(classify_component(sp, Mat(reflection(sp, t).m * reflection(sp, s).m)) ==
          Component::SO1);
    CHECK(exp_boost(sp, s, t, 0.7).component == Component::SO0);
    CHECK_THROWS_AS(classify_component(sp, Mat(2.0 * Mat::Identity(4, 4))),
                    std::invalid_argument);
  }

  SUBCASE("Klein four-group composition") {
    CHECK(compose(Component::TimeRefl, Component::SpaceRefl) == Component::SO1);
    CHECK(compose(Component::SO1, Component::SO1) == Component::SO0);
    CHECK(compose(Component::TimeRefl, Component::TimeRefl) == Component::SO0);
    CHECK(compose(Component::SO0, Component::SpaceRefl) == Component::SpaceRefl);
  }
}

TEST_CASE("orthogonal projections onto planes") {
  const auto sp = make_minkowski(4);
  const Vec t = sp.basis_vector(0);
  const Vec s = sp.basis_vector(3);

  const Mat p = projection_p(sp, t, s);
  CHECK(max_abs_diff(p * p, p) < 1e-14);
  // P(t,s) = -sgn(t) sgn(s) Lambda_ts^2 = Lambda_ts^2
  const Mat lam2 = lambda_op(sp, t, s).m * lambda_op(sp, t, s).m;
  CHECK(max_abs_diff(p, lam2) < 1e-14);
  // kernel on the orthogonal complement
  CHECK(Vec(p * sp.basis_vector(1)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(Vec(p * sp.basis_vector(2)).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(projection_p(sp, t, Vec(2.0 * s)), std::invalid_argument);
  CHECK_THROWS_AS(projection_p(sp, t, t), std::invalid_argument);
}

TEST_CASE("commutator identity holds for generic vectors") {
  const auto sp = make_minkowski(5);
  Rng rng(18);
  for (int i = 0; i < 30; ++i) {
    const Vec x = rng.vec(5), y = rng.vec(5), z = rng.vec(5), t = rng.vec(5);
    const Mat lhs = lambda_op(sp, x, y).m * lambda_op(sp, z, t).m -
                    lambda_op(sp, z, t).m * lambda_op(sp, x, y).m;
    const Mat rhs = sp.eta(x, t) * lambda_op(sp, y, z).m + sp.eta(y, z) * lambda_op(sp, x, t).m -
                    sp.eta(x, z) * lambda_op(sp, y, t).m - sp.eta(y, t) * lambda_op(sp, x, z).m;
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}
