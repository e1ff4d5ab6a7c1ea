#include <doctest.h>

#include "kappa/algebroid.hpp"
#include "kappa/sampling.hpp"

using namespace kappa;

TEST_CASE("frame data") {
  const auto sp = make_minkowski(5);
  const Frame frame(sp);
  CHECK(sp.eta(frame.s(), frame.s()) == doctest::Approx(-1.0));
  CHECK(sp.eta(frame.t(), frame.t()) == doctest::Approx(1.0));
  CHECK(sp.eta(frame.s(), frame.t()) == doctest::Approx(0.0));
  CHECK(max_abs_diff(frame.f(), Vec(frame.t() - frame.s())) == 0.0);
  CHECK(sp.eta(frame.f(), frame.f()) == doctest::Approx(0.0));
  for (const Vec& u : frame.u_basis()) {
    CHECK(sp.eta(u, u) == doctest::Approx(-1.0));
    CHECK(sp.eta(u, frame.s()) == doctest::Approx(0.0));
    CHECK(sp.eta(u, frame.t()) == doctest::Approx(0.0));
  }
  CHECK(frame.u_basis().size() == 3);
  CHECK_THROWS_AS(Frame(QuadraticSpace::minkowski(3)), std::invalid_argument);
}

TEST_CASE("subalgebra bases") {
  const auto sp = make_minkowski(4);
  const Frame frame(sp);

  const auto a = frame.subalgebra_basis(Subalgebra::A);
  const auto b = frame.subalgebra_basis(Subalgebra::B);
  const auto c = frame.subalgebra_basis(Subalgebra::C);
  CHECK(a.size() == 3);
  CHECK(b.size() == 3);
  CHECK(c.size() == 3);
  CHECK(so_dim(4) == 6);

  for (const auto& y : a) CHECK(Vec(y.m * frame.s()).cwiseAbs().maxCoeff() == 0.0);
  for (const auto& y : b) CHECK(Vec(y.m * frame.t()).cwiseAbs().maxCoeff() == 0.0);

  // c is closed under bracket and Lambda_{Uf} is an abelian ideal:
  // [c_a, c_b] = delta_{0a} c_b - delta_{0b} c_a with c_a = -Lambda_{af}
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Mat ci = frame.c_op(i).m;
      const Mat cj = frame.c_op(j).m;
      Mat expect = Mat::Zero(4, 4);
      if (i == 0) expect += cj;
      if (j == 0) expect -= ci;
      CHECK(max_abs_diff(ci * cj - cj * ci, expect) < 1e-14);
    }
  }

  // linear independence and closure under the bracket for each basis
  for (const auto& basis : {a, b, c}) {
    Mat cols(so_dim(4), static_cast<int>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i) cols.col(static_cast<int>(i)) = so_coords(sp, basis[i]);
    Eigen::JacobiSVD<Mat> svd(cols, Eigen::ComputeThinU | Eigen::ComputeThinV);
    CHECK(svd.singularValues()[static_cast<int>(basis.size()) - 1] > 0.5);
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        const Vec br = so_coords(sp, SkewOperator{x.m * y.m - y.m * x.m});
        const Vec residual = br - cols * svd.solve(br);
        CHECK(residual.cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("projection onto the a-part") {
  const auto sp = make_minkowski(5);
  const Frame frame(sp);
  Rng rng(21);

  SUBCASE("a-elements project to themselves") {
    const auto a_basis = frame.subalgebra_basis(Subalgebra::A);
    const auto& x = a_basis[2];
    const auto parts = frame.project_onto_a(x);
    CHECK(parts.first.m.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(max_abs_diff(parts.second.m, x.m) < 1e-14);
  }

  SUBCASE("direct-sum roundtrip") {
    for (int i = 0; i < 20; ++i) {
      const SkewOperator x = random_skew(sp, rng);
      const auto parts = frame.project_onto_a(x);
      CHECK(max_abs_diff(parts.first.m + parts.second.m, x.m) < 1e-10);
      CHECK(Vec(parts.second.m * frame.s()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  SUBCASE("the a-part of ad(a) Lambda_xf") {
    // P_a ad(a) Lambda_{xf} = ad(a) Lambda_{xt} - d(a) Lambda_{(ax)t}
    for (int i = 0; i < 20; ++i) {
      const Vec x = random_s_perp(frame, rng);
      const AElement a = random_a(frame, rng);
      const auto parts = frame.project_onto_a(ad(sp, a.g, lambda_op(sp, x, frame.f())));
      const Mat expect = ad(sp, a.g, lambda_op(sp, x, frame.t())).m -
                         a.d * lambda_op(sp, Vec(a.g.m * x), frame.t()).m;
      CHECK(max_abs_diff(parts.second.m, expect) < 1e-10);
    }
  }
}

TEST_CASE("C group coordinates") {
  const auto sp = make_minkowski(5);
  const Frame frame(sp);
  Rng rng(22);

  SUBCASE("identity and the composition law") {
    const CElement id = c_element(frame, Vec::Zero(5), 0.0);
    const CElement c = random_c(frame, rng);
    const CElement left = c_compose(frame, id, c);
    CHECK(max_abs_diff(left.u, c.u) == 0.0);
    CHECK(left.nu == c.nu);

    const CElement c1 = random_c(frame, rng);
    const CElement c2 = random_c(frame, rng);
    const CElement prod = c_compose(frame, c1, c2);
    CHECK(max_abs_diff(prod.u, Vec(c1.u + std::exp(c1.nu) * c2.u)) < 1e-15);
    CHECK(prod.nu == doctest::Approx(c1.nu + c2.nu));
  }

  SUBCASE("matrix-product oracle") {
    for (int i = 0; i < 20; ++i) {
      const CElement c1 = random_c(frame, rng);
      const CElement c2 = random_c(frame, rng);
      const Mat direct = c_to_matrix(frame, c1).m * c_to_matrix(frame, c2).m;
      const Mat via_law = c_to_matrix(frame, c_compose(frame, c1, c2)).m;
      CHECK(max_abs_diff(direct, via_law) < 1e-9);
    }
  }

  SUBCASE("inverse") {
    const CElement c = random_c(frame, rng);
    const CElement cinv = c_inverse(frame, c);
    const CElement prod = c_compose(frame, c, cinv);
    CHECK(prod.u.cwiseAbs().maxCoeff() < 1e-15);
    CHECK(prod.nu == doctest::Approx(0.0));
    CHECK(max_abs_diff(c_to_matrix(frame, c).m * c_to_matrix(frame, cinv).m,
                       Mat::Identity(5, 5)) < 1e-12);
  }

  SUBCASE("u outside U is rejected") {
    CHECK_THROWS_AS(c_element(frame, frame.t(), 0.0), std::invalid_argument);
  }
}

TEST_CASE("Gamma = CA factorization") {
  const auto sp = make_minkowski(4);
  const Frame frame(sp);
  Rng rng(23);

  SUBCASE("identity") {
    const auto fac = factor_gamma(frame, group_element(sp, Mat::Identity(4, 4)));
    REQUIRE(fac.has_value());
    CHECK(fac->c.u.cwiseAbs().maxCoeff() < 1e-15);
    CHECK(fac->c.nu == doctest::Approx(0.0));
    CHECK(fac->a.d == 1.0);
    CHECK(max_abs_diff(fac->a.g.m, Mat::Identity(4, 4)) < 1e-12);
  }

  SUBCASE("compose-then-factor roundtrip") {
    for (int i = 0; i < 50; ++i) {
      const CElement c0 = random_c(frame, rng);
      const AElement a0 = random_a(frame, rng);
      const GroupElement g = group_element(sp, c_to_matrix(frame, c0).m * a0.g.m);
      const auto fac = factor_gamma(frame, g);
      REQUIRE(fac.has_value());
      CHECK(max_abs_diff(fac->c.u, c0.u) < 1e-9);
      CHECK(fac->c.nu == doctest::Approx(c0.nu).epsilon(1e-9));
      CHECK(fac->a.d == a0.d);
      CHECK(max_abs_diff(fac->a.g.m, a0.g.m) < 1e-9);
    }
  }

  SUBCASE("boundary of the open set is rejected") {
    // rotate s into the f-orthogonal cone: g s = -e1 has eta(f, gs) = 0
    const GroupElement g = exp_rotation(sp, sp.basis_vector(1), frame.s(), M_PI / 2.0);
    CHECK(std::abs(sp.eta(frame.f(), Vec(g.m * frame.s()))) < 1e-12);
    CHECK_FALSE(factor_gamma(frame, g).has_value());
  }
}

TEST_CASE("G = BC factorization") {
  const auto sp = make_minkowski(5);
  const Frame frame(sp);
  Rng rng(24);

  SUBCASE("identity") {
    const BCFactors fac = factor_bc(frame, group_element(sp, Mat::Identity(5, 5)));
    CHECK(max_abs_diff(fac.b.m, Mat::Identity(5, 5)) < 1e-12);
    CHECK(fac.c.u.cwiseAbs().maxCoeff() < 1e-15);
    CHECK(fac.c.nu == doctest::Approx(0.0));
  }

  SUBCASE("compose-then-factor roundtrip") {
    for (int i = 0; i < 50; ++i) {
      const GroupElement b0 = random_b(frame, rng);
      const CElement c0 = random_c(frame, rng);
      const GroupElement g = group_element(sp, b0.m * c_to_matrix(frame, c0).m);
      const BCFactors fac = factor_bc(frame, g);
      CHECK(max_abs_diff(fac.b.m, b0.m) < 1e-9);
      CHECK(max_abs_diff(fac.c.u, c0.u) < 1e-9);
      CHECK(fac.c.nu == doctest::Approx(c0.nu).epsilon(1e-9));
    }
  }

  SUBCASE("never fails on SO0") {
    for (int i = 0; i < 200; ++i) {
      const GroupElement g = random_so0(sp, rng);
      CHECK_NOTHROW(factor_bc(frame, g));
    }
  }
}

TEST_CASE("normalizer flip") {
  const auto sp = make_minkowski(4);
  const Frame frame(sp);
  const Vec u = frame.u_basis().front();
  const GroupElement flip = normalizer_flip(frame, u);

  CHECK(max_abs_diff(Vec(flip.m * frame.s()), Vec(-frame.s())) < 1e-12);

  // conjugation sends Lambda_xs to -Lambda_xs - 2 eta(x,u) Lambda_us
  Rng rng(25);
  for (int i = 0; i < 10; ++i) {
    const Vec x = random_s_perp(frame, rng);
    const Mat conj = ad(sp, flip, lambda_op(sp, x, frame.s())).m;
    const Mat expect =
        -lambda_op(sp, x, frame.s()).m - 2.0 * sp.eta(x, u) * lambda_op(sp, u, frame.s()).m;
    CHECK(max_abs_diff(conj, expect) < 1e-12);
  }

  // the square fixes s, so it lands back in the stabilizer
  const Mat sq = flip.m * flip.m;
  CHECK(max_abs_diff(Vec(sq * frame.s()), frame.s()) < 1e-12);

  CHECK_THROWS_AS(normalizer_flip(frame, frame.t()), std::invalid_argument);
  CHECK_THROWS_AS(normalizer_flip(frame, Vec(2.0 * u)), std::invalid_argument);
}

TEST_CASE("A elements and the d flag") {
  const auto sp = make_minkowski(5);
  const Frame frame(sp);
  Rng rng(26);

  const AElement id = a_identity(frame);
  CHECK(id.d == 1.0);

  const GroupElement flip = normalizer_flip(frame, frame.u_basis().front());
  CHECK(a_element(frame, flip).d == -1.0);

  for (int i = 0; i < 30; ++i) {
    const AElement a1 = random_a(frame, rng);
    const AElement a2 = random_a(frame, rng);
    CHECK(a_compose(frame, a1, a2).d == a1.d * a2.d);
    const AElement inv = a_inverse(frame, a1);
    CHECK(max_abs_diff(Mat(inv.g.m * a1.g.m), Mat::Identity(5, 5)) < 1e-12);
  }

  // a boost moving s is not in A
  const GroupElement bad = exp_boost(sp, frame.s(), frame.t(), 0.5);
  CHECK_THROWS_AS(a_element(frame, bad), std::invalid_argument);
}

TEST_CASE("anchor of algebroid sections") {
  const auto sp = make_minkowski(5);
  const Frame frame(sp);
  Rng rng(27);

  SUBCASE("identity base point gives zero") {
    const AlgebroidSection p = section_from_vector(frame, random_s_perp(frame, rng));
    const SkewOperator z = anchor(frame, p, a_identity(frame));
    CHECK(z.m.cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("matches the projection route and kills s") {
    for (int i = 0; i < 30; ++i) {
      const AlgebroidSection p = section_from_vector(frame, random_s_perp(frame, rng));
      const AElement a = random_a(frame, rng);
      const SkewOperator z = anchor(frame, p, a);
      const auto parts = frame.project_onto_a(ad(sp, a.g, p.p));
      CHECK(max_abs_diff(z.m, parts.second.m) < 1e-10);
      CHECK(Vec(z.m * frame.s()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  SUBCASE("sections must lie in c") {
    const auto a_basis = frame.subalgebra_basis(Subalgebra::A);
    CHECK_THROWS_AS(section_from_operator(frame, a_basis.front()), std::invalid_argument);
    CHECK_THROWS_AS(section_from_vector(frame, frame.s()), std::invalid_argument);
    const AlgebroidSection ok = section_from_operator(frame, frame.c_op(1));
    CHECK(max_abs_diff(ok.p.m, frame.c_op(1).m) == 0.0);
  }
}

TEST_CASE("anchor derivative against the finite-difference oracle") {
  const auto sp = make_minkowski(4);
  const Frame frame(sp);
  Rng rng(28);

  SUBCASE("identity point: the flow is stationary") {
    const AlgebroidSection p = section_from_vector(frame, random_s_perp(frame, rng));
    const Covector phi = random_a0(frame, rng);
    const Covector psi = random_a0(frame, rng);
    const AElement e = a_identity(frame);
    CHECK(anchor_derivative(frame, p, phi, psi, e) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(anchor_derivative_fd(frame, p, phi, psi, e) == doctest::Approx(0.0).epsilon(1e-9));
  }

  SUBCASE("k~(rho,psi) = 0 leaves only the second term") {
    // pick psi k~-orthogonal to rho = k(Lambda_xs)
    const Vec x = frame.s_perp_basis(1);
    const AlgebroidSection p = section_from_vector(frame, x);
    const Covector psi = frame.rho(2);
    REQUIRE(form_k_tilde(sp, frame.rho(1), psi) == doctest::Approx(0.0));
    const Covector phi = random_a0(frame, rng);
    const AElement a = random_a(frame, rng);
    const double closed = anchor_derivative(frame, p, phi, psi, a);
    const double second_term =
        ktilde_matrix_fn(frame, phi, frame.rho(1), a.g) *
        (form_k_tilde(sp, frame.rho_bold(), psi) - ktilde_matrix_fn(frame, frame.rho_bold(), psi, a.g));
    CHECK(closed == doctest::Approx(second_term).epsilon(1e-12));
    CHECK(closed == doctest::Approx(anchor_derivative_fd(frame, p, phi, psi, a)).epsilon(1e-6));
  }

  SUBCASE("random draws agree with central differences") {
    for (int i = 0; i < 100; ++i) {
      const AlgebroidSection p = section_from_vector(frame, random_s_perp(frame, rng));
      const Covector phi = random_a0(frame, rng);
      const Covector psi = random_a0(frame, rng);
      const AElement a = random_a(frame, rng);
      const double closed = anchor_derivative(frame, p, phi, psi, a);
      const double fd = anchor_derivative_fd(frame, p, phi, psi, a);
      CHECK(std::abs(closed - fd) < 1e-6);
    }
  }

  SUBCASE("covectors outside a0 are rejected") {
    const AlgebroidSection p = section_from_vector(frame, random_s_perp(frame, rng));
    Covector bad{Vec::Ones(so_dim(4))};
    CHECK_THROWS_AS(anchor_derivative(frame, p, bad, bad, a_identity(frame)),
                    std::invalid_argument);
  }
}
