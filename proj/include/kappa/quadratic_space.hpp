#pragma once

#include <vector>

#include "kappa/linalg.hpp"

namespace kappa {

// A real vector space with a symmetric nondegenerate bilinear form. The
// canonical construction is Minkowski signature (+,-,...,-) on the standard
// basis; a general symmetric metric is accepted but the so(eta) coordinate
// machinery requires the canonical diagonal form.
class QuadraticSpace {
 public:
  static QuadraticSpace minkowski(int dim);
  static QuadraticSpace from_metric(const Mat& metric);

  int dim() const { return dim_; }
  const Mat& metric() const { return metric_; }
  const std::vector<int>& signature() const { return signature_; }

  double eta(const Vec& x, const Vec& y) const;
  // eta as the musical map V -> V*: returns the coordinate row eta(x, .).
  Vec eta_lower(const Vec& x) const { return metric_ * x; }

  // sgn(v) := eta(v,v) for |eta(v,v)| = 1.
  double sgn(const Vec& v) const;

  Vec basis_vector(int i) const;

  // True when metric is diag(+-1) with the signature order of the standard
  // basis; the so(eta) basis bookkeeping assumes this.
  bool is_canonical_diagonal() const { return canonical_; }

 private:
  QuadraticSpace(int dim, Mat metric, std::vector<int> signature, bool canonical)
      : dim_(dim), metric_(std::move(metric)), signature_(std::move(signature)), canonical_(canonical) {}

  int dim_;
  Mat metric_;
  std::vector<int> signature_;
  bool canonical_;
};

// The ambient space of the kappa-Poincare construction: Minkowski of total
// dimension n+2, n > 1, i.e. dim >= 4.
QuadraticSpace make_minkowski(int n_total);

}  // namespace kappa
