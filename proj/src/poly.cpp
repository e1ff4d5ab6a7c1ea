#include "kappa/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kappa {

namespace {

// eta_{ab} of the rho basis, diag(1,-1,...,-1).
double eta_rho(int a, int b) {
  if (a != b) return 0.0;
  return a == 0 ? 1.0 : -1.0;
}

Monomial merge_sorted(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PolyFunction PolyFunction::constant(double c) {
  PolyFunction p;
  p.add({}, c);
  return p;
}

PolyFunction PolyFunction::atom(const Generator& g, double coeff) {
  PolyFunction p;
  p.add({g}, coeff);
  return p;
}

double PolyFunction::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void PolyFunction::add(const Monomial& m, double coeff) {
  const double value = (terms_[m] += coeff);
  if (std::abs(value) < kCoeffPrune) terms_.erase(m);
}

PolyFunction& PolyFunction::operator+=(const PolyFunction& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

PolyFunction& PolyFunction::operator-=(const PolyFunction& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

PolyFunction& PolyFunction::operator*=(double s) {
  for (auto& [k, c] : terms_) c *= s;
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = std::abs(it->second) < kCoeffPrune ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

PolyFunction operator*(const PolyFunction& a, const PolyFunction& b) {
  PolyFunction out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      out.add(merge_sorted(ka, kb), ca * cb);
    }
  }
  return out;
}

double max_coeff_diff(const PolyFunction& a, const PolyFunction& b) {
  double m = 0.0;
  for (const auto& [k, c] : a.terms()) {
    const auto it = b.terms().find(k);
    m = std::max(m, std::abs(c - (it == b.terms().end() ? 0.0 : it->second)));
  }
  for (const auto& [k, c] : b.terms()) {
    if (a.terms().find(k) == a.terms().end()) m = std::max(m, std::abs(c));
  }
  return m;
}

namespace {

// {k~_phi, k~_psi} = k~(rho0,phi) k~_psi - k~(rho0,psi) k~_phi on basis
// covectors: {T_a, T_b} = delta_{0a} T_b - delta_{0b} T_a.
PolyFunction structural_tt(int a, int b) {
  PolyFunction out;
  if (a == 0) out += PolyFunction::atom(gen_t(b));
  if (b == 0) out -= PolyFunction::atom(gen_t(a));
  return out;
}

// {k~_lambda, k~_{phi psi}} = k~_{lambda psi}(k~_{phi rho0} - k~(rho0,phi))
//                           + k~(lambda,phi)(k~_{rho0 psi} - k~(rho0,psi))
// on basis covectors lambda = rho_l, phi = rho_a, psi = rho_b.
PolyFunction structural_tm(int l, int a, int b) {
  PolyFunction out;
  Monomial quad{gen_m(l, b), gen_m(a, 0)};
  std::sort(quad.begin(), quad.end());
  out.add(quad, 1.0);
  if (a == 0) out.add({gen_m(l, b)}, -1.0);
  const double eta_la = eta_rho(l, a);
  if (eta_la != 0.0) {
    out.add({gen_m(0, b)}, eta_la);
    if (b == 0) out.add({}, -eta_la);
  }
  return out;
}

// {v_a, v_b} = h (v_a delta_{b0} - v_b delta_{a0}).
PolyFunction zak_tt(int a, int b, double h) {
  PolyFunction out;
  if (b == 0) out += PolyFunction::atom(gen_t(a), h);
  if (a == 0) out -= PolyFunction::atom(gen_t(b), h);
  return out;
}

// {Lambda_{mn}, v_b} = h[(Lambda_{m0} - delta_{m0}) Lambda_{bn}
//                        + eta_{mb}(Lambda_{0n} - delta_{0n})].
PolyFunction zak_mt(int m, int n, int b, double h) {
  PolyFunction out;
  Monomial quad{gen_m(m, 0), gen_m(b, n)};
  std::sort(quad.begin(), quad.end());
  out.add(quad, h);
  if (m == 0) out.add({gen_m(b, n)}, -h);
  const double eta_mb = eta_rho(m, b);
  if (eta_mb != 0.0) {
    out.add({gen_m(0, n)}, h * eta_mb);
    if (n == 0) out.add({}, -h * eta_mb);
  }
  return out;
}

}  // namespace

PolyFunction generator_bracket(BracketKind kind, const Generator& g1, const Generator& g2,
                               double h) {
  const bool t1 = g1.kind == GenKind::Translation;
  const bool t2 = g2.kind == GenKind::Translation;
  if (kind == BracketKind::Structural) {
    if (t1 && t2) return structural_tt(g1.a, g2.a);
    if (t1 && !t2) return structural_tm(g1.a, g2.a, g2.b);
    if (!t1 && t2) return -1.0 * structural_tm(g2.a, g1.a, g1.b);
    return PolyFunction{};
  }
  if (t1 && t2) return zak_tt(g1.a, g2.a, h);
  if (!t1 && t2) return zak_mt(g1.a, g1.b, g2.a, h);
  if (t1 && !t2) return -1.0 * zak_mt(g2.a, g2.b, g1.a, h);
  return PolyFunction{};
}

PolyFunction poisson_bracket(BracketKind kind, const PolyFunction& f, const PolyFunction& g,
                             double h) {
  PolyFunction out;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      // Leibniz over both monomials: sum over generator picks.
      for (size_t i = 0; i < mf.size(); ++i) {
        Monomial rest_f = mf;
        rest_f.erase(rest_f.begin() + static_cast<long>(i));
        for (size_t j = 0; j < mg.size(); ++j) {
          Monomial rest_g = mg;
          rest_g.erase(rest_g.begin() + static_cast<long>(j));
          const PolyFunction gb = generator_bracket(kind, mf[i], mg[j], h);
          if (gb.is_zero()) continue;
          const Monomial rest = merge_sorted(rest_f, rest_g);
          for (const auto& [mb, cb] : gb.terms()) {
            out.add(merge_sorted(rest, mb), cf * cg * cb);
          }
        }
      }
    }
  }
  return out;
}

PolyFunction jacobiator(BracketKind kind, const PolyFunction& f, const PolyFunction& g,
                        const PolyFunction& p, double h) {
  PolyFunction out = poisson_bracket(kind, f, poisson_bracket(kind, g, p, h), h);
  out += poisson_bracket(kind, g, poisson_bracket(kind, p, f, h), h);
  out += poisson_bracket(kind, p, poisson_bracket(kind, f, g, h), h);
  return out;
}

PolyFunction sign_substitution(const PolyFunction& f) {
  PolyFunction out;
  for (const auto& [m, c] : f.terms()) {
    double sign = 1.0;
    for (const Generator& g : m) {
      if (g.a != 0) sign = -sign;
    }
    out.add(m, sign * c);
  }
  return out;
}

}  // namespace kappa
