#pragma once

#include "qtaft/action.hpp"

namespace qtaft {

/// Discrete logarithms of consecutive gamma ratios in the cyclic group
/// generated by lambda: gamma_{k+1} = lambda^{w[k]} gamma_k. The weight of
/// a basis path is the logarithm of gamma_target / gamma_source, which is
/// the signed sum of the w[k] along the path.
struct WeightTable {
  long r = 1;
  std::vector<long> w;

  /// Weight of p_k(u,v), reduced mod r.
  long weight(const NormalPath& p) const;
};

/// Requires a rotation action with every gamma ratio a power of lambda;
/// throws hypothesis_violation otherwise.
WeightTable weight_table(const ActionSpec& spec);

/// Rotation kind, r = m, sigma = 0, all gamma nonzero: the regime in which
/// the closed-form invariant statements hold.
bool invariants_hypothesis_holds(const ActionSpec& spec);

/// Character-weighted orbit sum phi_alpha(p) = sum_i lambda^{-alpha i} g^i(p),
/// reduced in the preprojective algebra. Defined for any rotation spec;
/// throws hypothesis_violation for reflections.
PiElement phi(const ActionSpec& spec, long alpha, const NormalPath& p);

/// Closed-form coefficient of x . phi_alpha(p) = coeff * phi_{alpha+1}(p):
/// gamma_source (lambda^{weight(p)} - lambda^alpha). Requires the
/// closed-form hypothesis.
CycNum x_on_phi_coefficient(const ActionSpec& spec, long alpha, const NormalPath& p);

/// Exact comparison of phi_alpha(p) phi_beta(q) against
/// lambda^{(v-u) beta} phi_{alpha+beta}(p_k(u+u', v+v')) for paths based at
/// the same vertex with all four arrow counts >= 1.
struct PhiProductCheck {
  bool holds = false;
  CycNum coefficient;
  PiElement lhs;
  PiElement rhs;

  PhiProductCheck() : lhs(3), rhs(3) {}
};
PhiProductCheck phi_product(const ActionSpec& spec, long alpha, long beta,
                            const NormalPath& p, const NormalPath& q);

/// Per-degree bases of the invariants: kernels of {g - id, x} on each
/// graded component, computed by exact linear algebra. Works for any
/// verified spec, rotation or reflection.
struct InvariantBasis {
  std::vector<std::vector<PiElement>> per_degree;

  size_t dimension(int ell) const { return per_degree.at(ell).size(); }
};
InvariantBasis invariant_basis(const ActionSpec& spec, int max_degree);

/// Invariants predicted by the character-orbit description: phi_0(p_k(u,v))
/// over orbit representatives k with weight(p) = 0 mod r.
std::vector<PiElement> predicted_invariants(const ActionSpec& spec, int ell);

/// Cross-check of the kernel solver against the character-orbit prediction
/// under the closed-form hypothesis, plus the forced triviality of the mu
/// orbit products when r = m.
ConstraintReport compare_invariants_predicted(const ActionSpec& spec,
                                              const InvariantBasis& basis);

struct InvariantCenterRow {
  int degree = 0;
  size_t dim_invariants = 0;
  size_t dim_center = 0;
  bool dims_equal = false;
  bool mutual_containment = false;
};

/// Degree-by-degree comparison of the invariant ring against the center.
struct InvariantCenterReport {
  std::vector<InvariantCenterRow> rows;
  /// Rotation with r = m, sigma = 0, gamma nonzero and gcd(d, n) = 1; when
  /// false the table is informational only.
  bool closed_form_regime = false;
  /// The unit together with the three cycle generators of degree n, n, 2
  /// spans every invariant component up to the degree bound. Only computed
  /// for rotation specs.
  bool generators_checked = false;
  bool generators_span = false;

  bool invariants_equal_center() const;
  ConstraintReport to_report() const;
  std::string to_string() const;
};

InvariantCenterReport compare_invariants_center(const ActionSpec& spec, int max_degree);

}  // namespace qtaft
