#include "qtaft/invariants.hpp"

#include <numeric>
#include <sstream>

#include "qtaft/errors.hpp"

namespace qtaft {

namespace {

int mod(int value, int n) {
  int r = value % n;
  return r < 0 ? r + n : r;
}

std::optional<long> lambda_log(const CycNum& lambda, long r, const CycNum& value) {
  CycNum acc(1);
  for (long t = 0; t < r; ++t) {
    if (acc == value) return t;
    acc *= lambda;
  }
  return std::nullopt;
}

}  // namespace

long WeightTable::weight(const NormalPath& p) const {
  const int n = static_cast<int>(w.size());
  long total = 0;
  const int diff = p.u - p.v;
  if (diff >= 0) {
    for (int t = 0; t < diff; ++t) total += w[mod(p.k + t, n)];
  } else {
    for (int t = 1; t <= -diff; ++t) total -= w[mod(p.k - t, n)];
  }
  return ((total % r) + r) % r;
}

WeightTable weight_table(const ActionSpec& spec) {
  if (spec.kind != ActionKind::rotation)
    throw hypothesis_violation("weights are defined for rotation actions");
  WeightTable table;
  table.r = spec.taft.r;
  table.w.resize(spec.n);
  const CycNum lam = spec.lambda();
  for (int k = 0; k < spec.n; ++k) {
    if (spec.gamma[k].is_zero())
      throw hypothesis_violation("weights need every gamma to be nonzero");
    const CycNum ratio = spec.gamma_at(k + 1) * spec.gamma[k].inverse();
    const auto exponent = lambda_log(lam, spec.taft.r, ratio);
    if (!exponent)
      throw hypothesis_violation("gamma ratio at " + std::to_string(k) +
                                 " is not a power of lambda");
    table.w[k] = *exponent;
  }
  return table;
}

bool invariants_hypothesis_holds(const ActionSpec& spec) {
  if (spec.kind != ActionKind::rotation || spec.d == 0) return false;
  if (spec.taft.r != spec.taft.m) return false;
  if (!spec.sigma.empty_or_zero()) return false;
  for (const auto& g : spec.gamma)
    if (g.is_zero()) return false;
  return true;
}

PiElement phi(const ActionSpec& spec, long alpha, const NormalPath& p) {
  if (spec.kind != ActionKind::rotation)
    throw hypothesis_violation("character orbits are defined for rotation actions");
  const CycNum lam_inv_alpha = spec.lambda().pow(-alpha);
  PiElement sum(spec.n);
  PiElement term = PiElement::from_path(spec.n, p);
  CycNum character(1);
  for (long i = 0; i < spec.taft.r; ++i) {
    PiElement weighted = term;
    weighted *= character;
    sum += weighted;
    term = act_g(spec, term);
    character *= lam_inv_alpha;
  }
  return sum;
}

CycNum x_on_phi_coefficient(const ActionSpec& spec, long alpha, const NormalPath& p) {
  if (!invariants_hypothesis_holds(spec))
    throw hypothesis_violation("closed-form x action needs rotation, r = m, sigma = 0");
  const WeightTable table = weight_table(spec);
  const CycNum lam = spec.lambda();
  return spec.gamma[mod(p.k, spec.n)] *
         (lam.pow(table.weight(p)) - lam.pow(((alpha % table.r) + table.r) % table.r));
}

PhiProductCheck phi_product(const ActionSpec& spec, long alpha, long beta,
                            const NormalPath& p, const NormalPath& q) {
  if (!invariants_hypothesis_holds(spec))
    throw hypothesis_violation("the product rule needs rotation, r = m, sigma = 0");
  if (mod(p.k, spec.n) != mod(q.k, spec.n))
    throw std::invalid_argument("both paths must be based at the same vertex");
  if (p.u < 1 || p.v < 1 || q.u < 1 || q.v < 1)
    throw std::invalid_argument("the product rule needs all arrow counts >= 1");

  PhiProductCheck check;
  check.coefficient = spec.lambda().pow(static_cast<long>(p.v - p.u) * beta);
  check.lhs = pi_mul(phi(spec, alpha, p), phi(spec, beta, q));
  PiElement rhs = phi(spec, alpha + beta, NormalPath{p.k, p.u + q.u, p.v + q.v});
  rhs *= check.coefficient;
  check.rhs = rhs;
  check.holds = (check.lhs == check.rhs);
  return check;
}

InvariantBasis invariant_basis(const ActionSpec& spec, int max_degree) {
  InvariantBasis result;
  const int n = spec.n;
  for (int ell = 0; ell <= max_degree; ++ell) {
    const auto basis = pi_basis(n, ell);
    CycMatrix system;
    // g - id preserves degree; x maps degree ell into degrees <= ell.
    std::vector<std::vector<CycNum>> g_rows(basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
      const PiElement b = PiElement::from_path(n, basis[col]);
      const PiElement g_image = act_g(spec, b) - b;
      const PiElement x_image = act_x(spec, b);
      g_rows[col] = pi_coordinates(g_image, ell);
      for (int j = 0; j <= ell; ++j) {
        const auto coords = pi_coordinates(x_image.graded_component(j), j);
        g_rows[col].insert(g_rows[col].end(), coords.begin(), coords.end());
      }
    }
    // columns = basis elements; transpose into constraint rows
    const size_t row_count = g_rows.empty() ? 0 : g_rows[0].size();
    CycMatrix constraints(row_count, CycVector(basis.size(), CycNum()));
    for (size_t col = 0; col < basis.size(); ++col)
      for (size_t row = 0; row < row_count; ++row) constraints[row][col] = g_rows[col][row];

    std::vector<PiElement> degree_basis;
    for (const auto& vec : kernel_basis(constraints, basis.size())) {
      PiElement z(n);
      for (size_t i = 0; i < basis.size(); ++i) z.add_term(basis[i], vec[i]);
      degree_basis.push_back(std::move(z));
    }
    result.per_degree.push_back(std::move(degree_basis));
  }
  return result;
}

std::vector<PiElement> predicted_invariants(const ActionSpec& spec, int ell) {
  const WeightTable table = weight_table(spec);
  const long tau = spec.orbit_count();
  std::vector<PiElement> result;
  for (int k = 0; k < tau; ++k) {
    for (int u = ell; u >= 0; --u) {
      const NormalPath p{k, u, ell - u};
      if (table.weight(p) % table.r == 0) result.push_back(phi(spec, 0, p));
    }
  }
  return result;
}

namespace {

CycMatrix coordinate_rows(const std::vector<PiElement>& elements, int ell) {
  CycMatrix rows;
  for (const auto& e : elements) rows.push_back(pi_coordinates(e, ell));
  return rows;
}

}  // namespace

ConstraintReport compare_invariants_predicted(const ActionSpec& spec,
                                              const InvariantBasis& basis) {
  ConstraintReport report;
  if (!invariants_hypothesis_holds(spec)) {
    report.add("invariants.closed_form_prediction", true,
               "skipped: outside the closed-form regime");
    return report;
  }

  {
    // With r = m the mu product along each vertex orbit must be trivial.
    bool ok = true;
    std::string witness;
    const long tau = spec.orbit_count();
    const long kappa = spec.orbit_size();
    for (int k = 0; k < tau && ok; ++k) {
      CycNum prod(1);
      for (long t = 0; t < kappa; ++t)
        prod *= spec.mu[mod(k + static_cast<int>(t) * spec.d, spec.n)];
      if (!prod.is_one()) {
        ok = false;
        witness = "mu orbit product at " + std::to_string(k) + " is " + prod.to_string();
      }
    }
    report.add("invariants.mu_orbit_products_trivial", ok, witness);
  }

  bool ok = true;
  std::string witness;
  for (int ell = 0; ell < static_cast<int>(basis.per_degree.size()) && ok; ++ell) {
    const auto predicted = predicted_invariants(spec, ell);
    const CycMatrix kernel_rows = coordinate_rows(basis.per_degree[ell], ell);
    const CycMatrix predicted_rows = coordinate_rows(predicted, ell);
    if (!span_contained(predicted_rows, kernel_rows) ||
        !span_contained(kernel_rows, predicted_rows)) {
      ok = false;
      witness = "degree " + std::to_string(ell) + ": kernel dim " +
                std::to_string(kernel_rows.size()) + ", predicted dim " +
                std::to_string(predicted_rows.size());
    }
  }
  report.add("invariants.closed_form_prediction", ok, witness);
  return report;
}

bool InvariantCenterReport::invariants_equal_center() const {
  for (const auto& row : rows)
    if (!row.dims_equal || !row.mutual_containment) return false;
  return true;
}

ConstraintReport InvariantCenterReport::to_report() const {
  ConstraintReport report;
  for (const auto& row : rows) {
    const bool ok = row.dims_equal && row.mutual_containment;
    report.add("invariants.center_degree_" + std::to_string(row.degree), ok,
               ok ? ""
                  : "dim invariants " + std::to_string(row.dim_invariants) +
                        ", dim center " + std::to_string(row.dim_center));
  }
  if (generators_checked) {
    report.add("invariants.cycle_generators_span", generators_span,
               generators_span ? "" : "the unit and cycle generators fail to span");
  }
  return report;
}

std::string InvariantCenterReport::to_string() const {
  std::ostringstream out;
  out << "degree  dim_invariants  dim_center  equal  mutual\n";
  for (const auto& row : rows) {
    out << row.degree << "       " << row.dim_invariants << "               "
        << row.dim_center << "           " << (row.dims_equal ? "yes" : "NO") << "    "
        << (row.mutual_containment ? "yes" : "NO") << "\n";
  }
  if (generators_checked)
    out << "generators span invariants: " << (generators_span ? "yes" : "NO") << "\n";
  if (!closed_form_regime)
    out << "informational only: outside the closed-form regime (gcd(d, n) != 1 or "
           "hypotheses fail)\n";
  return out.str();
}

InvariantCenterReport compare_invariants_center(const ActionSpec& spec, int max_degree) {
  InvariantCenterReport report;
  const int n = spec.n;
  report.closed_form_regime =
      invariants_hypothesis_holds(spec) &&
      std::gcd(static_cast<long>(spec.d), static_cast<long>(n)) == 1;

  const InvariantBasis invariants = invariant_basis(spec, max_degree);
  const auto center = center_basis(n, max_degree);

  for (int ell = 0; ell <= max_degree; ++ell) {
    InvariantCenterRow row;
    row.degree = ell;
    row.dim_invariants = invariants.per_degree[ell].size();
    row.dim_center = center[ell].size();
    row.dims_equal = (row.dim_invariants == row.dim_center);
    const CycMatrix inv_rows = coordinate_rows(invariants.per_degree[ell], ell);
    const CycMatrix center_rows = coordinate_rows(center[ell], ell);
    row.mutual_containment =
        span_contained(inv_rows, center_rows) && span_contained(center_rows, inv_rows);
    report.rows.push_back(row);
  }

  // Do the unit and the three cycle generators span all invariants up to
  // max_degree under multiplication?
  if (spec.kind == ActionKind::rotation) {
    report.generators_checked = true;
    std::vector<PiElement> generators = {
        phi(spec, 0, NormalPath{0, n, 0}),
        phi(spec, 0, NormalPath{0, 0, n}),
        phi(spec, 0, NormalPath{0, 1, 1}),
    };
    const std::vector<int> degrees = {n, n, 2};
    PiElement unit(n);
    for (int i = 0; i < n; ++i) unit.add_term(NormalPath{i, 0, 0}, CycNum(1));

    std::vector<std::vector<PiElement>> monomials(max_degree + 1);
    monomials[0].push_back(unit);
    // Exponent vectors (a, b, c) with a*n + b*n + 2*c <= max_degree.
    for (int a = 0; a * n <= max_degree; ++a) {
      for (int b = 0; a * n + b * n <= max_degree; ++b) {
        for (int c = 0; a * n + b * n + 2 * c <= max_degree; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          PiElement value = unit;
          for (int i = 0; i < a; ++i) value = pi_mul(value, generators[0]);
          for (int i = 0; i < b; ++i) value = pi_mul(value, generators[1]);
          for (int i = 0; i < c; ++i) value = pi_mul(value, generators[2]);
          monomials[a * n + b * n + 2 * c].push_back(std::move(value));
        }
      }
    }
    bool span_ok = true;
    for (int ell = 0; ell <= max_degree && span_ok; ++ell) {
      const CycMatrix inv_rows = coordinate_rows(invariants.per_degree[ell], ell);
      const CycMatrix mono_rows = coordinate_rows(monomials[ell], ell);
      span_ok = span_contained(inv_rows, mono_rows) &&
                span_contained(mono_rows, inv_rows);
    }
    report.generators_span = span_ok;
  }

  return report;
}

}  // namespace qtaft
