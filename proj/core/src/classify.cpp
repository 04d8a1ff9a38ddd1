#include "qtaft/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qtaft/errors.hpp"

namespace qtaft {

namespace {

int mod(int value, int n) {
  int r = value % n;
  return r < 0 ? r + n : r;
}

CycNum product(const std::vector<CycNum>& values) {
  CycNum out(1);
  for (const auto& v : values) out *= v;
  return out;
}

// table[from] * table[from-step] * ... down to table[to]; empty when from < to.
CycNum descending_product(const std::vector<CycNum>& table, int from, int to, int step) {
  CycNum out(1);
  for (int i = from; i >= to; i -= step) out *= table[i];
  return out;
}

// Exponent t in [0, order) with base^t = value, if any.
std::optional<long> power_exponent(const CycNum& base, long order, const CycNum& value) {
  CycNum acc(1);
  for (long t = 0; t < order; ++t) {
    if (acc == value) return t;
    acc *= base;
  }
  return std::nullopt;
}

// Coefficient of sigma(a) on its shape path; nullopt when sigma(a) is not
// a multiple of that single path (or is nonzero where no path is allowed).
std::optional<CycNum> sigma_coefficient(const ActionSpec& spec, const Arrow& a) {
  const FreeElement image = spec.sigma.of_arrow(a, spec.n);
  const auto shape = sigma_shape_path(spec, a);
  if (!shape) return image.is_zero() ? std::optional<CycNum>(CycNum()) : std::nullopt;
  if (image.is_zero()) return CycNum();
  if (image.terms().size() != 1) return std::nullopt;
  const auto& [word, coeff] = *image.terms().begin();
  if (!(word == *shape)) return std::nullopt;
  return coeff;
}

}  // namespace

std::vector<int> reflection_fixed_vertices(int n, int d) {
  std::vector<int> fixed;
  for (int j = 0; j < n; ++j)
    if (mod(n - (d + j), n) == j) fixed.push_back(j);
  return fixed;
}

std::vector<int> reflection_edge_vertices(int n, int d) {
  std::vector<int> edges;
  for (int k = 0; k < n; ++k)
    if (mod(n - (d + k), n) == mod(k + 1, n)) edges.push_back(k);
  return edges;
}

std::optional<PathWord> sigma_shape_path(const ActionSpec& spec, const Arrow& a) {
  const int n = spec.n;
  const int source = arrow_source(a, n);
  const int target = spec.g_vertex(arrow_target(a, n));
  if (source == target) return PathWord::trivial(n, source);
  if (mod(source + 1, n) == target) return PathWord::from_arrow(n, Arrow{source, false});
  if (mod(source - 1, n) == target)
    return PathWord::from_arrow(n, Arrow{mod(source - 1, n), true});
  return std::nullopt;
}

namespace {

void check_rotation_necessary(const ActionSpec& spec, ConstraintReport& report) {
  const int n = spec.n;
  const int d = spec.d;
  const CycNum lam = spec.lambda();
  const long r = spec.taft.r;
  const long m = spec.taft.m;
  const long kappa = spec.orbit_size();
  const long tau = spec.orbit_count();
  const bool exceptional = (n == 4 && d == 2);
  const bool has_gamma = spec.any_gamma_nonzero();
  const bool all_gamma = std::all_of(spec.gamma.begin(), spec.gamma.end(),
                                     [](const CycNum& g) { return !g.is_zero(); });

  // Orbit products of mu along i, i+d, i+2d, ..., one per orbit.
  std::vector<CycNum> zeta(tau, CycNum(1)), zeta_star(tau, CycNum(1));
  for (int k = 0; k < tau; ++k) {
    for (long t = 0; t < kappa; ++t) {
      zeta[k] *= spec.mu[mod(k + static_cast<int>(t) * d, n)];
      zeta_star[k] *= spec.mu_star[mod(k + static_cast<int>(t) * d, n)];
    }
  }

  if (has_gamma) {
    report.add("necessary.orbit_size_matches_r", kappa == r,
               kappa == r ? ""
                          : "orbit size " + std::to_string(kappa) +
                                " != r = " + std::to_string(r));
  }

  {
    bool ok = true;
    std::string witness;
    for (int k = 0; k < tau && ok; ++k) {
      if (!zeta[k].pow(m / kappa).is_one() || !zeta_star[k].pow(m / kappa).is_one()) {
        ok = false;
        witness = "orbit " + std::to_string(k);
      }
    }
    report.add("necessary.mu_orbit_products_roots", ok, witness);
  }

  if (!exceptional && has_gamma) {
    {
      bool ok = true;
      std::string witness;
      for (int i = 0; i < n && ok; ++i) {
        const CycNum next_pow = spec.gamma[mod(i + 1, n)].pow(r);
        const CycNum base_pow = spec.gamma[i].pow(r);
        const int k = mod(i, static_cast<int>(tau));
        if (next_pow != zeta[k] * base_pow || next_pow * zeta_star[k] != base_pow) {
          ok = false;
          witness = "index " + std::to_string(i);
        }
      }
      report.add("necessary.gamma_power_step", ok, witness);
    }

    report.add("necessary.gamma_nonvanishing", all_gamma,
               all_gamma ? "" : "some gamma_i vanishes while another does not");

    {
      bool ok = true;
      std::string witness;
      for (int k = 0; k < tau && ok; ++k) {
        if (!(zeta[k] * zeta_star[k]).is_one()) {
          ok = false;
          witness = "orbit " + std::to_string(k);
        }
      }
      report.add("necessary.mu_orbit_products_inverse", ok, witness);
    }

    {
      const bool ok = product(spec.mu).is_one() && product(spec.mu_star).is_one();
      report.add("necessary.mu_product_identity", ok,
                 ok ? "" : "full mu or mu_star product differs from 1");
    }

    if (std::gcd(static_cast<long>(n), static_cast<long>(d)) == 1) {
      report.add("necessary.m_equals_n_when_coprime", m == n,
                 m == n ? "" : "m = " + std::to_string(m) + ", n = " + std::to_string(n));
    }

    {
      bool ok = true;
      std::string witness;
      for (int i = 0; i < n && ok; ++i) {
        if (!power_exponent(lam, r, spec.mu[i] * spec.mu_star[i])) {
          ok = false;
          witness = "mu_" + std::to_string(i) + " * mu_" + std::to_string(i) +
                    "^* is not a power of lambda";
        }
      }
      report.add("necessary.mu_pair_lambda_power", ok, witness);
    }

    if (all_gamma && kappa == r) {
      bool ok = true;
      std::string witness;
      std::vector<CycNum> xi(n);
      for (int i = 0; i < n; ++i) xi[i] = spec.gamma[mod(i + 1, n)] * spec.gamma[i].inverse();
      for (int i = 0; i < n && ok; ++i) {
        if (!xi[i].pow(m).is_one()) {
          ok = false;
          witness = "gamma_" + std::to_string(i + 1) + "/gamma_" + std::to_string(i) +
                    " is not an m-th root of unity";
        }
        if (ok && xi[i] != xi[mod(i + d, n)]) {
          ok = false;
          witness = "gamma ratio differs along the orbit at index " + std::to_string(i);
        }
      }
      for (int k = 0; k < tau && ok; ++k) {
        if (xi[k].pow(r) != zeta[k]) {
          ok = false;
          witness = "ratio^r != mu orbit product at orbit " + std::to_string(k);
        }
      }
      if (ok) {
        const long power = r * d / n;  // = d / tau, an integer
        for (int k = 0; k < tau && ok; ++k) {
          CycNum ladder(1);
          for (int t = 0; t < tau; ++t) ladder *= xi[mod(k + t, n)];
          if (ladder.pow(power) != lam.inverse()) {
            ok = false;
            witness = "ratio ladder product at orbit " + std::to_string(k);
          }
        }
      }
      report.add("necessary.gamma_ratio_ladder", ok, witness);
    }
  }

  if (!exceptional) {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < 2 * n && ok; ++i) {
      const Arrow a{i % n, i >= n};
      if (!spec.sigma.power_on_arrow(a, n, r).is_zero()) {
        ok = false;
        witness = "sigma^r(" + arrow_to_string(a) + ") != 0";
      }
    }
    report.add("necessary.sigma_nilpotent", ok, witness);
  }

  // Shape of sigma with the two-seed closed forms.
  {
    bool ok = true;
    std::string witness;
    const auto fail = [&](const std::string& w) {
      ok = false;
      witness = w;
    };
    std::optional<CycNum> c0 = sigma_coefficient(spec, Arrow{0, false});
    std::optional<CycNum> c1 = sigma_coefficient(spec, Arrow{1, false});
    std::optional<CycNum> c0s = sigma_coefficient(spec, Arrow{0, true});
    std::optional<CycNum> c1s = sigma_coefficient(spec, Arrow{1, true});
    if (!c0 || !c1 || !c0s || !c1s) {
      fail("sigma image is not a multiple of its shape path");
    } else {
      for (int i = 0; i < n && ok; ++i) {
        const auto actual = sigma_coefficient(spec, Arrow{i, false});
        const auto actual_star = sigma_coefficient(spec, Arrow{i, true});
        if (!actual || !actual_star) {
          fail("sigma image is not a multiple of its shape path at index " +
               std::to_string(i));
          break;
        }
        CycNum expected(0);
        if (d == n - 1) {
          expected = lam.pow(i) * descending_product(spec.mu, i, 1, 1) * (*c0);
        } else if (d == n - 2) {
          if (i % 2 == 0) {
            expected = lam.pow(i / 2) * descending_product(spec.mu, i, 2, 2) *
                       descending_product(spec.mu_star, i - 1, 1, 2).inverse() * (*c0);
          } else {
            expected = lam.pow((i - 1) / 2) * descending_product(spec.mu, i, 3, 2) *
                       descending_product(spec.mu_star, i - 1, 2, 2).inverse() * (*c1);
          }
        }
        if (*actual != expected) {
          fail("sigma(a" + std::to_string(i) + ") differs from its closed form");
          break;
        }
        CycNum expected_star(0);
        if (d == 1) {
          expected_star =
              (lam.pow(i) * descending_product(spec.mu_star, i - 1, 0, 1)).inverse() *
              (*c0s);
        } else if (d == 2) {
          if (i % 2 == 0) {
            expected_star = lam.pow(i / 2).inverse() *
                            descending_product(spec.mu, i - 1, 1, 2) *
                            descending_product(spec.mu_star, i - 2, 0, 2).inverse() *
                            (*c0s);
          } else {
            expected_star = lam.pow((i - 1) / 2).inverse() *
                            descending_product(spec.mu, i - 1, 2, 2) *
                            descending_product(spec.mu_star, i - 2, 1, 2).inverse() *
                            (*c1s);
          }
        }
        if (*actual_star != expected_star) {
          fail("sigma(a" + std::to_string(i) + "*) differs from its closed form");
          break;
        }
      }
    }
    report.add("necessary.sigma_closed_form", ok, witness);
  }

  // Descent collapses the sigma coefficients to a single seed chain.
  {
    bool ok = true;
    std::string witness;
    const auto c0 = sigma_coefficient(spec, Arrow{0, false});
    const auto c0s = sigma_coefficient(spec, Arrow{0, true});
    if (!c0 || !c0s) {
      ok = false;
      witness = "sigma image is not a multiple of its shape path";
    } else {
      for (int i = 0; i < n && ok; ++i) {
        const auto actual = sigma_coefficient(spec, Arrow{i, false});
        const auto actual_star = sigma_coefficient(spec, Arrow{i, true});
        if (!actual || !actual_star) {
          ok = false;
          witness = "sigma image is not a multiple of its shape path";
          break;
        }
        CycNum expected(0);
        if (d == n - 1 || d == n - 2) {
          expected = lam.pow(i) * descending_product(spec.mu, i, 1, 1) * (*c0);
        }
        CycNum expected_star(0);
        if (d == 1 || d == 2) {
          expected_star =
              (lam.pow(i) * descending_product(spec.mu_star, i - 1, 0, 1)).inverse() *
              (*c0s);
        }
        if (*actual != expected || *actual_star != expected_star) {
          ok = false;
          witness = "sigma chain at index " + std::to_string(i) +
                    " is not generated by a single seed";
        }
      }
      if (ok) {
        const bool c_nonzero = !c0->is_zero();
        const bool cs_nonzero = !c0s->is_zero();
        if (c_nonzero && !product(spec.mu).is_one()) {
          ok = false;
          witness = "c != 0 but the full mu product differs from 1";
        }
        if (ok && cs_nonzero && !product(spec.mu_star).is_one()) {
          ok = false;
          witness = "c* != 0 but the full mu_star product differs from 1";
        }
        if (ok && (c_nonzero || cs_nonzero)) {
          const CycNum lam_inv = lam.inverse();
          for (int i = 0; i < n && ok; ++i) {
            if (spec.mu[i] * spec.mu_star[i] != lam_inv) {
              ok = false;
              witness = "mu_i mu_i^* != lambda^{-1} at index " + std::to_string(i);
            }
          }
          if (ok && (n % 2 == 1 || d % 2 == 1) && m != std::lcm(r, static_cast<long>(n))) {
            ok = false;
            witness = "m != lcm(r, n)";
          }
        }
      }
    }
    report.add("necessary.sigma_descent_constraints", ok, witness);
  }

  // Odd cycles tie the whole sigma chain to the seed at index 0.
  if (n % 2 == 1 && (d == n - 2 || d == 2)) {
    bool ok = true;
    std::string witness;
    const bool starred = (d == 2);
    std::vector<CycNum> chain(n);
    bool extract_ok = true;
    for (int i = 0; i < n; ++i) {
      const auto coeff = sigma_coefficient(spec, Arrow{i, starred});
      if (!coeff) {
        extract_ok = false;
        break;
      }
      chain[i] = *coeff;
    }
    if (!extract_ok) {
      ok = false;
      witness = "sigma image is not a multiple of its shape path";
    } else {
      const bool any_nonzero = std::any_of(chain.begin(), chain.end(),
                                           [](const CycNum& c) { return !c.is_zero(); });
      if (chain[0].is_zero() && any_nonzero) {
        ok = false;
        witness = "seed vanishes but a later chain coefficient does not";
      }
      if (ok && any_nonzero && n % r == 0 && product(spec.mu) != product(spec.mu_star)) {
        ok = false;
        witness = "mu and mu_star full products differ";
      }
    }
    report.add("necessary.sigma_chain_closure", ok, witness);
  }

  if (exceptional) {
    std::vector<FreeElement> sigma_squares;
    bool squares_zero = true;
    for (int i = 0; i < 2 * n; ++i) {
      const Arrow a{i % n, i >= n};
      sigma_squares.push_back(spec.sigma.power_on_arrow(a, n, 2));
      if (!sigma_squares.back().is_zero()) squares_zero = false;
    }
    const bool gamma_zero = !has_gamma;
    const bool branch_two = all_gamma && product(spec.mu).is_one() &&
                            product(spec.mu_star).is_one() &&
                            spec.gamma[1].pow(2) ==
                                spec.mu[0] * spec.mu[2] * spec.gamma[0].pow(2);
    const bool rhs = gamma_zero || branch_two;
    report.add("necessary.exceptional_sigma_square", squares_zero == rhs,
               squares_zero == rhs
                   ? ""
                   : std::string("sigma^2 vanishing does not match the scalar criterion (") +
                         (squares_zero ? "zero" : "nonzero") + " vs " +
                         (rhs ? "zero" : "nonzero") + " predicted)");

    if (!spec.sigma.power_on_arrow(Arrow{0, false}, n, 2).is_zero()) {
      bool ok = true;
      std::string witness;
      const auto c0 = sigma_coefficient(spec, Arrow{0, false});
      const auto c0s = sigma_coefficient(spec, Arrow{0, true});
      if (r != 2) {
        ok = false;
        witness = "r != 2";
      } else if (!all_gamma) {
        ok = false;
        witness = "gamma vanishes somewhere";
      } else if (!c0 || !c0s) {
        ok = false;
        witness = "sigma image is not a multiple of its shape path";
      } else if (!product(spec.mu).is_one() || !product(spec.mu_star).is_one()) {
        ok = false;
        witness = "full mu or mu_star product differs from 1";
      } else {
        for (int i = 0; i < n && ok; ++i) {
          if (spec.mu[i] * spec.mu_star[i] != CycNum(-1)) {
            ok = false;
            witness = "mu_i mu_i^* != -1 at index " + std::to_string(i);
          }
        }
        if (ok && spec.mu[0] * spec.mu[2] != spec.mu_star[1] * spec.mu_star[3]) {
          ok = false;
          witness = "mu_0 mu_2 != mu_1^* mu_3^*";
        }
        if (ok && spec.mu[1] * spec.mu[3] != spec.mu_star[0] * spec.mu_star[2]) {
          ok = false;
          witness = "mu_1 mu_3 != mu_0^* mu_2^*";
        }
        if (ok && spec.gamma[1].pow(2) !=
                      spec.gamma[0].pow(2) * spec.mu[0] * spec.mu[2] -
                          spec.mu[3].inverse() * (*c0) * (*c0s)) {
          ok = false;
          witness = "gamma_1^2 does not solve the seed quadratic";
        }
      }
      report.add("necessary.exceptional_scalar_relations", ok, witness);
    }
  }
}

void check_reflection_necessary(const ActionSpec& spec, ConstraintReport& report) {
  const int n = spec.n;
  const int d = spec.d;
  const CycNum lam = spec.lambda();
  const long m = spec.taft.m;
  const auto fixed = reflection_fixed_vertices(n, d);
  const auto edges = reflection_edge_vertices(n, d);
  const int partner_shift = n - d - 1;  // arrow index paired with i under g

  report.add("necessary.reflection_r_two", spec.taft.r == 2,
             spec.taft.r == 2 ? "" : "r = " + std::to_string(spec.taft.r));

  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < n && ok; ++i) {
      if (!(spec.mu[i] * spec.mu_star[i]).is_one()) {
        ok = false;
        witness = "index " + std::to_string(i);
      }
    }
    report.add("necessary.reflection_mu_unit", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    std::set<int> sigma_support;
    for (const int j : fixed) {
      sigma_support.insert(mod(j - 1, n));
      sigma_support.insert(j);
    }
    for (const int k : edges) sigma_support.insert(k);

    for (int i = 0; i < n && ok; ++i) {
      if (sigma_support.count(i)) continue;
      if (!spec.sigma.of_arrow(Arrow{i, false}, n).is_zero() ||
          !spec.sigma.of_arrow(Arrow{i, true}, n).is_zero()) {
        ok = false;
        witness = "sigma is supported off the axis at index " + std::to_string(i);
      }
    }
    for (const int j : fixed) {
      if (!ok) break;
      const auto cj = sigma_coefficient(spec, Arrow{j, false});
      const auto cjs = sigma_coefficient(spec, Arrow{j, true});
      const auto prev = sigma_coefficient(spec, Arrow{mod(j - 1, n), false});
      const auto prev_star = sigma_coefficient(spec, Arrow{mod(j - 1, n), true});
      if (!cj || !cjs || !prev || !prev_star) {
        ok = false;
        witness = "sigma image is not a multiple of its shape path near vertex " +
                  std::to_string(j);
        break;
      }
      if (*prev != -(*cjs) ||
          *prev_star != -(spec.mu[j].inverse() * spec.mu_star[mod(j - 1, n)] * (*cj))) {
        ok = false;
        witness = "sigma coefficients around fixed vertex " + std::to_string(j) +
                  " violate the equivariance pattern";
      }
    }
    for (const int k : edges) {
      if (!ok) break;
      const auto ck = sigma_coefficient(spec, Arrow{k, false});
      const auto cks = sigma_coefficient(spec, Arrow{k, true});
      if (!ck || !cks) {
        ok = false;
        witness = "sigma image is not a multiple of its shape path near edge " +
                  std::to_string(k);
        break;
      }
      if (*cks != lam * spec.mu_star[k] * (*ck)) {
        ok = false;
        witness = "sigma coefficients at the edge axis " + std::to_string(k) +
                  " violate the equivariance pattern";
      }
      if (ok && !ck->is_zero() &&
          !(lam.pow(2) * spec.mu[k] * spec.mu_star[k]).is_one()) {
        ok = false;
        witness = "nonzero edge seed requires lambda^2 mu_k mu_k^* = 1";
      }
    }
    report.add("necessary.reflection_sigma_shape", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    std::set<int> excluded;
    for (const int j : fixed) {
      excluded.insert(mod(j - 1, n));
      excluded.insert(j);
    }
    for (const int j : fixed) {
      if (!ok) break;
      const auto cj = sigma_coefficient(spec, Arrow{j, false});
      const auto cjs = sigma_coefficient(spec, Arrow{j, true});
      if (!cj || !cjs) {
        ok = false;
        witness = "sigma image is not a multiple of its shape path";
        break;
      }
      const CycNum prev_gamma_sq = spec.gamma_at(j - 1).pow(2);
      if (cj->pow(2) !=
          spec.mu[j] * spec.mu_star[mod(j - 1, n)].inverse() * prev_gamma_sq) {
        ok = false;
        witness = "c_j^2 mismatch at fixed vertex " + std::to_string(j);
      }
      if (ok && cjs->pow(2) != spec.mu_star[j] * spec.mu[mod(j - 1, n)] * prev_gamma_sq) {
        ok = false;
        witness = "c_j*^2 mismatch at fixed vertex " + std::to_string(j);
      }
    }
    for (int i = 0; i < n && ok; ++i) {
      if (excluded.count(i)) continue;
      const int partner = mod(partner_shift - i, n);
      const CycNum lhs = spec.gamma_at(i + 1).pow(2);
      const CycNum base = spec.gamma[i].pow(2);
      if (lhs != spec.mu[i] * spec.mu_star[partner] * base ||
          lhs * spec.mu_star[i] * spec.mu[partner] != base) {
        ok = false;
        witness = "gamma square step fails at index " + std::to_string(i);
      }
    }
    if (ok) {
      const bool any = spec.any_gamma_nonzero();
      for (int i = 0; i < n && ok && any; ++i) {
        if (spec.g_vertex(i) != i && spec.gamma[i].is_zero()) {
          ok = false;
          witness = "gamma vanishes at the moved vertex " + std::to_string(i);
        }
      }
    }
    report.add("necessary.reflection_gamma_squares", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    const auto mu_unit_everywhere = [&]() {
      for (int i = 0; i < n; ++i)
        if (!(spec.mu[i] * spec.mu_star[i]).is_one()) return false;
      return true;
    };
    for (const int j : fixed) {
      if (!ok) break;
      const auto cj = sigma_coefficient(spec, Arrow{j, false});
      const auto cjs = sigma_coefficient(spec, Arrow{j, true});
      if (!cj || !cjs) {
        ok = false;
        witness = "sigma image is not a multiple of its shape path";
        break;
      }
      if (*cjs != -(spec.mu[j].inverse() * (*cj))) {
        ok = false;
        witness = "c_j^* != -mu_j^{-1} c_j at fixed vertex " + std::to_string(j);
      }
      if (ok && !cj->is_zero() && !mu_unit_everywhere()) {
        ok = false;
        witness = "nonzero c_j requires mu_i mu_i^* = 1 for all i";
      }
    }
    for (const int k : edges) {
      if (!ok) break;
      const auto ck = sigma_coefficient(spec, Arrow{k, false});
      const auto cks = sigma_coefficient(spec, Arrow{k, true});
      if (!ck || !cks) {
        ok = false;
        witness = "sigma image is not a multiple of its shape path";
        break;
      }
      if (*ck != -(spec.mu[k] * (*cks))) {
        ok = false;
        witness = "c_k != -mu_k c_k^* at edge " + std::to_string(k);
      }
      if (ok && !ck->is_zero() && (lam != CycNum(-1) || !mu_unit_everywhere())) {
        ok = false;
        witness = "nonzero c_k requires lambda = -1 and mu_i mu_i^* = 1";
      }
    }
    report.add("necessary.reflection_quotient_signs", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < n && ok; ++i) {
      const int partner = mod(partner_shift - i, n);
      if (!(spec.mu[i] * spec.mu_star[partner]).pow(m / 2).is_one()) {
        ok = false;
        witness = "(mu_i mu_partner^*)^(m/2) != 1 at index " + std::to_string(i);
      }
    }
    report.add("necessary.reflection_g_order", ok, witness);
  }
}

}  // namespace

ConstraintReport check_necessary(const ActionSpec& spec) {
  ConstraintReport report;
  if (spec.kind == ActionKind::rotation) {
    check_rotation_necessary(spec, report);
  } else {
    check_reflection_necessary(spec, report);
  }
  return report;
}

namespace {

ActionSpec assemble_spec(int n, ActionKind kind, int d, long r, long m, long field_order,
                         long lambda_exponent, std::vector<CycNum> mu,
                         std::vector<CycNum> mu_star, std::vector<CycNum> gamma,
                         SigmaTable sigma) {
  ActionSpec spec;
  spec.n = n;
  spec.kind = kind;
  spec.d = d;
  spec.taft.r = r;
  spec.taft.m = m;
  spec.field_order = field_order;
  spec.taft.lambda = RootOfUnity(field_order, (field_order / r) * lambda_exponent);
  const auto embed_all = [&](std::vector<CycNum>& v) {
    for (auto& x : v)
      if (x.order() != field_order) x = x.embedded(std::lcm(x.order(), field_order));
  };
  embed_all(mu);
  embed_all(mu_star);
  embed_all(gamma);
  spec.mu = std::move(mu);
  spec.mu_star = std::move(mu_star);
  spec.gamma = std::move(gamma);
  spec.sigma = std::move(sigma);
  return spec;
}

BuildOutcome finish_build(ActionSpec spec) {
  BuildOutcome outcome;
  outcome.report = spec.validate_structure();
  const bool sized = outcome.report.find("structure.table_sizes") &&
                     outcome.report.find("structure.table_sizes")->passed &&
                     outcome.report.find("structure.mu_nonzero") &&
                     outcome.report.find("structure.mu_nonzero")->passed;
  if (sized) outcome.report.merge(check_necessary(spec));
  if (!outcome.report.all_passed()) return outcome;
  outcome.spec = std::move(spec);
  return outcome;
}

}  // namespace

BuildOutcome build_rotation(const RotationParams& params) {
  const int n = params.n;
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (params.d <= 0 || params.d >= n)
    throw std::invalid_argument("rotation shift d must satisfy 0 < d < n");
  if (params.r <= 1 || params.m % params.r != 0)
    throw std::invalid_argument("need r > 1 and r | m");
  if (static_cast<int>(params.mu.size()) != n ||
      static_cast<int>(params.mu_star.size()) != n)
    throw std::invalid_argument("mu and mu_star need one entry per vertex");
  const long tau = std::gcd(static_cast<long>(n), static_cast<long>(params.d));
  if (!params.gamma0.is_zero() && static_cast<long>(params.xi.size()) != tau)
    throw std::invalid_argument("xi needs one entry per vertex orbit");

  const long L =
      params.field_order > 0 ? params.field_order : default_field_order(params.m, n);
  const CycNum lam = CycNum::root_of_unity(L, (L / params.r) * params.lambda_exponent);
  const int d = params.d;

  std::vector<CycNum> gamma(n, CycNum(0, L));
  if (!params.gamma0.is_zero()) {
    gamma[0] = params.gamma0;
    for (int i = 0; i + 1 < n; ++i)
      gamma[i + 1] = params.xi[mod(i, static_cast<int>(tau))] * gamma[i];
  }

  // Sigma coefficient chains grown from the seeds; the starred and
  // unstarred chains are independent tables.
  std::vector<CycNum> c_chain(n, CycNum(0, L));
  std::vector<CycNum> c_star_chain(n, CycNum(0, L));
  if (d == n - 1) {
    c_chain[0] = params.c;
    for (int i = 1; i < n; ++i) c_chain[i] = lam * params.mu[i] * c_chain[i - 1];
  }
  if (d == n - 2) {
    c_chain[0] = params.c;
    if (n > 1) c_chain[1] = params.mu_star[1].inverse() * c_chain[0];
    for (int i = 2; i < n; ++i)
      c_chain[i] = lam * params.mu[i] * params.mu_star[i - 1].inverse() * c_chain[i - 2];
  }
  if (d == 1) {
    c_star_chain[0] = params.c_star;
    for (int i = 1; i < n; ++i)
      c_star_chain[i] = (lam * params.mu_star[i - 1]).inverse() * c_star_chain[i - 1];
  }
  if (d == 2) {
    c_star_chain[0] = params.c_star;
    if (n > 1) c_star_chain[1] = params.mu[0] * c_star_chain[0];
    for (int i = 2; i < n; ++i)
      c_star_chain[i] = lam.inverse() * params.mu[i - 1] *
                        params.mu_star[i - 2].inverse() * c_star_chain[i - 2];
  }

  SigmaTable sigma;
  for (int i = 0; i < n; ++i) {
    if (d == n - 1 && !c_chain[i].is_zero()) {
      sigma.set(Arrow{i, false},
                FreeElement::from_path(PathWord::trivial(n, i), c_chain[i]));
    } else if (d == n - 2 && !c_chain[i].is_zero()) {
      sigma.set(Arrow{i, false},
                FreeElement::from_path(
                    PathWord::from_arrow(n, Arrow{mod(i - 1, n), true}), c_chain[i]));
    }
    if (d == 1 && !c_star_chain[i].is_zero()) {
      sigma.set(Arrow{i, true}, FreeElement::from_path(
                                    PathWord::trivial(n, mod(i + 1, n)), c_star_chain[i]));
    } else if (d == 2 && !c_star_chain[i].is_zero()) {
      sigma.set(Arrow{i, true},
                FreeElement::from_path(PathWord::from_arrow(n, Arrow{mod(i + 1, n), false}),
                                       c_star_chain[i]));
    }
  }

  return finish_build(assemble_spec(n, ActionKind::rotation, d, params.r, params.m, L,
                                    params.lambda_exponent, params.mu, params.mu_star,
                                    std::move(gamma), std::move(sigma)));
}

BuildOutcome build_reflection(const ReflectionParams& params) {
  const int n = params.n;
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (params.d < 0 || params.d >= n)
    throw std::invalid_argument("reflection offset d must satisfy 0 <= d < n");
  if (params.m <= 0 || params.m % 2 != 0)
    throw std::invalid_argument("reflections need an even m");
  if (static_cast<int>(params.mu.size()) != n)
    throw std::invalid_argument("mu needs one entry per vertex");

  const long L =
      params.field_order > 0 ? params.field_order : default_field_order(params.m, n);
  const int d = params.d;
  const auto fixed = reflection_fixed_vertices(n, d);
  const auto edges = reflection_edge_vertices(n, d);
  const auto rho = [&](int i) { return mod(n - (d + i), n); };

  std::vector<CycNum> mu(n), mu_star(n);
  for (int i = 0; i < n; ++i) {
    mu[i] = params.mu[i].embedded(std::lcm(params.mu[i].order(), L));
    mu_star[i] = mu[i].inverse();
  }

  // g^m = 1 constrains the mu table; screen it before any square roots
  // are attempted, so out-of-family parameters fail with a named check
  // instead of a missing-root error.
  for (int i = 0; i < n; ++i) {
    const int partner = mod(n - (d + i + 1), n);
    if (!(mu[i] * mu_star[partner]).pow(params.m / 2).is_one()) {
      BuildOutcome outcome;
      outcome.report.add("necessary.reflection_g_order", false,
                         "(mu_i mu_partner^*)^(m/2) != 1 at index " + std::to_string(i));
      return outcome;
    }
  }

  // gamma: zero on the axis, antisymmetric across it, square ladder along
  // the arc between the two axis positions.
  std::vector<CycNum> gamma(n, CycNum(0, L));
  std::vector<bool> assigned(n, false);
  for (const int j : fixed) assigned[j] = true;
  int anchor = 0;
  while (assigned[anchor]) ++anchor;
  gamma[anchor] = params.gamma_seed.embedded(std::lcm(params.gamma_seed.order(), L));
  assigned[anchor] = true;
  for (int step = 0; step < n - 1; ++step) {
    const int i = mod(anchor + step, n);
    const int next = mod(i + 1, n);
    if (assigned[next]) continue;
    if (assigned[rho(next)]) {
      gamma[next] = -gamma[rho(next)];
    } else {
      const int partner = mod(n - (d + i + 1), n);
      const auto root = square_root(mu[i] * mu_star[partner] * gamma[i].pow(2));
      if (!root)
        throw square_root_not_in_field(
            "gamma ladder step needs a square root outside the working field");
      gamma[next] = *root;
    }
    assigned[next] = true;
  }

  SigmaTable sigma;
  for (const int j : fixed) {
    int sign = 1;
    if (const auto it = params.axis_vertex_signs.find(j);
        it != params.axis_vertex_signs.end())
      sign = it->second >= 0 ? 1 : -1;
    const auto root = square_root(mu[j] * mu[mod(j - 1, n)]);
    if (!root)
      throw square_root_not_in_field(
          "sqrt(mu_j mu_{j-1}) does not lie in the working field");
    const CycNum cj = CycNum(sign) * gamma[mod(j - 1, n)] * (*root);
    if (cj.is_zero()) continue;
    const int jp = mod(j - 1, n);
    sigma.set(Arrow{jp, false},
              FreeElement::from_path(PathWord::from_arrow(n, Arrow{jp, false}),
                                     mu[j].inverse() * cj));
    sigma.set(Arrow{j, false},
              FreeElement::from_path(PathWord::from_arrow(n, Arrow{jp, true}), cj));
    sigma.set(Arrow{jp, true},
              FreeElement::from_path(PathWord::from_arrow(n, Arrow{j, false}),
                                     -((mu[j] * mu[jp]).inverse() * cj)));
    sigma.set(Arrow{j, true},
              FreeElement::from_path(PathWord::from_arrow(n, Arrow{j, true}),
                                     -(mu[j].inverse() * cj)));
  }
  for (const int k : edges) {
    CycNum ck(0, L);
    if (const auto it = params.axis_edge_seeds.find(k); it != params.axis_edge_seeds.end())
      ck = it->second.embedded(std::lcm(it->second.order(), L));
    if (ck.is_zero()) continue;
    sigma.set(Arrow{k, false},
              FreeElement::from_path(PathWord::trivial(n, k), ck));
    sigma.set(Arrow{k, true},
              FreeElement::from_path(PathWord::trivial(n, mod(k + 1, n)),
                                     -(mu[k].inverse() * ck)));
  }

  return finish_build(assemble_spec(n, ActionKind::reflection, d, 2, params.m, L, 1,
                                    std::move(mu), std::move(mu_star), std::move(gamma),
                                    std::move(sigma)));
}

BuildOutcome build_exceptional_half_turn(const ExceptionalParams& params) {
  const int n = 4;
  if (params.mu.size() != 4) throw std::invalid_argument("mu needs four entries");
  if (params.m <= 0 || params.m % 2 != 0)
    throw std::invalid_argument("need an even m");

  const long L =
      params.field_order > 0 ? params.field_order : default_field_order(params.m, n);
  std::vector<CycNum> mu(n), mu_star(n);
  for (int i = 0; i < n; ++i) {
    mu[i] = params.mu[i].embedded(std::lcm(params.mu[i].order(), L));
    mu_star[i] = -mu[i].inverse();
  }
  const CycNum gamma0 = params.gamma0.embedded(std::lcm(params.gamma0.order(), L));
  const CycNum c = params.c.embedded(std::lcm(params.c.order(), L));
  const CycNum c_star = params.c_star.embedded(std::lcm(params.c_star.order(), L));

  const CycNum gamma1_sq =
      gamma0.pow(2) * mu[0] * mu[2] - mu[3].inverse() * c * c_star;
  const auto gamma1 = square_root(gamma1_sq);
  if (!gamma1)
    throw square_root_not_in_field("gamma_1 is a square root outside the working field");

  std::vector<CycNum> gamma = {gamma0, *gamma1, -gamma0, -(*gamma1)};

  SigmaTable sigma;
  CycNum c_chain = c;
  CycNum c_star_chain = c_star;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      c_chain = -(mu[i] * c_chain);
      c_star_chain = -(mu_star[i - 1].inverse() * c_star_chain);
    }
    if (!c_chain.is_zero())
      sigma.set(Arrow{i, false},
                FreeElement::from_path(PathWord::from_arrow(n, Arrow{mod(i - 1, n), true}),
                                       c_chain));
    if (!c_star_chain.is_zero())
      sigma.set(Arrow{i, true},
                FreeElement::from_path(PathWord::from_arrow(n, Arrow{mod(i + 1, n), false}),
                                       c_star_chain));
  }

  return finish_build(assemble_spec(n, ActionKind::rotation, 2, 2, params.m, L, 1,
                                    std::move(mu), std::move(mu_star), std::move(gamma),
                                    std::move(sigma)));
}

namespace {

// The sigma^r compatibility equation, gamma orbit-size rule and gamma
// eigenvector rule, checked without building report objects.
bool fast_structural_pass(const ActionSpec& spec) {
  const int n = spec.n;
  const CycNum lam_inv = spec.lambda().inverse();
  for (int i = 0; i < n; ++i) {
    if (spec.gamma[mod(spec.g_vertex(i), n)] != lam_inv * spec.gamma[i]) return false;
  }
  for (int i = 0; i < n; ++i) {
    if (spec.gamma[i].is_zero()) continue;
    long size = 1;
    for (int at = spec.g_vertex(i); at != i; at = spec.g_vertex(at)) ++size;
    if (size != spec.taft.r) return false;
  }
  for (int i = 0; i < 2 * n; ++i) {
    const Arrow a{i % n, i >= n};
    const int s = arrow_source(a, n);
    const int t = arrow_target(a, n);
    const FreeElement arrow_elt = FreeElement::from_path(PathWord::from_arrow(n, a));
    FreeElement expected = act_g_power(spec, arrow_elt, spec.taft.r);
    expected *= spec.gamma[s].pow(spec.taft.r);
    expected -= spec.gamma[t].pow(spec.taft.r) * arrow_elt;
    if (spec.sigma.power_on_arrow(a, n, spec.taft.r) != expected) return false;
  }
  return true;
}

bool descent_pass(const ActionSpec& spec) {
  if (!descent_mu_condition(spec)) return false;
  for (int i = 0; i < spec.n; ++i) {
    if (!reduce(descent_sigma_combination(spec, i)).is_zero()) return false;
  }
  return true;
}

std::string spec_fingerprint(const ActionSpec& spec) {
  std::ostringstream out;
  out << kind_to_string(spec.kind) << ";" << spec.d << ";" << spec.taft.r << ";"
      << spec.taft.m << ";" << spec.taft.lambda.to_string() << ";";
  for (const auto& v : spec.mu) out << v.to_string() << ",";
  out << ";";
  for (const auto& v : spec.mu_star) out << v.to_string() << ",";
  out << ";";
  for (const auto& v : spec.gamma) out << v.to_string() << ",";
  out << ";";
  for (const auto& [a, img] : spec.sigma.entries())
    out << arrow_to_string(a) << "=" << img.to_string() << ",";
  return out.str();
}

// Scale (gamma, sigma) so the first nonzero coefficient becomes 1; this is
// the free overall scaling of the x-action.
void normalize_scaling(ActionSpec& spec) {
  CycNum pivot;
  bool found = false;
  for (const auto& g : spec.gamma) {
    if (!g.is_zero()) {
      pivot = g;
      found = true;
      break;
    }
  }
  if (!found) {
    for (const auto& [a, img] : spec.sigma.entries()) {
      for (const auto& [word, coeff] : img.terms()) {
        pivot = coeff;
        found = true;
        break;
      }
      if (found) break;
    }
  }
  if (!found || pivot.is_one()) return;
  const CycNum factor = pivot.inverse();
  for (auto& g : spec.gamma) g *= factor;
  SigmaTable scaled;
  for (const auto& [a, img] : spec.sigma.entries()) {
    FreeElement image = img;
    image *= factor;
    scaled.set(a, std::move(image));
  }
  spec.sigma = std::move(scaled);
}

}  // namespace

std::string EnumerationOutcome::summary() const {
  std::ostringstream out;
  out << "grid points:          " << total_points << "\n"
      << "structural rejects:   " << structural_rejects << "\n"
      << "descent rejects:      " << descent_rejects << "\n"
      << "operator rejects:     " << operator_rejects << "\n"
      << "not inner faithful:   " << not_inner_faithful << "\n"
      << "duplicates:           " << duplicates << "\n"
      << "valid actions:        " << valid.size() << "\n"
      << "classification violations: " << violations.entries.size() << "\n";
  for (const auto& [name, passes] : necessary_pass_counts) {
    long fails = 0;
    for (const auto& entry : violations.entries)
      if (entry.name == name) ++fails;
    out << "  " << name << ": " << passes << " pass, " << fails << " fail\n";
  }
  return out.str();
}

namespace {

// Odometer over mixed radices; calls fn once per index combination.
template <typename Fn>
void for_each_combination(const std::vector<size_t>& radix, Fn&& fn) {
  std::vector<size_t> index(radix.size(), 0);
  for (const size_t r : radix)
    if (r == 0) return;
  bool done = false;
  while (!done) {
    fn(index);
    size_t pos = 0;
    while (pos < radix.size()) {
      if (++index[pos] < radix[pos]) break;
      index[pos] = 0;
      ++pos;
    }
    done = (pos == radix.size());
  }
}

}  // namespace

EnumerationOutcome enumerate_actions(const EnumerationGrid& grid) {
  const int n = grid.n;
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (grid.r <= 1 || grid.m % grid.r != 0)
    throw std::invalid_argument("need r > 1 and r | m");
  if (grid.mu_grid_order < 1) throw std::invalid_argument("mu grid order must be positive");
  if (grid.gamma_seeds.empty() || grid.sigma_seeds.empty())
    throw std::invalid_argument("seed lists must be nonempty");

  const long L = grid.field_order > 0
                     ? grid.field_order
                     : std::lcm(default_field_order(grid.m, n), grid.mu_grid_order);
  const int verify_degree = grid.verify_degree > 0 ? grid.verify_degree : 2 * n;

  std::vector<int> d_values = grid.d_values;
  if (d_values.empty()) {
    for (int d = 0; d < n; ++d) d_values.push_back(d);
  }
  std::vector<long> lambda_exponents;
  for (long e = 1; e < grid.r; ++e) {
    if (std::gcd(e, grid.r) == 1) {
      lambda_exponents.push_back(e);
      if (!grid.all_primitive_lambdas) break;
    }
  }
  if (lambda_exponents.empty()) lambda_exponents.push_back(1);

  std::vector<CycNum> mu_values;
  for (long t = 0; t < grid.mu_grid_order; ++t)
    mu_values.push_back(CycNum::root_of_unity(grid.mu_grid_order, t).embedded(
        std::lcm(grid.mu_grid_order, L)));
  std::vector<CycNum> gamma_seed_values, sigma_seed_values;
  for (const auto& s : grid.gamma_seeds)
    gamma_seed_values.push_back(s.embedded(std::lcm(s.order(), L)));
  for (const auto& s : grid.sigma_seeds)
    sigma_seed_values.push_back(s.embedded(std::lcm(s.order(), L)));

  EnumerationOutcome outcome;
  std::unordered_set<std::string> seen;

  // Budget check over the whole grid before any work.
  {
    double total = 0;
    for (const int d : d_values) {
      ActionSpec geometry;
      geometry.n = n;
      geometry.kind = grid.kind;
      geometry.d = d;
      size_t slot_count = 0;
      for (int i = 0; i < 2 * n; ++i) {
        if (sigma_shape_path(geometry, Arrow{i % n, i >= n})) ++slot_count;
      }
      size_t rep_count = 0;
      if (grid.kind == ActionKind::rotation) {
        rep_count = d == 0 ? 0 : std::gcd(static_cast<long>(n), static_cast<long>(d));
      } else {
        rep_count = (n - reflection_fixed_vertices(n, d).size()) / 2;
      }
      double block = static_cast<double>(lambda_exponents.size());
      for (int i = 0; i < 2 * n; ++i) block *= static_cast<double>(mu_values.size());
      for (size_t i = 0; i < rep_count; ++i)
        block *= static_cast<double>(gamma_seed_values.size());
      for (size_t i = 0; i < slot_count; ++i)
        block *= static_cast<double>(sigma_seed_values.size());
      total += block;
    }
    if (total > static_cast<double>(grid.budget))
      throw budget_exceeded("enumeration grid exceeds the configured budget");
  }

  for (const int d : d_values) {
    // gamma orbit representatives: the propagation gamma_{g.i} =
    // lambda^{-1} gamma_i leaves one free scalar per vertex orbit.
    std::vector<int> reps;
    if (grid.kind == ActionKind::rotation) {
      if (d != 0) {
        const int tau =
            static_cast<int>(std::gcd(static_cast<long>(n), static_cast<long>(d)));
        for (int k = 0; k < tau; ++k) reps.push_back(k);
      }
    } else {
      std::vector<bool> covered(n, false);
      for (const int j : reflection_fixed_vertices(n, d)) covered[j] = true;
      for (int i = 0; i < n; ++i) {
        if (covered[i]) continue;
        covered[i] = true;
        covered[mod(n - (d + i), n)] = true;
        reps.push_back(i);
      }
    }

    // sigma slots: arrows whose sandwich rule admits a target path.
    ActionSpec geometry;
    geometry.n = n;
    geometry.kind = grid.kind;
    geometry.d = d;
    std::vector<Arrow> slots;
    std::map<Arrow, size_t> slot_position;
    for (int i = 0; i < 2 * n; ++i) {
      const Arrow a{i % n, i >= n};
      if (sigma_shape_path(geometry, a)) {
        slot_position[a] = slots.size();
        slots.push_back(a);
      }
    }

    const long block_points =
        static_cast<long>(lambda_exponents.size()) *
        static_cast<long>(std::pow(static_cast<double>(mu_values.size()), 2 * n)) *
        static_cast<long>(std::pow(static_cast<double>(gamma_seed_values.size()),
                                   static_cast<double>(reps.size()))) *
        static_cast<long>(std::pow(static_cast<double>(sigma_seed_values.size()),
                                   static_cast<double>(slots.size())));

    const long orbit = grid.kind == ActionKind::rotation
                           ? (d == 0 ? 1
                                     : n / std::gcd(static_cast<long>(n),
                                                    static_cast<long>(d)))
                           : 2;
    if (grid.m % orbit != 0) {
      // g^m cannot fix the trivial paths anywhere in this block.
      outcome.total_points += block_points;
      outcome.structural_rejects += block_points;
      continue;
    }

    for (const long lambda_exponent : lambda_exponents) {
      ActionSpec base;
      base.n = n;
      base.kind = grid.kind;
      base.d = d;
      base.taft.r = grid.r;
      base.taft.m = grid.m;
      base.field_order = L;
      base.taft.lambda = RootOfUnity(L, (L / grid.r) * lambda_exponent);
      const CycNum lam_inv = base.taft.lambda.value().inverse();

      std::vector<size_t> mu_radix(2 * n, mu_values.size());
      for_each_combination(mu_radix, [&](const std::vector<size_t>& mu_index) {
        ActionSpec block = base;
        block.mu.resize(n);
        block.mu_star.resize(n);
        for (int i = 0; i < n; ++i) {
          block.mu[i] = mu_values[mu_index[i]];
          block.mu_star[i] = mu_values[mu_index[n + i]];
        }
        block.gamma.assign(n, CycNum(0, L));

        // sigma equivariance couples the slot coefficients pairwise:
        // c at the g-image slot must equal rho * (c at the slot), where
        // rho depends only on lambda and the mu tables. Tabulating
        // rho * seed makes the innermost sigma loop pure comparisons.
        std::vector<size_t> image_slot(slots.size());
        std::vector<std::vector<CycNum>> expected(
            slots.size(), std::vector<CycNum>(sigma_seed_values.size()));
        for (size_t s = 0; s < slots.size(); ++s) {
          const Arrow a = slots[s];
          auto [factor, image_arrow] = block.g_arrow(a);
          image_slot[s] = slot_position.at(image_arrow);
          const FreeElement g_shape =
              act_g(block, FreeElement::from_path(*sigma_shape_path(block, a)));
          const CycNum shape_factor = g_shape.terms().begin()->second;
          const CycNum rho = lam_inv * shape_factor * factor.inverse();
          for (size_t v = 0; v < sigma_seed_values.size(); ++v)
            expected[s][v] = rho * sigma_seed_values[v];
        }

        std::vector<size_t> tail_radix;
        for (size_t i = 0; i < reps.size(); ++i)
          tail_radix.push_back(gamma_seed_values.size());
        for (size_t i = 0; i < slots.size(); ++i)
          tail_radix.push_back(sigma_seed_values.size());

        for_each_combination(tail_radix, [&](const std::vector<size_t>& tail_index) {
          ++outcome.total_points;

          // sigma equivariance screen on seed indices alone
          for (size_t s = 0; s < slots.size(); ++s) {
            const CycNum& at_image =
                sigma_seed_values[tail_index[reps.size() + image_slot[s]]];
            if (at_image != expected[s][tail_index[reps.size() + s]]) {
              ++outcome.structural_rejects;
              return;
            }
          }

          ActionSpec spec = block;
          for (size_t rep_idx = 0; rep_idx < reps.size(); ++rep_idx) {
            const CycNum& seed = gamma_seed_values[tail_index[rep_idx]];
            const int rep = reps[rep_idx];
            if (grid.kind == ActionKind::rotation) {
              CycNum value = seed;
              int at = rep;
              for (long t = 0; t < spec.orbit_size(); ++t) {
                spec.gamma[at] = value;
                at = spec.g_vertex(at);
                value = lam_inv * value;
              }
            } else {
              spec.gamma[rep] = seed;
              spec.gamma[spec.g_vertex(rep)] = lam_inv * seed;
            }
          }
          for (size_t s = 0; s < slots.size(); ++s) {
            const CycNum& seed = sigma_seed_values[tail_index[reps.size() + s]];
            if (seed.is_zero()) continue;
            spec.sigma.set(slots[s],
                           FreeElement::from_path(*sigma_shape_path(spec, slots[s]), seed));
          }

          if (!fast_structural_pass(spec)) {
            ++outcome.structural_rejects;
          } else if (!descent_pass(spec)) {
            ++outcome.descent_rejects;
          } else if (!verify_module_algebra(spec, verify_degree).all_passed() ||
                     !verify_hopf_relations(spec, verify_degree).all_passed()) {
            ++outcome.operator_rejects;
          } else if (!is_inner_faithful(spec)) {
            ++outcome.not_inner_faithful;
          } else {
            normalize_scaling(spec);
            const std::string key = spec_fingerprint(spec);
            if (!seen.insert(key).second) {
              ++outcome.duplicates;
            } else {
              if (!spec.validate_structure().all_passed()) {
                outcome.violations.add("structure", false, "spec " + key);
              }
              const ConstraintReport necessary = check_necessary(spec);
              for (const auto& entry : necessary.entries) {
                if (entry.passed) {
                  ++outcome.necessary_pass_counts[entry.name];
                } else {
                  outcome.violations.add(entry.name, false,
                                         "spec " + key + " | " + entry.witness);
                }
              }
              outcome.valid.push_back(std::move(spec));
            }
          }
        });
      });
    }
  }
  return outcome;
}

}  // namespace qtaft
