#include "qtaft/action.hpp"

#include <numeric>
#include <sstream>

#include "qtaft/errors.hpp"

namespace qtaft {

namespace {

int mod(int value, int n) {
  int r = value % n;
  return r < 0 ? r + n : r;
}

}  // namespace

void TaftData::validate() const {
  if (r <= 1) throw std::invalid_argument("r must exceed 1");
  if (m <= 0 || m % r != 0) throw std::invalid_argument("m must be a positive multiple of r");
  if (!is_primitive_root(lambda.value(), r))
    throw std::invalid_argument("lambda must be a primitive r-th root of unity");
}

bool ConstraintReport::all_passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

void ConstraintReport::add(std::string name, bool passed, std::string witness) {
  entries.push_back(CheckEntry{std::move(name), passed, std::move(witness)});
}

void ConstraintReport::merge(const ConstraintReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

const CheckEntry* ConstraintReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::string ConstraintReport::to_string() const {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << (e.passed ? "[pass] " : "[FAIL] ") << e.name;
    if (!e.passed && !e.witness.empty()) out << ": " << e.witness;
    out << "\n";
  }
  return out.str();
}

bool SigmaTable::empty_or_zero() const {
  for (const auto& [a, img] : entries_)
    if (!img.is_zero()) return false;
  return true;
}

void SigmaTable::set(const Arrow& a, FreeElement image) {
  if (image.is_zero()) {
    entries_.erase(a);
  } else {
    entries_.insert_or_assign(a, std::move(image));
  }
}

FreeElement SigmaTable::of_arrow(const Arrow& a, int n) const {
  const auto it = entries_.find(a);
  return it == entries_.end() ? FreeElement(n) : it->second;
}

FreeElement SigmaTable::apply(const FreeElement& x) const {
  FreeElement out(x.n());
  for (const auto& [word, coeff] : x.terms()) {
    if (word.length() == 0) continue;  // sigma kills trivial paths
    if (word.length() > 1)
      throw std::invalid_argument("sigma is only defined in degree <= 1");
    out += coeff * of_arrow(word.first_arrow(), x.n());
  }
  return out;
}

FreeElement SigmaTable::power_on_arrow(const Arrow& a, int n, long power) const {
  FreeElement current = FreeElement::from_path(PathWord::from_arrow(n, a));
  for (long i = 0; i < power; ++i) current = apply(current);
  return current;
}

std::string kind_to_string(ActionKind kind) {
  return kind == ActionKind::rotation ? "rotation" : "reflection";
}

std::optional<ActionKind> kind_from_string(const std::string& text) {
  if (text == "rotation") return ActionKind::rotation;
  if (text == "reflection") return ActionKind::reflection;
  return std::nullopt;
}

int ActionSpec::g_vertex(int i) const {
  return kind == ActionKind::rotation ? mod(i + d, n) : mod(n - (d + i), n);
}

std::pair<CycNum, Arrow> ActionSpec::g_arrow(const Arrow& a) const {
  const int i = mod(a.index, n);
  if (kind == ActionKind::rotation) {
    return {a.starred ? mu_star[i] : mu[i], Arrow{mod(i + d, n), a.starred}};
  }
  const int image_index = mod(n - (d + i + 1), n);
  if (!a.starred) return {mu[i], Arrow{image_index, true}};
  return {mu_star[i], Arrow{image_index, false}};
}

const CycNum& ActionSpec::mu_of(const Arrow& a) const {
  return a.starred ? mu_star[mod(a.index, n)] : mu[mod(a.index, n)];
}

CycNum ActionSpec::gamma_at(int i) const { return gamma[mod(i, n)]; }

long ActionSpec::orbit_size() const {
  if (kind != ActionKind::rotation) return 2;
  return n / std::gcd(static_cast<long>(n), static_cast<long>(mod(d, n) == 0 ? n : d));
}

long ActionSpec::orbit_count() const {
  if (kind != ActionKind::rotation)
    throw std::logic_error("orbit_count is a rotation quantity");
  return std::gcd(static_cast<long>(n), static_cast<long>(mod(d, n) == 0 ? n : d));
}

bool ActionSpec::any_gamma_nonzero() const {
  for (const auto& g : gamma)
    if (!g.is_zero()) return true;
  return false;
}

long default_field_order(long m, int n) {
  return std::lcm(std::lcm(m, static_cast<long>(n)), 4L);
}

FreeElement act_g(const ActionSpec& spec, const FreeElement& x) {
  FreeElement out(x.n());
  for (const auto& [word, coeff] : x.terms()) {
    CycNum scalar = coeff;
    std::vector<Arrow> image_arrows;
    image_arrows.reserve(word.arrows().size());
    for (const Arrow& a : word.arrows()) {
      auto [factor, image] = spec.g_arrow(a);
      scalar *= factor;
      image_arrows.push_back(image);
    }
    // A reflection reverses orientation but the per-arrow images still
    // compose, because g is a quiver automorphism.
    out.add_term(PathWord(x.n(), spec.g_vertex(word.source()), std::move(image_arrows)),
                 scalar);
  }
  return out;
}

PiElement act_g(const ActionSpec& spec, const PiElement& x) {
  return reduce(act_g(spec, x.lift()));
}

FreeElement act_g_power(const ActionSpec& spec, const FreeElement& x, long power) {
  FreeElement out = x;
  for (long i = 0; i < power; ++i) out = act_g(spec, out);
  return out;
}

namespace {

FreeElement act_x_vertex(const ActionSpec& spec, int vertex) {
  const int n = spec.n;
  FreeElement out(n);
  const CycNum g = spec.gamma_at(vertex);
  if (g.is_zero()) return out;
  out.add_term(PathWord::trivial(n, vertex), g);
  out.add_term(PathWord::trivial(n, spec.g_vertex(vertex)),
               -(g * spec.lambda().inverse()));
  return out;
}

FreeElement act_x_arrow(const ActionSpec& spec, const Arrow& a) {
  const int n = spec.n;
  FreeElement out(n);
  const int s = arrow_source(a, n);
  const int t = arrow_target(a, n);
  out.add_term(PathWord::from_arrow(n, a), spec.gamma_at(t));
  auto [factor, image] = spec.g_arrow(a);
  out.add_term(PathWord::from_arrow(n, image),
               -(spec.gamma_at(s) * spec.lambda().inverse() * factor));
  out += spec.sigma.of_arrow(a, n);
  return out;
}

// x image and g image of a word in one pass; the recursion needs both.
std::pair<FreeElement, FreeElement> act_xg_word(const ActionSpec& spec,
                                                const PathWord& word) {
  const int n = spec.n;
  if (word.length() == 0) {
    return {act_x_vertex(spec, word.source()),
            FreeElement::from_path(PathWord::trivial(n, spec.g_vertex(word.source())))};
  }
  if (word.length() == 1) {
    auto [factor, image] = spec.g_arrow(word.first_arrow());
    return {act_x_arrow(spec, word.first_arrow()),
            FreeElement::from_path(PathWord::from_arrow(n, image), factor)};
  }
  const Arrow head = word.first_arrow();
  auto [x_tail, g_tail] = act_xg_word(spec, word.rest());
  const FreeElement head_elt = FreeElement::from_path(PathWord::from_arrow(n, head));
  auto [head_factor, head_image] = spec.g_arrow(head);
  const FreeElement g_head =
      FreeElement::from_path(PathWord::from_arrow(n, head_image), head_factor);
  return {head_elt * x_tail + act_x_arrow(spec, head) * g_tail, g_head * g_tail};
}

FreeElement act_x_word(const ActionSpec& spec, const PathWord& word) {
  return act_xg_word(spec, word).first;
}

}  // namespace

FreeElement act_x(const ActionSpec& spec, const FreeElement& x) {
  FreeElement out(x.n());
  for (const auto& [word, coeff] : x.terms()) {
    FreeElement piece = act_x_word(spec, word);
    piece *= coeff;
    out += piece;
  }
  return out;
}

PiElement act_x(const ActionSpec& spec, const PiElement& x) {
  return reduce(act_x(spec, x.lift()));
}

ConstraintReport ActionSpec::validate_structure() const {
  ConstraintReport report;
  const CycNum lam = lambda();

  bool taft_ok = true;
  std::string taft_witness;
  if (taft.r <= 1) {
    taft_ok = false;
    taft_witness = "r must exceed 1";
  } else if (taft.m <= 0 || taft.m % taft.r != 0) {
    taft_ok = false;
    taft_witness = "m is not a positive multiple of r";
  } else if (!is_primitive_root(lam, taft.r)) {
    taft_ok = false;
    taft_witness = "lambda = " + lam.to_string() + " is not a primitive root of order r";
  }
  report.add("structure.taft_presentation", taft_ok, taft_witness);

  const bool sizes_ok = static_cast<int>(mu.size()) == n &&
                        static_cast<int>(mu_star.size()) == n &&
                        static_cast<int>(gamma.size()) == n && d >= 0 && d < n;
  report.add("structure.table_sizes", sizes_ok,
             sizes_ok ? "" : "mu/mu_star/gamma must have one entry per vertex, 0 <= d < n");
  if (!taft_ok || !sizes_ok) return report;

  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < n && ok; ++i) {
      if (mu[i].is_zero() || mu_star[i].is_zero()) {
        ok = false;
        witness = "index " + std::to_string(i);
      }
    }
    report.add("structure.mu_nonzero", ok, witness);
    if (!ok) return report;
  }

  {
    // Vertex orbit sizes must divide m for g^m to fix all trivial paths.
    long orbit = (kind == ActionKind::rotation) ? orbit_size() : 2;
    const bool ok = taft.m % orbit == 0;
    report.add("structure.orbit_divides_m", ok,
               ok ? "" : "orbit size " + std::to_string(orbit) + " does not divide m");
  }

  {
    bool ok = true;
    std::string witness;
    const CycNum lam_inv = lam.inverse();
    for (int i = 0; i < n && ok; ++i) {
      if (gamma[mod(g_vertex(i), n)] != lam_inv * gamma[i]) {
        ok = false;
        witness = "vertex " + std::to_string(i);
      }
    }
    report.add("structure.gamma_eigenvector", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < n && ok; ++i) {
      if (gamma[i].is_zero()) continue;
      // orbit of vertex i
      long size = 1;
      int at = g_vertex(i);
      while (at != i) {
        at = g_vertex(at);
        ++size;
      }
      if (size != taft.r) {
        ok = false;
        witness = "vertex " + std::to_string(i) + " has orbit size " + std::to_string(size) +
                  " with nonzero gamma";
      }
    }
    report.add("structure.gamma_orbit_size", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (const auto& [a, img] : sigma.entries()) {
      if (img.is_zero()) continue;
      const int s = arrow_source(a, n);
      const int gt = g_vertex(arrow_target(a, n));
      int degree = -1;
      for (const auto& [word, coeff] : img.terms()) {
        if (degree == -1) degree = word.length();
        if (word.length() != degree || word.length() > 1 || word.source() != s ||
            word.target() != gt) {
          ok = false;
          witness = "sigma(" + arrow_to_string(a) + ") = " + img.to_string();
          break;
        }
      }
      if (!ok) break;
    }
    report.add("structure.sigma_shape", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    const CycNum lam_inv = lam.inverse();
    for (int i = 0; i < 2 * n && ok; ++i) {
      const Arrow a{i % n, i >= n};
      auto [factor, image] = g_arrow(a);
      const FreeElement lhs = factor * sigma.of_arrow(image, n);
      const FreeElement rhs = lam_inv * act_g(*this, sigma.of_arrow(a, n));
      if (lhs != rhs) {
        ok = false;
        witness = "arrow " + arrow_to_string(a);
      }
    }
    report.add("structure.sigma_equivariance", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < 2 * n && ok; ++i) {
      const Arrow a{i % n, i >= n};
      const int s = arrow_source(a, n);
      const int t = arrow_target(a, n);
      const FreeElement arrow_elt = FreeElement::from_path(PathWord::from_arrow(n, a));
      FreeElement expected = act_g_power(*this, arrow_elt, taft.r);
      expected *= gamma[s].pow(taft.r);
      expected -= gamma[t].pow(taft.r) * arrow_elt;
      if (sigma.power_on_arrow(a, n, taft.r) != expected) {
        ok = false;
        witness = "arrow " + arrow_to_string(a);
      }
    }
    report.add("structure.sigma_power_compatibility", ok, witness);
  }

  return report;
}

ConstraintReport verify_hopf_relations(const ActionSpec& spec, int max_degree) {
  ConstraintReport report;
  const CycNum lam = spec.lambda();

  bool g_ok = true, x_ok = true, twist_ok = true;
  std::string g_witness, x_witness, twist_witness;

  for (int ell = 0; ell <= max_degree; ++ell) {
    for (const NormalPath& p : pi_basis(spec.n, ell)) {
      const PiElement basis_elt = PiElement::from_path(spec.n, p);

      if (g_ok) {
        PiElement image = basis_elt;
        for (long i = 0; i < spec.taft.m; ++i) image = act_g(spec, image);
        if (image != basis_elt) {
          g_ok = false;
          g_witness = p.to_string() + ": g^m(p) = " + image.to_string();
        }
      }
      if (x_ok) {
        PiElement image = basis_elt;
        for (long i = 0; i < spec.taft.r; ++i) image = act_x(spec, image);
        if (!image.is_zero()) {
          x_ok = false;
          x_witness = p.to_string() + ": x^r(p) = " + image.to_string();
        }
      }
      if (twist_ok) {
        const PiElement lhs = act_g(spec, act_x(spec, basis_elt));
        const PiElement rhs = lam * act_x(spec, act_g(spec, basis_elt));
        if (lhs != rhs) {
          twist_ok = false;
          twist_witness = p.to_string() + ": g(x.p) - lambda*x(g.p) = " + (lhs - rhs).to_string();
        }
      }
    }
  }

  report.add("hopf.g_order", g_ok, g_witness);
  report.add("hopf.x_nilpotent", x_ok, x_witness);
  report.add("hopf.gx_twist", twist_ok, twist_witness);
  return report;
}

ConstraintReport verify_module_algebra(const ActionSpec& spec, int max_degree) {
  ConstraintReport report;
  const int n = spec.n;

  bool g_mult_ok = true, leibniz_ok = true;
  std::string g_witness, leibniz_witness;
  // Per-word images are reused across every pair featuring the word.
  std::vector<std::vector<PathWord>> bases(max_degree + 1);
  std::vector<std::vector<std::pair<FreeElement, FreeElement>>> images(max_degree + 1);
  for (int deg = 0; deg <= max_degree; ++deg) {
    bases[deg] = graded_basis(n, deg);
    for (const PathWord& w : bases[deg]) {
      const FreeElement w_elt = FreeElement::from_path(w);
      images[deg].emplace_back(act_x(spec, w_elt), act_g(spec, w_elt));
    }
  }
  for (int dp = 0; dp <= max_degree && (g_mult_ok || leibniz_ok); ++dp) {
    for (int dq = 0; dp + dq <= max_degree && (g_mult_ok || leibniz_ok); ++dq) {
      for (size_t pi = 0; pi < bases[dp].size(); ++pi) {
        const PathWord& p = bases[dp][pi];
        for (size_t qi = 0; qi < bases[dq].size(); ++qi) {
          const PathWord& q = bases[dq][qi];
          const auto pq = p.composed_with(q);
          if (!pq) continue;
          const FreeElement p_elt = FreeElement::from_path(p);
          const FreeElement pq_elt = FreeElement::from_path(*pq);
          const auto& [x_p, g_p] = images[dp][pi];
          const auto& [x_q, g_q] = images[dq][qi];
          if (g_mult_ok) {
            if (act_g(spec, pq_elt) != g_p * g_q) {
              g_mult_ok = false;
              g_witness = p.to_string() + " | " + q.to_string();
            }
          }
          if (leibniz_ok) {
            const FreeElement lhs = act_x(spec, pq_elt);
            const FreeElement rhs = p_elt * x_q + x_p * g_q;
            if (lhs != rhs) {
              leibniz_ok = false;
              leibniz_witness = p.to_string() + " | " + q.to_string();
            }
          }
        }
      }
    }
  }
  report.add("module.g_multiplicative", g_mult_ok, g_witness);
  report.add("module.x_skew_leibniz", leibniz_ok, leibniz_witness);

  bool g_descends = true, x_descends = true;
  std::string gd_witness, xd_witness;
  for (int i = 0; i < n; ++i) {
    const FreeElement relation = omega_relation(n, i);
    if (g_descends && !reduce(act_g(spec, relation)).is_zero()) {
      g_descends = false;
      gd_witness = "relation at vertex " + std::to_string(mod(i + 1, n)) +
                   ": g image reduces to " + reduce(act_g(spec, relation)).to_string();
    }
    if (x_descends && !reduce(act_x(spec, relation)).is_zero()) {
      x_descends = false;
      xd_witness = "relation at vertex " + std::to_string(mod(i + 1, n)) +
                   ": x image reduces to " + reduce(act_x(spec, relation)).to_string();
    }
  }
  report.add("descend.g_kills_relations", g_descends, gd_witness);
  report.add("descend.x_kills_relations", x_descends, xd_witness);
  return report;
}

bool descent_mu_condition(const ActionSpec& spec) {
  const CycNum first = spec.mu[0] * spec.mu_star[0];
  for (int i = 1; i < spec.n; ++i) {
    if (spec.mu[i] * spec.mu_star[i] != first) return false;
  }
  return true;
}

FreeElement descent_sigma_combination(const ActionSpec& spec, int i) {
  const int n = spec.n;
  const Arrow a{mod(i, n), false};
  const Arrow a_star{mod(i, n), true};
  const Arrow b{mod(i + 1, n), false};
  const Arrow b_star{mod(i + 1, n), true};
  const auto arrow_elt = [&](const Arrow& ar) {
    return FreeElement::from_path(PathWord::from_arrow(n, ar));
  };
  const auto g_image = [&](const Arrow& ar) {
    auto [factor, image] = spec.g_arrow(ar);
    return factor * arrow_elt(image);
  };
  return arrow_elt(a_star) * spec.sigma.of_arrow(a, n) +
         spec.sigma.of_arrow(a_star, n) * g_image(a) -
         arrow_elt(b) * spec.sigma.of_arrow(b_star, n) -
         spec.sigma.of_arrow(b, n) * g_image(b_star);
}

bool is_inner_faithful(const ActionSpec& spec) {
  for (int i = 0; i < spec.n; ++i) {
    if (!act_x_vertex(spec, i).is_zero()) return true;
  }
  for (int i = 0; i < 2 * spec.n; ++i) {
    const Arrow a{i % spec.n, i >= spec.n};
    if (!act_x_arrow(spec, a).is_zero()) return true;
  }
  return false;
}

}  // namespace qtaft
