#include "qtaft/preprojective.hpp"

#include <sstream>

#include "qtaft/errors.hpp"

namespace qtaft {

namespace {

int mod(int value, int n) {
  int r = value % n;
  return r < 0 ? r + n : r;
}

}  // namespace

int NormalPath::target(int n) const { return mod(k + u - v, n); }

std::string NormalPath::to_string() const {
  std::ostringstream out;
  out << "p(" << k << "," << u << "," << v << ")";
  return out.str();
}

std::optional<NormalPath> NormalPath::from_string(const std::string& text) {
  NormalPath p;
  char c0 = 0, c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  std::istringstream in(text);
  if (!(in >> c0 >> c1 >> p.k >> c2 >> p.u >> c3 >> p.v >> c4)) return std::nullopt;
  if (c0 != 'p' || c1 != '(' || c2 != ',' || c3 != ',' || c4 != ')') return std::nullopt;
  if (p.u < 0 || p.v < 0) return std::nullopt;
  return p;
}

PathWord normal_path_word(const NormalPath& p, int n) {
  std::vector<Arrow> arrows;
  arrows.reserve(p.u + p.v);
  for (int i = 0; i < p.u; ++i) arrows.push_back(Arrow{mod(p.k + i, n), false});
  for (int j = 0; j < p.v; ++j) arrows.push_back(Arrow{mod(p.k + p.u - 1 - j, n), true});
  return PathWord(n, p.k, std::move(arrows));
}

std::vector<size_t> rewrite_positions(const PathWord& w) {
  std::vector<size_t> positions;
  const auto& arrows = w.arrows();
  for (size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (arrows[i].starred && !arrows[i + 1].starred) positions.push_back(i);
  }
  return positions;
}

PathWord apply_rewrite(const PathWord& w, size_t position) {
  const int n = w.n();
  std::vector<Arrow> arrows = w.arrows();
  if (position + 1 >= arrows.size() || !arrows[position].starred ||
      arrows[position + 1].starred)
    throw std::invalid_argument("no rewrite applies at this position");
  // Composability forces equal indices: a_i^* a_i becomes a_{i+1} a_{i+1}^*.
  const int i = arrows[position].index;
  arrows[position] = Arrow{mod(i + 1, n), false};
  arrows[position + 1] = Arrow{mod(i + 1, n), true};
  return PathWord(n, w.source(), std::move(arrows));
}

NormalPath normal_form(const PathWord& w) {
  PathWord current = w;
  while (true) {
    const auto positions = rewrite_positions(current);
    if (positions.empty()) break;
    current = apply_rewrite(current, positions.front());
  }
  int stars = 0;
  for (const auto& a : current.arrows()) stars += a.starred ? 1 : 0;
  return NormalPath{current.source(), current.length() - stars, stars};
}

PiElement::PiElement(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("the cyclic quiver needs at least 3 vertices");
}

PiElement PiElement::from_path(int n, const NormalPath& p, CycNum coeff) {
  PiElement x(n);
  x.add_term(p, coeff);
  return x;
}

CycNum PiElement::coefficient(const NormalPath& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? CycNum() : it->second;
}

void PiElement::add_term(const NormalPath& p, const CycNum& coeff) {
  if (coeff.is_zero()) return;
  if (p.u < 0 || p.v < 0) throw std::invalid_argument("negative arrow counts");
  NormalPath key{mod(p.k, n_), p.u, p.v};
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PiElement PiElement::operator-() const {
  PiElement out(n_);
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
  return out;
}

PiElement& PiElement::operator+=(const PiElement& rhs) {
  if (n_ != rhs.n_) throw size_mismatch("adding elements over different quivers");
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

PiElement& PiElement::operator-=(const PiElement& rhs) {
  if (n_ != rhs.n_) throw size_mismatch("subtracting elements over different quivers");
  for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
  return *this;
}

PiElement& PiElement::operator*=(const CycNum& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

PiElement PiElement::graded_component(int ell) const {
  PiElement out(n_);
  for (const auto& [p, c] : terms_)
    if (p.degree() == ell) out.terms_.emplace(p, c);
  return out;
}

int PiElement::max_degree() const {
  int deg = 0;
  for (const auto& [p, c] : terms_) deg = std::max(deg, p.degree());
  return deg;
}

FreeElement PiElement::lift() const {
  FreeElement out(n_);
  for (const auto& [p, c] : terms_) out.add_term(normal_path_word(p, n_), c);
  return out;
}

bool operator==(const PiElement& x, const PiElement& y) {
  if (x.n_ != y.n_) return false;
  if (x.terms_.size() != y.terms_.size()) return false;
  auto itx = x.terms_.begin();
  auto ity = y.terms_.begin();
  for (; itx != x.terms_.end(); ++itx, ++ity) {
    if (!(itx->first == ity->first) || itx->second != ity->second) return false;
  }
  return true;
}

std::string PiElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << " + ";
    out << "(" << c.to_string() << ")*" << p.to_string();
    first = false;
  }
  return out.str();
}

PiElement reduce(const FreeElement& x) {
  PiElement out(x.n());
  for (const auto& [word, coeff] : x.terms()) out.add_term(normal_form(word), coeff);
  return out;
}

PiElement pi_mul(const PiElement& x, const PiElement& y) {
  if (x.n() != y.n()) throw size_mismatch("multiplying elements over different quivers");
  return reduce(x.lift() * y.lift());
}

FreeElement omega_relation(int n, int i) {
  const int base = mod(i + 1, n);
  FreeElement out(n);
  out.add_term(PathWord(n, base, {Arrow{mod(i, n), true}, Arrow{mod(i, n), false}}),
               CycNum(1));
  out.add_term(
      PathWord(n, base, {Arrow{mod(i + 1, n), false}, Arrow{mod(i + 1, n), true}}),
      CycNum(-1));
  return out;
}

std::vector<NormalPath> pi_basis(int n, int ell) {
  if (n < 3) throw std::invalid_argument("the cyclic quiver needs at least 3 vertices");
  if (ell < 0) throw std::invalid_argument("negative degree");
  std::vector<NormalPath> basis;
  basis.reserve(static_cast<size_t>(n) * (ell + 1));
  for (int k = 0; k < n; ++k)
    for (int u = ell; u >= 0; --u) basis.push_back(NormalPath{k, u, ell - u});
  return basis;
}

CycVector pi_coordinates(const PiElement& x, int ell) {
  const auto basis = pi_basis(x.n(), ell);
  CycVector coords(basis.size(), CycNum());
  for (size_t i = 0; i < basis.size(); ++i) coords[i] = x.coefficient(basis[i]);
  return coords;
}

std::vector<PiElement> center_degree_basis(int n, int ell) {
  const auto basis = pi_basis(n, ell);
  // Generators to commute with: all trivial paths and all arrows.
  std::vector<PiElement> generators;
  for (int i = 0; i < n; ++i)
    generators.push_back(PiElement::from_path(n, NormalPath{i, 0, 0}));
  for (int i = 0; i < n; ++i)
    generators.push_back(PiElement::from_path(n, NormalPath{i, 1, 0}));
  for (int i = 0; i < n; ++i)
    generators.push_back(PiElement::from_path(n, NormalPath{mod(i + 1, n), 0, 1}));

  CycMatrix system;
  for (const auto& g : generators) {
    const int out_degree = ell + g.max_degree();
    const auto out_basis = pi_basis(n, out_degree);
    CycMatrix block(out_basis.size(), CycVector(basis.size(), CycNum()));
    for (size_t col = 0; col < basis.size(); ++col) {
      const PiElement z = PiElement::from_path(n, basis[col]);
      const PiElement commutator = pi_mul(z, g) - pi_mul(g, z);
      for (size_t row = 0; row < out_basis.size(); ++row)
        block[row][col] = commutator.coefficient(out_basis[row]);
    }
    for (auto& row : block) system.push_back(std::move(row));
  }

  std::vector<PiElement> result;
  for (const auto& vec : kernel_basis(system, basis.size())) {
    PiElement z(n);
    for (size_t i = 0; i < basis.size(); ++i) z.add_term(basis[i], vec[i]);
    result.push_back(std::move(z));
  }
  return result;
}

std::vector<std::vector<PiElement>> center_basis(int n, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  std::vector<std::vector<PiElement>> result;
  result.reserve(max_degree + 1);
  for (int ell = 0; ell <= max_degree; ++ell) result.push_back(center_degree_basis(n, ell));
  return result;
}

}  // namespace qtaft
