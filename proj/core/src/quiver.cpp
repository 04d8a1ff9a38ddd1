#include "qtaft/quiver.hpp"

#include <sstream>

#include "qtaft/errors.hpp"

namespace qtaft {

namespace {

int mod(int value, int n) {
  int r = value % n;
  return r < 0 ? r + n : r;
}

void check_n(int n) {
  if (n < 3) throw std::invalid_argument("the cyclic quiver needs at least 3 vertices");
}

}  // namespace

int arrow_source(const Arrow& a, int n) {
  return a.starred ? mod(a.index + 1, n) : mod(a.index, n);
}

int arrow_target(const Arrow& a, int n) {
  return a.starred ? mod(a.index, n) : mod(a.index + 1, n);
}

std::string arrow_to_string(const Arrow& a) {
  return "a" + std::to_string(a.index) + (a.starred ? "*" : "");
}

PathWord::PathWord(int n, int base_vertex) : n_(n), base_(0) {
  check_n(n);
  base_ = mod(base_vertex, n);
}

PathWord::PathWord(int n, int base_vertex, std::vector<Arrow> arrows)
    : n_(n), base_(0), arrows_(std::move(arrows)) {
  check_n(n);
  base_ = mod(base_vertex, n);
  int at = base_;
  for (auto& a : arrows_) {
    a.index = mod(a.index, n);
    if (arrow_source(a, n) != at)
      throw std::invalid_argument("arrows do not compose into a path");
    at = arrow_target(a, n);
  }
}

PathWord PathWord::from_arrow(int n, const Arrow& a) {
  return PathWord(n, arrow_source(a, n), {a});
}

int PathWord::target() const {
  return arrows_.empty() ? base_ : arrow_target(arrows_.back(), n_);
}

std::optional<PathWord> PathWord::composed_with(const PathWord& q) const {
  if (n_ != q.n_) throw size_mismatch("composing paths over different quivers");
  if (target() != q.source()) return std::nullopt;
  std::vector<Arrow> joined = arrows_;
  joined.insert(joined.end(), q.arrows_.begin(), q.arrows_.end());
  return PathWord(n_, base_, std::move(joined));
}

Arrow PathWord::first_arrow() const {
  if (arrows_.empty()) throw std::logic_error("trivial path has no first arrow");
  return arrows_.front();
}

PathWord PathWord::rest() const {
  if (arrows_.empty()) throw std::logic_error("trivial path has no rest");
  return PathWord(n_, arrow_target(arrows_.front(), n_),
                  std::vector<Arrow>(arrows_.begin() + 1, arrows_.end()));
}

std::string PathWord::to_string() const {
  if (arrows_.empty()) return "e" + std::to_string(base_);
  std::ostringstream out;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    if (i > 0) out << ".";
    out << arrow_to_string(arrows_[i]);
  }
  return out.str();
}

std::optional<PathWord> PathWord::from_string(int n, const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text[0] == 'e') {
    try {
      return PathWord(n, std::stoi(text.substr(1)));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  std::vector<Arrow> arrows;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, '.')) {
    if (token.size() < 2 || token[0] != 'a') return std::nullopt;
    Arrow a;
    if (token.back() == '*') {
      a.starred = true;
      token.pop_back();
    }
    try {
      a.index = std::stoi(token.substr(1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    arrows.push_back(a);
  }
  if (arrows.empty()) return std::nullopt;
  try {
    const int base = arrow_source(arrows.front(), n);
    return PathWord(n, base, std::move(arrows));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool operator<(const PathWord& x, const PathWord& y) {
  if (x.arrows_.size() != y.arrows_.size()) return x.arrows_.size() < y.arrows_.size();
  if (x.base_ != y.base_) return x.base_ < y.base_;
  for (size_t i = 0; i < x.arrows_.size(); ++i) {
    if (x.arrows_[i].starred != y.arrows_[i].starred)
      return y.arrows_[i].starred;  // unstarred sorts first
  }
  return false;
}

FreeElement::FreeElement(int n) : n_(n) { check_n(n); }

FreeElement FreeElement::from_path(const PathWord& p, CycNum coeff) {
  FreeElement x(p.n());
  x.add_term(p, coeff);
  return x;
}

CycNum FreeElement::coefficient(const PathWord& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? CycNum() : it->second;
}

void FreeElement::add_term(const PathWord& p, const CycNum& coeff) {
  if (p.n() != n_) throw size_mismatch("term over a different quiver");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement FreeElement::operator-() const {
  FreeElement out(n_);
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
  return out;
}

FreeElement& FreeElement::operator+=(const FreeElement& rhs) {
  if (n_ != rhs.n_) throw size_mismatch("adding elements over different quivers");
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& rhs) {
  if (n_ != rhs.n_) throw size_mismatch("subtracting elements over different quivers");
  for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const CycNum& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

FreeElement operator*(const FreeElement& lhs, const FreeElement& rhs) {
  if (lhs.n_ != rhs.n_) throw size_mismatch("multiplying elements over different quivers");
  FreeElement out(lhs.n_);
  for (const auto& [p, cp] : lhs.terms_) {
    for (const auto& [q, cq] : rhs.terms_) {
      const auto pq = p.composed_with(q);
      if (pq) out.add_term(*pq, cp * cq);
    }
  }
  return out;
}

FreeElement FreeElement::graded_component(int ell) const {
  FreeElement out(n_);
  for (const auto& [p, c] : terms_)
    if (p.length() == ell) out.terms_.emplace(p, c);
  return out;
}

int FreeElement::max_degree() const {
  int deg = 0;
  for (const auto& [p, c] : terms_) deg = std::max(deg, p.length());
  return deg;
}

bool operator==(const FreeElement& x, const FreeElement& y) {
  if (x.n_ != y.n_) return false;
  if (x.terms_.size() != y.terms_.size()) return false;
  auto itx = x.terms_.begin();
  auto ity = y.terms_.begin();
  for (; itx != x.terms_.end(); ++itx, ++ity) {
    if (!(itx->first == ity->first) || itx->second != ity->second) return false;
  }
  return true;
}

std::string FreeElement::to_string() const {
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

FreeElement algebra_unit(int n) {
  FreeElement unit(n);
  for (int i = 0; i < n; ++i) unit.add_term(PathWord::trivial(n, i), CycNum(1));
  return unit;
}

std::vector<PathWord> graded_basis(int n, int ell) {
  check_n(n);
  if (ell < 0) throw std::invalid_argument("negative path length");
  std::vector<PathWord> basis;
  for (int base = 0; base < n; ++base) {
    // Depth-first over star flags; at a vertex v the unstarred continuation
    // is a_v and the starred one is a_{v-1}^*.
    std::vector<Arrow> arrows;
    auto extend = [&](auto&& self, int at, int remaining) -> void {
      if (remaining == 0) {
        basis.emplace_back(n, base, arrows);
        return;
      }
      arrows.push_back(Arrow{at, false});
      self(self, mod(at + 1, n), remaining - 1);
      arrows.back() = Arrow{mod(at - 1, n), true};
      self(self, mod(at - 1, n), remaining - 1);
      arrows.pop_back();
    };
    extend(extend, base, ell);
  }
  return basis;
}

}  // namespace qtaft
