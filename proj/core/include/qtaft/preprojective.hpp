#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtaft/linalg.hpp"
#include "qtaft/quiver.hpp"

namespace qtaft {

/// The canonical basis path p_k(u,v) of the preprojective algebra:
/// u unstarred arrows a_k .. a_{k+u-1}, then v starred arrows
/// a_{k+u-1}^* .. a_{k+u-v}^*. Source k, target k+u-v, degree u+v.
/// (k,0,0) is the trivial path e_k.
struct NormalPath {
  int k = 0;
  int u = 0;
  int v = 0;

  int degree() const { return u + v; }
  int source() const { return k; }
  int target(int n) const;

  /// "p(k,u,v)"
  std::string to_string() const;
  static std::optional<NormalPath> from_string(const std::string& text);

  friend bool operator==(const NormalPath& x, const NormalPath& y) {
    return x.k == y.k && x.u == y.u && x.v == y.v;
  }
  friend bool operator<(const NormalPath& x, const NormalPath& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (x.k != y.k) return x.k < y.k;
    return x.u > y.u;  // within a degree: more unstarred arrows first
  }
};

/// The representative word of p_k(u,v) in the doubled quiver.
PathWord normal_path_word(const NormalPath& p, int n);

/// Positions where the rewrite a_i^* a_i -> a_{i+1} a_{i+1}^* applies,
/// i.e. a starred arrow immediately followed by an unstarred one.
std::vector<size_t> rewrite_positions(const PathWord& w);

/// One rewrite step at the given position. The relation is monic on both
/// sides, so no coefficient appears.
PathWord apply_rewrite(const PathWord& w, size_t position);

/// Normal form of a composable word: leftmost rewriting until the word is
/// an unstarred block followed by a starred block. Terminates because each
/// step moves a star strictly to the right.
NormalPath normal_form(const PathWord& w);

/// An element of the preprojective algebra in the normal-path basis.
class PiElement {
 public:
  explicit PiElement(int n);

  static PiElement from_path(int n, const NormalPath& p, CycNum coeff = CycNum(1));

  int n() const { return n_; }
  const std::map<NormalPath, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CycNum coefficient(const NormalPath& p) const;
  void add_term(const NormalPath& p, const CycNum& coeff);

  PiElement operator-() const;
  PiElement& operator+=(const PiElement& rhs);
  PiElement& operator-=(const PiElement& rhs);
  friend PiElement operator+(PiElement lhs, const PiElement& rhs) { return lhs += rhs; }
  friend PiElement operator-(PiElement lhs, const PiElement& rhs) { return lhs -= rhs; }

  PiElement& operator*=(const CycNum& scalar);
  friend PiElement operator*(const CycNum& scalar, PiElement rhs) { return rhs *= scalar; }

  PiElement graded_component(int ell) const;
  int max_degree() const;

  /// The element's canonical representative in the free path algebra.
  FreeElement lift() const;

  friend bool operator==(const PiElement& x, const PiElement& y);
  friend bool operator!=(const PiElement& x, const PiElement& y) { return !(x == y); }

  std::string to_string() const;

 private:
  int n_;
  std::map<NormalPath, CycNum> terms_;
};

/// Image of a free element in the preprojective algebra: every word is
/// replaced by its normal form. This is an algebra homomorphism.
PiElement reduce(const FreeElement& x);

/// Multiplication in the preprojective algebra: multiply representatives,
/// then reduce.
PiElement pi_mul(const PiElement& x, const PiElement& y);

/// The defining relation at vertex i+1: a_i^* a_i - a_{i+1} a_{i+1}^*.
FreeElement omega_relation(int n, int i);

/// All p_k(u,v) with u+v = ell; there are n*(ell+1) of them.
std::vector<NormalPath> pi_basis(int n, int ell);

/// Basis of the degree-ell component of the center, by an exact kernel
/// solve of z*b = b*z against all trivial paths and arrows b.
std::vector<PiElement> center_degree_basis(int n, int ell);

/// Center bases for every degree 0..max_degree.
std::vector<std::vector<PiElement>> center_basis(int n, int max_degree);

/// Coordinates of x in the degree-ell normal-path basis.
CycVector pi_coordinates(const PiElement& x, int ell);

}  // namespace qtaft
