#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtaft/cyclotomic.hpp"

namespace qtaft {

/// One arrow of the doubled cyclic quiver on n vertices: a_i runs i -> i+1,
/// the starred reverse a_i^* runs i+1 -> i (indices mod n).
struct Arrow {
  int index = 0;
  bool starred = false;

  friend bool operator==(const Arrow& x, const Arrow& y) {
    return x.index == y.index && x.starred == y.starred;
  }
  friend bool operator<(const Arrow& x, const Arrow& y) {
    if (x.index != y.index) return x.index < y.index;
    return x.starred < y.starred;
  }
};

int arrow_source(const Arrow& a, int n);
int arrow_target(const Arrow& a, int n);
std::string arrow_to_string(const Arrow& a);

/// A composable word in the doubled quiver; the empty word at base_vertex
/// is the trivial path e_{base_vertex}. Immutable after construction;
/// the constructor rejects non-composable arrow sequences and n < 3.
class PathWord {
 public:
  PathWord(int n, int base_vertex);
  PathWord(int n, int base_vertex, std::vector<Arrow> arrows);

  static PathWord trivial(int n, int vertex) { return PathWord(n, vertex); }
  static PathWord from_arrow(int n, const Arrow& a);

  int n() const { return n_; }
  int source() const { return base_; }
  int target() const;
  int length() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// Concatenation pq, or nullopt when t(p) != s(q) (the zero product).
  std::optional<PathWord> composed_with(const PathWord& q) const;

  /// The word split as (first arrow, rest); length() must be >= 1.
  Arrow first_arrow() const;
  PathWord rest() const;

  /// "e3" for trivial paths, "a0.a1.a1*" for words.
  std::string to_string() const;
  static std::optional<PathWord> from_string(int n, const std::string& text);

  friend bool operator==(const PathWord& x, const PathWord& y) {
    return x.n_ == y.n_ && x.base_ == y.base_ && x.arrows_ == y.arrows_;
  }
  /// Length, then base vertex, then star flags lexicographically. The star
  /// flags determine the arrow indices along a composable word, so this is
  /// a total order; it fixes serialization and basis order.
  friend bool operator<(const PathWord& x, const PathWord& y);

 private:
  int n_;
  int base_;
  std::vector<Arrow> arrows_;
};

/// An element of the free path algebra kQ over Q(zeta): finitely many
/// words with nonzero cyclotomic coefficients, graded by word length.
class FreeElement {
 public:
  explicit FreeElement(int n);

  static FreeElement from_path(const PathWord& p, CycNum coeff = CycNum(1));

  int n() const { return n_; }
  const std::map<PathWord, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of p (zero if absent).
  CycNum coefficient(const PathWord& p) const;
  void add_term(const PathWord& p, const CycNum& coeff);

  FreeElement operator-() const;
  FreeElement& operator+=(const FreeElement& rhs);
  FreeElement& operator-=(const FreeElement& rhs);
  friend FreeElement operator+(FreeElement lhs, const FreeElement& rhs) { return lhs += rhs; }
  friend FreeElement operator-(FreeElement lhs, const FreeElement& rhs) { return lhs -= rhs; }

  FreeElement& operator*=(const CycNum& scalar);
  friend FreeElement operator*(const CycNum& scalar, FreeElement rhs) { return rhs *= scalar; }

  /// Bilinear extension of concatenation. Throws size_mismatch when the
  /// operands carry different n.
  friend FreeElement operator*(const FreeElement& lhs, const FreeElement& rhs);

  /// Terms of word length ell.
  FreeElement graded_component(int ell) const;
  int max_degree() const;

  friend bool operator==(const FreeElement& x, const FreeElement& y);
  friend bool operator!=(const FreeElement& x, const FreeElement& y) { return !(x == y); }

  std::string to_string() const;

 private:
  int n_;
  std::map<PathWord, CycNum> terms_;
};

/// Sum of all trivial paths: the unit of kQ.
FreeElement algebra_unit(int n);

/// All composable words of length ell, ordered by base vertex then star
/// flags. Sizes: n for ell = 0, n*2^ell otherwise.
std::vector<PathWord> graded_basis(int n, int ell);

}  // namespace qtaft
