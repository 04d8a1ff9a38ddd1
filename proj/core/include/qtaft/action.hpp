#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtaft/preprojective.hpp"

namespace qtaft {

/// Presentation data of the generalized Taft algebra T_lambda(r,m):
/// generators g, x with g x = lambda x g, g^m = 1, x^r = 0, where lambda
/// is a primitive r-th root of unity and r divides m.
struct TaftData {
  long r = 2;
  long m = 2;
  RootOfUnity lambda;

  CycNum lambda_value() const { return lambda.value(); }
  /// Throws std::invalid_argument when the presentation data is malformed.
  void validate() const;
};

/// One named check with its outcome; failed entries carry a witness.
struct CheckEntry {
  std::string name;
  bool passed = true;
  std::string witness;
};

/// Ordered list of named per-check results.
struct ConstraintReport {
  std::vector<CheckEntry> entries;

  bool all_passed() const;
  void add(std::string name, bool passed, std::string witness = "");
  void merge(const ConstraintReport& other);
  const CheckEntry* find(const std::string& name) const;
  std::string to_string() const;
};

/// The auxiliary map sigma carrying the non-diagonal part of the x-action.
/// Vertices are absent from the table (sigma kills them); each arrow image
/// is a homogeneous element of degree 0 or 1.
class SigmaTable {
 public:
  SigmaTable() = default;

  bool empty_or_zero() const;
  void set(const Arrow& a, FreeElement image);
  const std::map<Arrow, FreeElement>& entries() const { return entries_; }

  /// sigma(a); zero element of the given quiver size when absent.
  FreeElement of_arrow(const Arrow& a, int n) const;

  /// Linear action on a degree <= 1 element: trivial paths map to zero,
  /// arrows through the table. Throws on higher-degree input.
  FreeElement apply(const FreeElement& x) const;

  /// sigma^power applied to a single arrow.
  FreeElement power_on_arrow(const Arrow& a, int n, long power) const;

 private:
  std::map<Arrow, FreeElement> entries_;
};

enum class ActionKind { rotation, reflection };

std::string kind_to_string(ActionKind kind);
std::optional<ActionKind> kind_from_string(const std::string& text);

/// Complete parameter set of a T_lambda(r,m)-action on the doubled cyclic
/// quiver and its preprojective algebra:
///   rotation:   g.e_i = e_{i+d},      g.a_i = mu_i a_{i+d},
///               g.a_i^* = mu_i^* a_{i+d}^*
///   reflection: g.e_i = e_{n-(d+i)},  g.a_i = mu_i a_{n-(d+i+1)}^*,
///               g.a_i^* = mu_i^* a_{n-(d+i+1)}
///   x.e_i = gamma_i e_i - gamma_i lambda^{-1} e_{g.i}
///   x.a   = gamma_{t(a)} a - gamma_{s(a)} lambda^{-1} (g.a) + sigma(a)
struct ActionSpec {
  TaftData taft;
  int n = 3;
  ActionKind kind = ActionKind::rotation;
  int d = 1;
  std::vector<CycNum> mu;
  std::vector<CycNum> mu_star;
  std::vector<CycNum> gamma;
  SigmaTable sigma;
  long field_order = 4;  // working cyclotomic order L

  /// Image vertex of i under g.
  int g_vertex(int i) const;
  /// Image of an arrow under g: scalar times a single arrow.
  std::pair<CycNum, Arrow> g_arrow(const Arrow& a) const;

  const CycNum& mu_of(const Arrow& a) const;
  CycNum gamma_at(int i) const;
  CycNum lambda() const { return taft.lambda_value(); }

  /// Rotation orbit size n/gcd(n,d) and orbit count gcd(n,d).
  long orbit_size() const;
  long orbit_count() const;

  bool any_gamma_nonzero() const;

  /// Structural invariants: Taft data, table sizes and nonvanishing,
  /// gamma eigenvector rule, orbit-size conditions, sigma shape and
  /// equivariance, and the sigma^r compatibility equation.
  ConstraintReport validate_structure() const;
};

/// Default working order lcm(m, n, 4); the factor 4 keeps a square root
/// of -1 available for derived scalars.
long default_field_order(long m, int n);

/// The algebra automorphism g applied to an element.
FreeElement act_g(const ActionSpec& spec, const FreeElement& x);
PiElement act_g(const ActionSpec& spec, const PiElement& x);
FreeElement act_g_power(const ActionSpec& spec, const FreeElement& x, long power);

/// The skew-primitive generator x applied to an element. Words split as
/// (first arrow)(rest) under x.(pq) = p(x.q) + (x.p)(g.q).
FreeElement act_x(const ActionSpec& spec, const FreeElement& x);
PiElement act_x(const ActionSpec& spec, const PiElement& x);

/// Operator checks on the preprojective algebra up to degree max_degree:
/// g^m = id, x^r = 0, and g(x.p) = lambda x(g.p) on every basis path.
ConstraintReport verify_hopf_relations(const ActionSpec& spec, int max_degree);

/// (a) multiplicativity of g and the skew-Leibniz rule for x across every
/// split of every word pair up to total degree max_degree (this certifies
/// that the first-arrow extension is well defined), and (b) descent to the
/// preprojective quotient: g and x kill every defining relation.
ConstraintReport verify_module_algebra(const ActionSpec& spec, int max_degree);

/// Fast scalar forms of the descent conditions, used to prune enumeration:
/// mu_i mu_i^* constant in i, and the sigma descent combination vanishing.
bool descent_mu_condition(const ActionSpec& spec);
FreeElement descent_sigma_combination(const ActionSpec& spec, int i);

/// x acts nonzero on some trivial path or arrow.
bool is_inner_faithful(const ActionSpec& spec);

}  // namespace qtaft
