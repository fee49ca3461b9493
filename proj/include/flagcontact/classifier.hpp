#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagcontact/parabolic.hpp"
#include "flagcontact/root_system.hpp"

namespace flagcontact {

enum class Verdict { Exists, NoneExists };

std::string verdict_name(Verdict v);

/// Outcome of the contact classification for one Cartan kind. When the
/// verdict is Exists the optional fields describe G/P_Lambda: the unique
/// simple root alpha not orthogonal to the highest root lambda, the
/// orthogonal set Lambda, dim = 2n+1, and the weight identities tying the
/// contact line bundle L(lambda) to the anticanonical bundle.
struct ContactReport {
  CartanKind kind;
  Verdict verdict = Verdict::NoneExists;

  /// Simple roots not orthogonal to the highest root: size 1 exactly when
  /// the verdict is Exists; the witness pair for A_n, n >= 2.
  std::vector<int> non_orthogonal_nodes;

  std::optional<int> contact_node;              // the alpha above, 0-based
  std::optional<std::vector<int>> orthogonal_nodes;  // Lambda = Pi minus {alpha}
  std::optional<int> dim;                       // 2n+1
  std::optional<int> n;
  std::optional<Weight> line_bundle_weight;     // lambda, fundamental basis
  std::optional<int> line_bundle_coefficient;   // k with lambda = k omega_alpha
  bool identity_checked = false;                // (n+1) lambda = mu_Lambda
  std::optional<Weight> anticanonical_weight;   // mu_Lambda

  friend bool operator==(const ContactReport&, const ContactReport&) = default;
};

/// { beta in Pi : (lambda, beta) != 0 } for the highest root lambda,
/// read off the nonzero fundamental coordinates of lambda.
std::vector<int> non_orthogonal_simple_roots(const RootSystem& rs);

/// The full classification for one kind: NoneExists iff more than one
/// simple root meets the highest root (type A_n, n >= 2); otherwise all
/// report fields are populated from the parabolic for Lambda.
ContactReport classify(CartanKind kind);
ContactReport classify(const std::string& kind_text);

/// True iff (n+1) * lambda = mu_S coordinatewise, where pd.dimension = 2n+1.
/// Throws DimensionNotOdd when pd.dimension is even (S is not a contact
/// candidate and the power identity is not well posed).
bool verify_line_bundle_identity(const ParabolicData& pd, const Weight& lambda);

/// Asserts the nilradical weights of pd are pairwise distinct and returns
/// the bijection (fundamental-basis weight) -> (nilradical root). Distinct
/// weights are what makes a corank-1 invariant subbundle determined by its
/// quotient line bundle.
std::map<Weight, Root> certify_corank_one_uniqueness(const ParabolicData& pd);

}  // namespace flagcontact
