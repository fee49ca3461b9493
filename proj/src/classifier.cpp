#include "flagcontact/classifier.hpp"

#include <stdexcept>

#include "flagcontact/errors.hpp"

namespace flagcontact {

std::string verdict_name(Verdict v) {
  return v == Verdict::Exists ? "Exists" : "NoneExists";
}

std::vector<int> non_orthogonal_simple_roots(const RootSystem& rs) {
  const Weight lambda = to_fundamental_basis(rs.highest(), rs);
  std::vector<int> nodes;
  for (int i = 0; i < rs.rank(); ++i)
    if (lambda.coords[i] != 0) nodes.push_back(i);
  return nodes;
}

ContactReport classify(CartanKind kind) {
  const RootSystem rs = build_root_system(kind);

  ContactReport report;
  report.kind = kind;
  report.non_orthogonal_nodes = non_orthogonal_simple_roots(rs);
  if (report.non_orthogonal_nodes.size() != 1) {
    report.verdict = Verdict::NoneExists;
    return report;
  }

  const int alpha = report.non_orthogonal_nodes.front();
  std::vector<int> lambda_nodes;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != alpha) lambda_nodes.push_back(i);
  const ParabolicData pd = build_parabolic(rs, lambda_nodes);

  const Weight lambda = to_fundamental_basis(rs.highest(), rs);
  report.verdict = Verdict::Exists;
  report.contact_node = alpha;
  report.orthogonal_nodes = lambda_nodes;
  report.dim = pd.dimension;
  report.n = (pd.dimension - 1) / 2;
  report.line_bundle_weight = lambda;
  report.line_bundle_coefficient = lambda.coords[alpha];
  report.anticanonical_weight = pd.anticanonical_weight;
  report.identity_checked = verify_line_bundle_identity(pd, lambda);
  return report;
}

ContactReport classify(const std::string& kind_text) {
  return classify(parse_kind(kind_text));
}

bool verify_line_bundle_identity(const ParabolicData& pd, const Weight& lambda) {
  if (pd.dimension % 2 == 0)
    throw DimensionNotOdd("dim G/P_S = " + std::to_string(pd.dimension) +
                          " is even; no contact structure is possible");
  const int n = (pd.dimension - 1) / 2;
  return (n + 1) * lambda == pd.anticanonical_weight;
}

std::map<Weight, Root> certify_corank_one_uniqueness(const ParabolicData& pd) {
  std::map<Weight, Root> quotient_weights;
  for (const Root& gamma : pd.nilradical) {
    const Weight w = to_fundamental_basis(gamma, *pd.rs);
    auto [it, inserted] = quotient_weights.emplace(w, gamma);
    if (!inserted)
      throw std::logic_error("nilradical weights collide; impossible in a root system");
  }
  return quotient_weights;
}

}  // namespace flagcontact
