#include "flagcontact/parabolic.hpp"

#include <algorithm>

#include "flagcontact/errors.hpp"

namespace flagcontact {

ParabolicData build_parabolic(const RootSystem& rs, const std::vector<int>& S) {
  ParabolicData pd;
  pd.rs = &rs;

  std::vector<char> in_S(rs.rank(), 0);
  for (int node : S) {
    if (node < 0 || node >= rs.rank())
      throw InvalidNode("parabolic node " + std::to_string(node) + " out of range for " +
                        rs.kind().name());
    in_S[node] = 1;
  }
  for (int i = 0; i < rs.rank(); ++i)
    if (in_S[i]) pd.levi_nodes.push_back(i);

  Root nilrad_sum{std::vector<int>(rs.rank(), 0)};
  for (const Root& beta : rs.positive_roots()) {
    bool supported_on_S = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (beta.coords[i] != 0 && !in_S[i]) {
        supported_on_S = false;
        break;
      }
    }
    if (supported_on_S) {
      pd.levi_roots.push_back(beta);
    } else {
      pd.nilradical.push_back(beta);
      nilrad_sum = nilrad_sum + beta;
    }
  }

  pd.anticanonical_weight = to_fundamental_basis(nilrad_sum, rs);
  pd.dimension = static_cast<int>(pd.nilradical.size());
  pd.b2 = rs.rank() - static_cast<int>(pd.levi_nodes.size());
  return pd;
}

std::vector<Weight> invariant_lattice_basis(const ParabolicData& pd) {
  const int rank = pd.rs->rank();
  std::vector<char> in_S(rank, 0);
  for (int node : pd.levi_nodes) in_S[node] = 1;

  std::vector<Weight> basis;
  for (int i = 0; i < rank; ++i) {
    if (in_S[i]) continue;
    Weight omega{std::vector<int>(rank, 0)};
    omega.coords[i] = 1;
    basis.push_back(omega);
  }
  return basis;
}

bool is_in_invariant_lattice(const Weight& w, const ParabolicData& pd) {
  return std::all_of(pd.levi_nodes.begin(), pd.levi_nodes.end(),
                     [&w](int node) { return w.coords[node] == 0; });
}

int betti2(const ParabolicData& pd) { return pd.b2; }

}  // namespace flagcontact
