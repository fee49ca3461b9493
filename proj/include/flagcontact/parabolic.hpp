#pragma once

#include <vector>

#include "flagcontact/root_system.hpp"

namespace flagcontact {

/// Combinatorics of the standard parabolic attached to a node subset S:
/// the positive roots of the Levi factor, the nilradical weights of g/p_S,
/// and the derived invariants used by the classifier. Immutable after
/// construction; concurrent reads are safe.
struct ParabolicData {
  const RootSystem* rs;
  std::vector<int> levi_nodes;         // S, sorted, 0-based
  std::vector<Root> levi_roots;        // { beta in Delta+ : support(beta) in S }
  std::vector<Root> nilradical;        // Delta+ minus levi_roots, enumeration order
  Weight anticanonical_weight;         // sum of nilradical weights, fundamental basis
  int dimension = 0;                   // |nilradical| = dim G/P_S
  int b2 = 0;                          // |Pi minus S| = rank of H^2(G/P_S)
};

/// Throws InvalidNode if S contains an out-of-range index. Duplicates in S
/// are collapsed.
ParabolicData build_parabolic(const RootSystem& rs, const std::vector<int>& S);

/// Basis of the W_S-invariant part of the weight lattice:
/// {omega_beta : beta in Pi minus S} as standard vectors in fundamental
/// coordinates.
std::vector<Weight> invariant_lattice_basis(const ParabolicData& pd);

/// True iff w is orthogonal to every simple root in S, i.e. w.coords[i] = 0
/// for all i in S.
bool is_in_invariant_lattice(const Weight& w, const ParabolicData& pd);

int betti2(const ParabolicData& pd);

}  // namespace flagcontact
