#pragma once

#include <cstdint>
#include <vector>

#include "flagcontact/parabolic.hpp"
#include "flagcontact/root_system.hpp"

namespace flagcontact {

/// Integral basis {h_1..h_rank} union {e_delta : delta in Delta} with
/// integer structure constants. Elements are coordinate vectors over that
/// basis, laid out as [h_0..h_{rank-1} | e_{beta_0}.. (positive, enumeration
/// order) | e_{-beta_0}.. (negative, same order)].
///
/// Signs come from a bimultiplicative asymmetry function on the root
/// lattice (see build notes in the source); the convention is normalized so
/// that [e_delta, e_{-delta}] = h_delta with h_delta linear in delta's
/// simple-root coordinates. Any consistent convention yields the same
/// contact-form rank. Immutable after construction; reads are thread-safe.
class ChevalleyAlgebra {
 public:
  /// Copies the root system, so the algebra has no lifetime ties to the
  /// argument. Throws JacobiFailure if the build-time Jacobi spot check
  /// fails (a program error in the sign table, not a data error).
  explicit ChevalleyAlgebra(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int dimension() const;  // rank + |Delta|

  int h_index(int node) const;
  /// delta must be a root (positive or negative); throws InvalidNode otherwise.
  int e_index(const Root& delta) const;
  bool is_root_index(int basis_index) const;
  /// The root carried by an e-basis index.
  Root root_at(int basis_index) const;

  /// N_{delta,gamma} with [e_delta, e_gamma] = N e_{delta+gamma} when
  /// delta+gamma is a root; 0 when it is not (including delta+gamma = 0,
  /// which bracket() handles through the coroot).
  int structure_constant(const Root& delta, const Root& gamma) const;

  /// Bilinear bracket on coordinate vectors, exact integer arithmetic.
  std::vector<long long> bracket(const std::vector<long long>& x,
                                 const std::vector<long long>& y) const;

  /// Basis vector helpers.
  std::vector<long long> h(int node) const;
  std::vector<long long> e(const Root& delta) const;

 private:
  int epsilon(const Root& delta, const Root& gamma) const;

  RootSystem rs_;
  std::vector<std::vector<char>> asym_;  // exponent table of the asymmetry function
};

ChevalleyAlgebra build_chevalley(const RootSystem& rs);

/// The weights of (g_{-lambda})^perp / p_Lambda at the base point:
/// Delta+ minus ({lambda} union Delta_Lambda+), in enumeration order.
/// Throws NotContactParabolic unless pd's levi nodes are exactly the simple
/// roots orthogonal to the highest root and the complement is one node.
std::vector<Root> perp_complement_weights(const ParabolicData& pd);

/// Gram matrix of the L-twisted form on the contact fibre: entries[i][j] is
/// the e_lambda-coefficient of [e_{beta_i}, e_{beta_j}]. Antisymmetric, and
/// nonzero only where beta_i + beta_j = lambda.
struct ContactFormMatrix {
  std::vector<Root> weights;
  std::vector<std::vector<long long>> entries;
};

ContactFormMatrix contact_form_matrix(const ChevalleyAlgebra& alg, const ParabolicData& pd);

struct NondegeneracyCertificate {
  bool nondegenerate = false;
  int rank = 0;  // exact rank over the rationals
};

/// Exact rank via fraction-free (Bareiss) elimination over the integers.
NondegeneracyCertificate certify_nondegenerate(const ContactFormMatrix& M);

/// Exact integer-matrix rank, exposed for tests and the CLI certificate.
int exact_rank(std::vector<std::vector<long long>> m);

/// True iff the Jacobi identity holds on the basis triple (i, j, k).
bool jacobi_triple_holds(const ChevalleyAlgebra& alg, int i, int j, int k);

/// Jacobi identity on `count` uniformly sampled basis triples; returns the
/// number of violations.
int jacobi_sample(const ChevalleyAlgebra& alg, int count, std::uint64_t seed);

}  // namespace flagcontact
