#include "flagcontact/chevalley.hpp"

#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "flagcontact/errors.hpp"

namespace flagcontact {

namespace {

// +1 on positive roots, -1 on negative ones. Rescaling e_delta by sigma
// turns the raw asymmetry-function bracket, which gives [e,f] = -h, into
// the normalization [e_delta, e_{-delta}] = h_delta used everywhere here.
int sigma(const Root& delta) { return delta.height() < 0 ? -1 : 1; }

bool is_negative(const Root& delta) { return delta.height() < 0; }

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(const RootSystem& rs) : rs_(rs) {
  const int n = rs.rank();
  const auto& a = rs.cartan();

  // Exponent table of the bimultiplicative asymmetry function: -1 on the
  // diagonal and along Dynkin edges oriented by ascending node index. This
  // gives eps(beta, beta) = -1 for every root, which is what makes the
  // bracket close with |N| = 1 on simply-laced root strings.
  asym_.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) asym_[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] == -1) asym_[i][j] = 1;

  // Spot check; the test suite runs the exhaustive version.
  std::uint64_t state = 0x5EED5EED5EEDULL;
  auto next = [&state](int bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
  };
  const int dim = dimension();
  for (int trial = 0; trial < 200; ++trial) {
    const int i = next(dim), j = next(dim), k = next(dim);
    std::vector<long long> bi(dim, 0), bj(dim, 0), bk(dim, 0);
    bi[i] = 1;
    bj[j] = 1;
    bk[k] = 1;
    auto acc = bracket(bi, bracket(bj, bk));
    auto t2 = bracket(bj, bracket(bk, bi));
    auto t3 = bracket(bk, bracket(bi, bj));
    for (int idx = 0; idx < dim; ++idx) {
      if (acc[idx] + t2[idx] + t3[idx] != 0) {
        std::ostringstream msg;
        msg << "Jacobi failure on basis triple (" << i << ", " << j << ", " << k << ") of "
            << rs.kind().name();
        throw JacobiFailure(msg.str());
      }
    }
  }
}

int ChevalleyAlgebra::dimension() const {
  return rank() + 2 * static_cast<int>(rs_.positive_roots().size());
}

int ChevalleyAlgebra::h_index(int node) const {
  if (node < 0 || node >= rank()) throw InvalidNode("h index out of range");
  return node;
}

int ChevalleyAlgebra::e_index(const Root& delta) const {
  const int num_positive = static_cast<int>(rs_.positive_roots().size());
  if (is_negative(delta)) {
    auto idx = rs_.index_of(-delta);
    if (!idx) throw std::invalid_argument("not a root");
    return rank() + num_positive + static_cast<int>(*idx);
  }
  auto idx = rs_.index_of(delta);
  if (!idx) throw std::invalid_argument("not a root");
  return rank() + static_cast<int>(*idx);
}

bool ChevalleyAlgebra::is_root_index(int basis_index) const {
  return basis_index >= rank() && basis_index < dimension();
}

Root ChevalleyAlgebra::root_at(int basis_index) const {
  const int num_positive = static_cast<int>(rs_.positive_roots().size());
  if (!is_root_index(basis_index)) throw std::invalid_argument("not an e-basis index");
  const int offset = basis_index - rank();
  if (offset < num_positive) return rs_.positive_roots()[offset];
  return -rs_.positive_roots()[offset - num_positive];
}

int ChevalleyAlgebra::epsilon(const Root& delta, const Root& gamma) const {
  int exponent = 0;
  for (int i = 0; i < rank(); ++i) {
    if (delta.coords[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (asym_[i][j]) exponent += delta.coords[i] * gamma.coords[j];
  }
  return exponent % 2 != 0 ? -1 : 1;
}

int ChevalleyAlgebra::structure_constant(const Root& delta, const Root& gamma) const {
  const Root sum = delta + gamma;
  const bool sum_is_root =
      is_negative(sum) ? rs_.is_positive_root(-sum) : rs_.is_positive_root(sum);
  if (!sum_is_root) return 0;
  return sigma(delta) * sigma(gamma) * sigma(sum) * epsilon(delta, gamma);
}

std::vector<long long> ChevalleyAlgebra::bracket(const std::vector<long long>& x,
                                                 const std::vector<long long>& y) const {
  const int dim = dimension();
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw std::invalid_argument("element size mismatch");
  std::vector<long long> out(dim, 0);

  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const long long scale = x[i] * y[j];
      const bool i_is_h = i < rank();
      const bool j_is_h = j < rank();
      if (i_is_h && j_is_h) continue;
      if (i_is_h) {
        const Root gamma = root_at(j);
        out[j] += scale * pairing(gamma, i, rs_);
        continue;
      }
      if (j_is_h) {
        const Root delta = root_at(i);
        out[i] -= scale * pairing(delta, j, rs_);
        continue;
      }
      const Root delta = root_at(i);
      const Root gamma = root_at(j);
      const Root sum = delta + gamma;
      if (sum.height() == 0 && sum == Root{std::vector<int>(rank(), 0)}) {
        // [e_delta, e_{-delta}] = h_delta = sum_k delta_k h_k.
        for (int k = 0; k < rank(); ++k) out[k] += scale * delta.coords[k];
        continue;
      }
      const int n_const = structure_constant(delta, gamma);
      if (n_const != 0) out[e_index(sum)] += scale * n_const;
    }
  }
  return out;
}

std::vector<long long> ChevalleyAlgebra::h(int node) const {
  std::vector<long long> v(dimension(), 0);
  v[h_index(node)] = 1;
  return v;
}

std::vector<long long> ChevalleyAlgebra::e(const Root& delta) const {
  std::vector<long long> v(dimension(), 0);
  v[e_index(delta)] = 1;
  return v;
}

ChevalleyAlgebra build_chevalley(const RootSystem& rs) { return ChevalleyAlgebra(rs); }

std::vector<Root> perp_complement_weights(const ParabolicData& pd) {
  const RootSystem& rs = *pd.rs;
  const Weight lambda = to_fundamental_basis(rs.highest(), rs);

  std::vector<char> in_S(rs.rank(), 0);
  for (int node : pd.levi_nodes) in_S[node] = 1;
  for (int i = 0; i < rs.rank(); ++i) {
    const bool orthogonal = lambda.coords[i] == 0;
    if (orthogonal != static_cast<bool>(in_S[i]))
      throw NotContactParabolic("levi nodes of " + rs.kind().name() +
                                " are not the simple roots orthogonal to the highest root");
  }
  if (pd.b2 != 1)
    throw NotContactParabolic("contact parabolic must be maximal (b2 = 1), got b2 = " +
                              std::to_string(pd.b2));

  std::vector<Root> weights;
  for (const Root& beta : rs.positive_roots()) {
    if (beta == rs.highest()) continue;
    bool supported_on_S = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (beta.coords[i] != 0 && !in_S[i]) {
        supported_on_S = false;
        break;
      }
    }
    if (!supported_on_S) weights.push_back(beta);
  }
  return weights;
}

ContactFormMatrix contact_form_matrix(const ChevalleyAlgebra& alg, const ParabolicData& pd) {
  ContactFormMatrix m;
  m.weights = perp_complement_weights(pd);
  const Root& lambda = pd.rs->highest();

  const std::size_t size = m.weights.size();
  m.entries.assign(size, std::vector<long long>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (m.weights[i] + m.weights[j] == lambda)
        m.entries[i][j] = alg.structure_constant(m.weights[i], m.weights[j]);
    }
  }
  return m;
}

int exact_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        long long lhs = 0, rhs = 0, num = 0;
        if (__builtin_mul_overflow(m[rank][col], m[r][c], &lhs) ||
            __builtin_mul_overflow(m[r][col], m[rank][c], &rhs) ||
            __builtin_sub_overflow(lhs, rhs, &num))
          throw std::overflow_error("exact_rank: entry growth exceeded 64 bits");
        m[r][c] = num / prev;  // exact by Sylvester's identity
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

NondegeneracyCertificate certify_nondegenerate(const ContactFormMatrix& M) {
  NondegeneracyCertificate cert;
  cert.rank = exact_rank(M.entries);
  cert.nondegenerate = cert.rank == static_cast<int>(M.weights.size());
  return cert;
}

bool jacobi_triple_holds(const ChevalleyAlgebra& alg, int i, int j, int k) {
  const int dim = alg.dimension();
  std::vector<long long> bi(dim, 0), bj(dim, 0), bk(dim, 0);
  bi[i] = 1;
  bj[j] = 1;
  bk[k] = 1;
  const auto t1 = alg.bracket(bi, alg.bracket(bj, bk));
  const auto t2 = alg.bracket(bj, alg.bracket(bk, bi));
  const auto t3 = alg.bracket(bk, alg.bracket(bi, bj));
  for (int idx = 0; idx < dim; ++idx)
    if (t1[idx] + t2[idx] + t3[idx] != 0) return false;
  return true;
}

int jacobi_sample(const ChevalleyAlgebra& alg, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, alg.dimension() - 1);
  int violations = 0;
  for (int trial = 0; trial < count; ++trial)
    if (!jacobi_triple_holds(alg, pick(rng), pick(rng), pick(rng))) ++violations;
  return violations;
}

}  // namespace flagcontact
