#include "flagcontact/isotropic_grassmannian.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "flagcontact/errors.hpp"

namespace flagcontact {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::complex;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

VectorXcd flatten(const MatrixXcd& m) {
  return Eigen::Map<const VectorXcd>(m.data(), m.size());
}

/// Component of columns Hermitian-orthogonal to the frame span; the
/// canonical lift representative of a map into C^{2n}/V.
MatrixXcd strip_frame_component(const IsotropicPoint& p, const MatrixXcd& raw) {
  const MatrixXcd coeffs = p.frame.colPivHouseholderQr().solve(raw);
  return raw - p.frame * coeffs;
}

struct TangentSample {
  MatrixXcd xi;
  TangentVector t;
  complex<double> th;
  double membership = 0.0;
};

std::vector<TangentSample> sample_tangents(const IsotropicPoint& p, int count,
                                           std::uint64_t seed) {
  std::vector<TangentSample> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    TangentSample s;
    s.xi = random_antisymmetric(2 * p.n, derive_seed(seed, static_cast<std::uint64_t>(k)));
    s.t = so_action_tangent(p, s.xi);
    s.th = theta(p, s.t);
    s.membership = membership_residual(p, s.t);
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t pivot_by_theta(const std::vector<TangentSample>& samples) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < samples.size(); ++k)
    if (std::abs(samples[k].th) > std::abs(samples[best].th)) best = k;
  return best;
}

}  // namespace

std::complex<double> dot_b(const VectorXcd& x, const VectorXcd& y) {
  return (x.transpose() * y)(0, 0);
}

IsotropicPoint base_point(int n) {
  if (n < 4) throw InvalidN("ambient dimension 2n requires n >= 4, got n = " + std::to_string(n));
  IsotropicPoint p;
  p.n = n;
  p.frame = MatrixXcd::Zero(2 * n, 2);
  const complex<double> i(0.0, 1.0);
  p.frame(0, 0) = 1.0;
  p.frame(1, 0) = i;
  p.frame(2, 1) = 1.0;
  p.frame(3, 1) = i;
  return p;
}

void validate_point(const IsotropicPoint& p) {
  if (p.frame.rows() != 2 * p.n || p.frame.cols() != 2)
    throw InvalidFrame("frame must be 2n x 2");
  const MatrixXcd gram = p.frame.transpose() * p.frame;
  const double scale = std::max(1.0, p.frame.squaredNorm());
  if (gram.cwiseAbs().maxCoeff() > kIsotropyTol * scale)
    throw InvalidFrame("frame columns do not span a B-isotropic plane");
  Eigen::JacobiSVD<MatrixXcd> svd(p.frame);
  if (svd.singularValues()(1) < kRankRelTol * svd.singularValues()(0))
    throw InvalidFrame("frame is rank deficient");
}

TangentVector so_action_tangent(const IsotropicPoint& p, const MatrixXcd& xi) {
  if (xi.rows() != 2 * p.n || xi.cols() != 2 * p.n)
    throw NotAntisymmetric("xi must be 2n x 2n");
  const double asym = (xi + xi.transpose()).cwiseAbs().maxCoeff();
  if (asym > kIsotropyTol)
    throw NotAntisymmetric("xi + xi^T deviates from zero by " + std::to_string(asym));
  return TangentVector{strip_frame_component(p, xi * p.frame)};
}

double membership_residual(const IsotropicPoint& p, const TangentVector& t) {
  const MatrixXcd g = t.phi.transpose() * p.frame;
  return (g + g.transpose()).cwiseAbs().maxCoeff();
}

std::complex<double> theta(const IsotropicPoint& p, const TangentVector& t) {
  const MatrixXcd g = t.phi.transpose() * p.frame;
  return (g(0, 1) - g(1, 0)) / 2.0;
}

DimensionAudit dimension_audit(const IsotropicPoint& p, int samples, std::uint64_t seed) {
  if (samples < 4 * p.n)
    throw std::invalid_argument("dimension_audit needs samples >= 4n");
  const auto sampled = sample_tangents(p, samples, seed);

  DimensionAudit audit;
  MatrixXcd span_t(4 * p.n, samples);
  for (int k = 0; k < samples; ++k) {
    span_t.col(k) = flatten(sampled[k].t.phi);
    audit.max_membership = std::max(audit.max_membership, sampled[k].membership);
  }
  audit.dimT = numerical_rank(span_t);
  if (numerical_rank(span_t.leftCols(samples - 1)) < audit.dimT)
    throw InsufficientSamples("tangent-span rank still growing at the last sample");

  // ker(theta) directions: correct every sample against the one with the
  // largest |theta|; theta is linear, so each corrected vector lies in E.
  const std::size_t pivot = pivot_by_theta(sampled);
  const complex<double> theta_pivot = sampled[pivot].th;
  const VectorXcd pivot_flat = flatten(sampled[pivot].t.phi);
  MatrixXcd span_e(4 * p.n, samples - 1);
  int col = 0;
  for (int k = 0; k < samples; ++k) {
    if (static_cast<std::size_t>(k) == pivot) continue;
    span_e.col(col++) = flatten(sampled[k].t.phi) - (sampled[k].th / theta_pivot) * pivot_flat;
  }
  audit.dimE = numerical_rank(span_e);
  if (numerical_rank(span_e.leftCols(samples - 2)) < audit.dimE)
    throw InsufficientSamples("contact-span rank still growing at the last sample");
  return audit;
}

int contact_rank(const IsotropicPoint& p, std::uint64_t seed) {
  const int pool = 4 * p.n + 8;
  const auto sampled = sample_tangents(p, pool, seed);
  const std::size_t pivot = pivot_by_theta(sampled);
  const complex<double> theta_pivot = sampled[pivot].th;

  // Greedy basis of E from theta-corrected generators; the correction
  // happens at the Lie-algebra level so that brackets of the generators
  // stay available.
  std::vector<MatrixXcd> generators;
  MatrixXcd basis(4 * p.n, pool);
  int count = 0;
  bool last_accepted = false;
  for (int k = 0; k < pool; ++k) {
    if (static_cast<std::size_t>(k) == pivot) continue;
    const MatrixXcd eta = sampled[k].xi - (sampled[k].th / theta_pivot) * sampled[pivot].xi;
    VectorXcd v = flatten(so_action_tangent(p, eta).phi);
    const double full = v.norm();
    VectorXcd w = v - basis.leftCols(count) * (basis.leftCols(count).adjoint() * v);
    last_accepted = false;
    if (w.norm() > kRankRelTol * full) {
      basis.col(count++) = w / w.norm();
      generators.push_back(eta);
      last_accepted = true;
    }
  }
  if (last_accepted || generators.empty())
    throw BasisNotFound("contact-distribution basis did not stabilize over the sample pool");

  const int dim = static_cast<int>(generators.size());
  MatrixXcd omega(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const MatrixXcd comm = generators[i] * generators[j] - generators[j] * generators[i];
      omega(i, j) = theta(p, so_action_tangent(p, comm));
    }
  }
  return numerical_rank(omega);
}

double invariance_residual(const IsotropicPoint& p, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("invariance_residual needs trials >= 1");
  double max_res = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t s0 = derive_seed(seed, 3 * static_cast<std::uint64_t>(trial));
    const std::uint64_t s1 = derive_seed(seed, 3 * static_cast<std::uint64_t>(trial) + 1);
    const std::uint64_t s2 = derive_seed(seed, 3 * static_cast<std::uint64_t>(trial) + 2);

    // E-vector at p from two samples, corrected against the larger theta.
    const MatrixXcd xi_a = random_antisymmetric(2 * p.n, s0);
    const MatrixXcd xi_b = random_antisymmetric(2 * p.n, s1);
    const complex<double> th_a = theta(p, so_action_tangent(p, xi_a));
    const complex<double> th_b = theta(p, so_action_tangent(p, xi_b));
    const bool a_pivot = std::abs(th_a) >= std::abs(th_b);
    const MatrixXcd eta = a_pivot ? MatrixXcd(xi_b - (th_b / th_a) * xi_a)
                                  : MatrixXcd(xi_a - (th_a / th_b) * xi_b);
    MatrixXcd phi = so_action_tangent(p, eta).phi;
    phi /= phi.norm();

    const MatrixXcd g = matrix_exponential(random_antisymmetric(2 * p.n, s2));
    const IsotropicPoint q = translate(p, g);  // validates isotropy of g.V

    // Push forward g . phi . g^{-1}; with image frame columns g v_a / c_a
    // the lifted images are g phi_a / c_a.
    MatrixXcd pushed(2 * p.n, 2);
    for (int a = 0; a < 2; ++a)
      pushed.col(a) = (g * phi.col(a)) / (g * p.frame.col(a)).norm();
    pushed /= pushed.norm();
    const TangentVector image{strip_frame_component(q, pushed)};
    max_res = std::max(max_res, std::abs(theta(q, image)));
  }
  return max_res;
}

Eigen::MatrixXcd random_antisymmetric(int size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixXcd a(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      a(i, j) = complex<double>(re, im);
    }
  }
  return (a - MatrixXcd(a.transpose())) * (0.5 / size);
}

Eigen::MatrixXcd matrix_exponential(const MatrixXcd& m) {
  const int size = static_cast<int>(m.rows());
  int squarings = 0;
  double norm = m.norm();
  while (norm > 0.5 && squarings < 64) {
    norm /= 2.0;
    ++squarings;
  }
  const MatrixXcd x = m / std::pow(2.0, squarings);
  MatrixXcd term = MatrixXcd::Identity(size, size);
  MatrixXcd sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
    if (term.norm() < 1e-18 * sum.norm()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Eigen::MatrixXcd block_rotation(const std::vector<double>& angles) {
  const int n = static_cast<int>(angles.size());
  MatrixXcd r = MatrixXcd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    const double c = std::cos(angles[k]);
    const double s = std::sin(angles[k]);
    r(2 * k, 2 * k) = c;
    r(2 * k, 2 * k + 1) = -s;
    r(2 * k + 1, 2 * k) = s;
    r(2 * k + 1, 2 * k + 1) = c;
  }
  return r;
}

IsotropicPoint translate(const IsotropicPoint& p, const MatrixXcd& g) {
  IsotropicPoint q;
  q.n = p.n;
  q.frame = g * p.frame;
  for (int a = 0; a < 2; ++a) q.frame.col(a) /= q.frame.col(a).norm();
  validate_point(q);
  return q;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x9E3779B97F4A7C15ULL));
}

int numerical_rank(const MatrixXcd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

GrassmannianAudit run_grassmannian_audit(int n, int trials, std::uint64_t seed) {
  const IsotropicPoint p = base_point(n);
  validate_point(p);

  GrassmannianAudit audit;
  audit.n = n;
  audit.seed = seed;
  audit.trials = trials;

  const DimensionAudit dims = dimension_audit(p, 4 * n + 8, seed);
  audit.dimT = dims.dimT;
  audit.dimE = dims.dimE;
  audit.contact_rank = contact_rank(p, derive_seed(seed, 1001));
  const double inv = invariance_residual(p, trials, derive_seed(seed, 2002));
  audit.max_residual = std::max(dims.max_membership, inv);
  return audit;
}

}  // namespace flagcontact
