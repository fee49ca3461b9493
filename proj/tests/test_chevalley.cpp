#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

#include "flagcontact/chevalley.hpp"
#include "flagcontact/classifier.hpp"
#include "flagcontact/errors.hpp"

using namespace flagcontact;

namespace {

std::vector<int> complement_of(int node, int rank) {
  std::vector<int> s;
  for (int i = 0; i < rank; ++i)
    if (i != node) s.push_back(i);
  return s;
}

std::vector<long long> scaled(std::vector<long long> v, long long c) {
  for (long long& x : v) x *= c;
  return v;
}

bool is_zero(const std::vector<long long>& v) {
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

/// Coordinates of h_delta = sum_k delta_k h_k.
std::vector<long long> coroot_vector(const ChevalleyAlgebra& alg, const Root& delta) {
  std::vector<long long> v(alg.dimension(), 0);
  for (int k = 0; k < alg.rank(); ++k) v[k] = delta.coords[k];
  return v;
}

ParabolicData contact_parabolic(const RootSystem& rs) {
  const auto non_orth = non_orthogonal_simple_roots(rs);
  REQUIRE(non_orth.size() == 1);
  return build_parabolic(rs, complement_of(non_orth[0], rs.rank()));
}

std::vector<Root> all_roots(const RootSystem& rs) {
  std::vector<Root> roots;
  for (const Root& beta : rs.positive_roots()) {
    roots.push_back(beta);
    roots.push_back(-beta);
  }
  return roots;
}

}  // namespace

TEST_CASE("sl2 relations for every simple root") {
  for (const char* name : {"A1", "A3", "D4", "D5", "E6"}) {
    const RootSystem rs = build_root_system(parse_kind(name));
    const ChevalleyAlgebra alg = build_chevalley(rs);
    for (int i = 0; i < rs.rank(); ++i) {
      CAPTURE(name);
      CAPTURE(i);
      const Root alpha = rs.simple_root(i);
      const auto e = alg.e(alpha);
      const auto f = alg.e(-alpha);
      CHECK(alg.bracket(e, f) == alg.h(i));
      CHECK(alg.bracket(alg.h(i), e) == scaled(e, 2));
      CHECK(alg.bracket(alg.h(i), f) == scaled(f, -2));
    }
  }
}

TEST_CASE("basis indexing") {
  const RootSystem rs = build_root_system(parse_kind("D4"));
  const ChevalleyAlgebra alg = build_chevalley(rs);
  CHECK(alg.dimension() == 4 + 2 * 12);
  CHECK(alg.rank() == 4);

  // h block first, then positives in enumeration order, then negatives.
  for (int i = 0; i < 4; ++i) {
    CHECK(alg.h_index(i) == i);
    CHECK_FALSE(alg.is_root_index(i));
  }
  for (int p = 0; p < 12; ++p) {
    const Root beta = rs.positive_roots()[p];
    CHECK(alg.e_index(beta) == 4 + p);
    CHECK(alg.e_index(-beta) == 4 + 12 + p);
    CHECK(alg.root_at(4 + p) == beta);
    CHECK(alg.root_at(4 + 12 + p) == -beta);
  }

  CHECK_THROWS_AS(alg.h_index(4), InvalidNode);
  CHECK_THROWS_AS(alg.e_index(Root{{1, 1, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(alg.root_at(0), std::invalid_argument);
  CHECK_THROWS_AS(alg.root_at(4 + 24), std::invalid_argument);
}

TEST_CASE("structure constants are antisymmetric unit integers") {
  for (const char* name : {"A2", "A4", "D4", "D6", "E6", "E7", "E8"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(parse_kind(name));
    const ChevalleyAlgebra alg = build_chevalley(rs);
    const auto roots = all_roots(rs);
    for (const Root& delta : roots) {
      for (const Root& gamma : roots) {
        const int n = alg.structure_constant(delta, gamma);
        const Root sum = delta + gamma;
        const bool sum_root = sum.height() >= 0 ? rs.is_positive_root(sum)
                                                : rs.is_positive_root(-sum);
        if (sum_root) {
          if (std::abs(n) != 1 || n != -alg.structure_constant(gamma, delta)) {
            CAPTURE(delta);
            CAPTURE(gamma);
            CHECK(std::abs(n) == 1);
            CHECK(n == -alg.structure_constant(gamma, delta));
          }
        } else {
          if (n != 0) {
            CAPTURE(delta);
            CAPTURE(gamma);
            CHECK(n == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("bracket of opposite root vectors is the coroot") {
  for (const char* name : {"D4", "E6"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(parse_kind(name));
    const ChevalleyAlgebra alg = build_chevalley(rs);
    for (const Root& delta : all_roots(rs)) {
      CAPTURE(delta);
      CHECK(alg.bracket(alg.e(delta), alg.e(-delta)) == coroot_vector(alg, delta));
    }
  }
}

TEST_CASE("Cartan action reproduces the inner product") {
  const RootSystem rs = build_root_system(parse_kind("D4"));
  const ChevalleyAlgebra alg = build_chevalley(rs);
  for (const Root& beta : rs.positive_roots()) {
    for (const Root& gamma : all_roots(rs)) {
      const auto lhs = alg.bracket(coroot_vector(alg, beta), alg.e(gamma));
      CHECK(lhs == scaled(alg.e(gamma), inner_product(beta, gamma, rs)));
    }
  }
}

TEST_CASE("bracket is alternating and bilinear on mixed elements") {
  const RootSystem rs = build_root_system(parse_kind("D4"));
  const ChevalleyAlgebra alg = build_chevalley(rs);
  const int dim = alg.dimension();

  std::uint64_t state = 12345;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long long>((state >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> x(dim), y(dim);
    for (int i = 0; i < dim; ++i) {
      x[i] = next();
      y[i] = next();
    }
    CHECK(is_zero(alg.bracket(x, x)));
    const auto xy = alg.bracket(x, y);
    auto yx = alg.bracket(y, x);
    for (long long& v : yx) v = -v;
    CHECK(xy == yx);
  }

  CHECK_THROWS_AS(alg.bracket(std::vector<long long>(dim - 1, 0),
                              std::vector<long long>(dim, 0)),
                  std::invalid_argument);
}

TEST_CASE("Jacobi identity, exhaustive on small types") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(parse_kind(name));
    const ChevalleyAlgebra alg = build_chevalley(rs);
    const int dim = alg.dimension();
    int violations = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j)
        for (int k = j; k < dim; ++k)
          if (!jacobi_triple_holds(alg, i, j, k)) ++violations;
    CHECK(violations == 0);
  }
}

TEST_CASE("Jacobi identity, sampled on E7 and E8") {
  for (const char* name : {"E7", "E8"}) {
    CAPTURE(name);
    const ChevalleyAlgebra alg = build_chevalley(build_root_system(parse_kind(name)));
    CHECK(jacobi_sample(alg, 20000, 0x1234ABCD) == 0);
  }
}

TEST_CASE("weights transverse to the contact hyperplane") {
  const RootSystem a1 = build_root_system(parse_kind("A1"));
  CHECK(perp_complement_weights(contact_parabolic(a1)).empty());

  const RootSystem d4 = build_root_system(parse_kind("D4"));
  CHECK(perp_complement_weights(contact_parabolic(d4)).size() == 8);

  const RootSystem e6 = build_root_system(parse_kind("E6"));
  CHECK(perp_complement_weights(contact_parabolic(e6)).size() == 20);

  for (const char* name : {"A1", "D4", "D5", "D6", "E6", "E7", "E8"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(parse_kind(name));
    const ContactReport report = classify(rs.kind());
    REQUIRE(report.verdict == Verdict::Exists);
    const auto weights = perp_complement_weights(contact_parabolic(rs));
    CHECK(static_cast<int>(weights.size()) == *report.dim - 1);

    // beta -> lambda - beta is a fixed-point-free involution of the set.
    const std::set<Root> pool(weights.begin(), weights.end());
    Root total{std::vector<int>(rs.rank(), 0)};
    for (const Root& beta : weights) {
      const Root partner = rs.highest() + (-beta);
      CHECK(pool.count(partner) == 1);
      CHECK_FALSE(partner == beta);
      total = total + beta;
    }
    // The pairs sum to lambda, so the whole set sums to n lambda.
    Root expected = rs.highest();
    for (int& c : expected.coords) c *= *report.n;
    CHECK(total == expected);
  }
}

TEST_CASE("perp weights reject non-contact parabolics") {
  const RootSystem d4 = build_root_system(parse_kind("D4"));
  CHECK_THROWS_AS(perp_complement_weights(build_parabolic(d4, complement_of(0, 4))),
                  NotContactParabolic);
  CHECK_THROWS_AS(perp_complement_weights(build_parabolic(d4, {0, 2})),
                  NotContactParabolic);

  // A3: the simple roots orthogonal to the highest root leave b2 = 2.
  const RootSystem a3 = build_root_system(parse_kind("A3"));
  CHECK_THROWS_AS(perp_complement_weights(build_parabolic(a3, {1})), NotContactParabolic);
}

TEST_CASE("contact form matrix shape") {
  const RootSystem a1 = build_root_system(parse_kind("A1"));
  const ChevalleyAlgebra alg_a1 = build_chevalley(a1);
  const ContactFormMatrix m0 = contact_form_matrix(alg_a1, contact_parabolic(a1));
  CHECK(m0.weights.empty());
  CHECK(m0.entries.empty());
  const auto cert0 = certify_nondegenerate(m0);
  CHECK(cert0.nondegenerate);
  CHECK(cert0.rank == 0);

  const RootSystem d4 = build_root_system(parse_kind("D4"));
  const ChevalleyAlgebra alg = build_chevalley(d4);
  const ContactFormMatrix m = contact_form_matrix(alg, contact_parabolic(d4));
  REQUIRE(m.weights.size() == 8);
  REQUIRE(m.entries.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      CHECK(m.entries[i][j] == -m.entries[j][i]);
      if (m.entries[i][j] != 0) {
        ++nonzero;
        CHECK(std::abs(m.entries[i][j]) == 1);
        CHECK(m.weights[i] + m.weights[j] == d4.highest());
      }
    }
    // One partner per weight: the form pairs beta with lambda - beta only.
    CHECK(nonzero == 1);
  }
}

TEST_CASE("contact form is nondegenerate for every contact type") {
  for (const char* name : {"A1", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(parse_kind(name));
    const ChevalleyAlgebra alg = build_chevalley(rs);
    const ContactFormMatrix m = contact_form_matrix(alg, contact_parabolic(rs));
    const int size = static_cast<int>(m.weights.size());
    const auto cert = certify_nondegenerate(m);
    CHECK(cert.nondegenerate);
    CHECK(cert.rank == size);
    CHECK(size == *classify(rs.kind()).dim - 1);
  }
}

TEST_CASE("degenerate mutations are caught") {
  const RootSystem d4 = build_root_system(parse_kind("D4"));
  const ChevalleyAlgebra alg = build_chevalley(d4);
  ContactFormMatrix m = contact_form_matrix(alg, contact_parabolic(d4));

  std::size_t j0 = 0;
  while (m.entries[0][j0] == 0) ++j0;
  m.entries[0][j0] = 0;
  m.entries[j0][0] = 0;

  const auto cert = certify_nondegenerate(m);
  CHECK_FALSE(cert.nondegenerate);
  CHECK(cert.rank == 6);
}

TEST_CASE("exact integer rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{0, 1}, {0, 2}}) == 1);
  CHECK(exact_rank({{2, 3, 1}, {4, 7, 5}, {6, 10, 6}}) == 2);
  CHECK(exact_rank({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}}) == 3);
  CHECK(exact_rank({{1, 0, 0}, {0, 1, 0}}) == 2);
  CHECK(exact_rank({{1}, {2}, {3}}) == 1);
  CHECK(exact_rank({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}) == 4);
}
