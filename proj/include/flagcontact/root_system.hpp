#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace flagcontact {

enum class Series { A, D, E };

char series_letter(Series series);

/// Simply-laced Cartan type. Constructible ranks: A >= 1, D >= 4,
/// E in {6, 7, 8}.
struct CartanKind {
  Series series;
  int rank;

  std::string name() const;

  friend auto operator<=>(const CartanKind&, const CartanKind&) = default;
};

bool is_valid_kind(Series series, int rank);

/// Parses "A3", "d5", "E8". Throws InvalidKind on malformed text or
/// out-of-range rank.
CartanKind parse_kind(const std::string& text);

/// Vector in the simple-root basis. Enumerated roots have coords all >= 0
/// or all <= 0, never mixed.
struct Root {
  std::vector<int> coords;

  int height() const;

  friend auto operator<=>(const Root&, const Root&) = default;
};

Root operator+(const Root& x, const Root& y);
Root operator-(const Root& x, const Root& y);
Root operator-(const Root& x);
std::ostream& operator<<(std::ostream& os, const Root& r);

/// Vector in the fundamental-weight basis {omega_1, ..., omega_rank}.
struct Weight {
  std::vector<int> coords;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& x, const Weight& y);
Weight operator-(const Weight& x, const Weight& y);
Weight operator*(int c, const Weight& w);
std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Positive roots of a simply-laced root system, enumerated by root strings
/// over the Cartan matrix. The list is ordered by height, then
/// lexicographically by coords, so the highest root is the last entry.
/// Immutable after construction; concurrent reads are safe.
class RootSystem {
 public:
  explicit RootSystem(CartanKind kind);

  const CartanKind& kind() const { return kind_; }
  int rank() const { return kind_.rank; }

  /// Symmetric matrix with 2 on the diagonal and 0/-1 off it; doubles as
  /// the Gram matrix in the (beta, beta) = 2 normalization.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& highest() const { return positive_roots_.back(); }

  Root simple_root(int node) const;

  bool is_positive_root(const Root& r) const;
  std::optional<std::size_t> index_of(const Root& r) const;

 private:
  CartanKind kind_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_roots_;
  std::map<std::vector<int>, std::size_t> index_;
};

RootSystem build_root_system(CartanKind kind);
RootSystem build_root_system(const std::string& kind_text);

/// delta(h_beta) for delta in the fundamental basis: coords[beta_index].
int pairing(const Weight& delta, int beta_index, const RootSystem& rs);

/// <r, alpha_i^vee> = (cartan * r.coords)[beta_index], exact.
int pairing(const Root& r, int beta_index, const RootSystem& rs);

/// Change of basis simple roots -> fundamental weights: cartan * coords.
Weight to_fundamental_basis(const Root& r, const RootSystem& rs);

/// (x, y) = x^T * cartan * y in the normalization (beta, beta) = 2.
int inner_product(const Root& x, const Root& y, const RootSystem& rs);

}  // namespace flagcontact
