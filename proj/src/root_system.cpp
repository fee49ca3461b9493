#include "flagcontact/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flagcontact/errors.hpp"

namespace flagcontact {

namespace {

// Resource guard only; every mathematically valid rank below it works.
constexpr int kMaxRank = 512;

void print_coords(std::ostream& os, const std::vector<int>& coords) {
  os << '[';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) os << ", ";
    os << coords[i];
  }
  os << ']';
}

std::vector<std::vector<int>> cartan_matrix(CartanKind kind) {
  const int n = kind.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto join = [&a](int i, int j) {
    a[i][j] = -1;
    a[j][i] = -1;
  };
  switch (kind.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) join(i, i + 1);
      break;
    case Series::D:
      // Bourbaki: chain alpha_1 .. alpha_{n-2}, fork to alpha_{n-1}, alpha_n.
      for (int i = 0; i + 1 < n - 2; ++i) join(i, i + 1);
      join(n - 3, n - 2);
      join(n - 3, n - 1);
      break;
    case Series::E:
      // Bourbaki: chain alpha_1, alpha_3, alpha_4, ..., alpha_n with
      // alpha_2 attached to alpha_4.
      join(0, 2);
      join(1, 3);
      for (int i = 2; i + 1 < n; ++i) join(i, i + 1);
      break;
  }
  return a;
}

}  // namespace

char series_letter(Series series) {
  switch (series) {
    case Series::A: return 'A';
    case Series::D: return 'D';
    case Series::E: return 'E';
  }
  return '?';
}

std::string CartanKind::name() const {
  return series_letter(series) + std::to_string(rank);
}

bool is_valid_kind(Series series, int rank) {
  if (rank > kMaxRank) return false;
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::D: return rank >= 4;
    case Series::E: return rank >= 6 && rank <= 8;
  }
  return false;
}

CartanKind parse_kind(const std::string& text) {
  if (text.size() < 2) throw InvalidKind("kind must look like A3, D5, E8: '" + text + "'");
  Series series;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': series = Series::A; break;
    case 'D': series = Series::D; break;
    case 'E': series = Series::E; break;
    default:
      throw InvalidKind("unknown series '" + text.substr(0, 1) + "' (expected A, D, or E)");
  }
  long rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InvalidKind("rank must be a positive integer: '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
    if (rank > kMaxRank) throw InvalidKind("rank out of supported range: '" + text + "'");
  }
  if (!is_valid_kind(series, static_cast<int>(rank)))
    throw InvalidKind("no simply-laced system " + text + " (A: rank >= 1, D: rank >= 4, E: 6..8)");
  return CartanKind{series, static_cast<int>(rank)};
}

int Root::height() const {
  return std::accumulate(coords.begin(), coords.end(), 0);
}

Root operator+(const Root& x, const Root& y) {
  Root r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
  return r;
}

Root operator-(const Root& x, const Root& y) {
  Root r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= y.coords[i];
  return r;
}

Root operator-(const Root& x) {
  Root r = x;
  for (int& c : r.coords) c = -c;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Root& r) {
  print_coords(os, r.coords);
  return os;
}

Weight operator+(const Weight& x, const Weight& y) {
  Weight w = x;
  for (std::size_t i = 0; i < w.coords.size(); ++i) w.coords[i] += y.coords[i];
  return w;
}

Weight operator-(const Weight& x, const Weight& y) {
  Weight w = x;
  for (std::size_t i = 0; i < w.coords.size(); ++i) w.coords[i] -= y.coords[i];
  return w;
}

Weight operator*(int c, const Weight& w) {
  Weight scaled = w;
  for (int& v : scaled.coords) v *= c;
  return scaled;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  print_coords(os, w.coords);
  return os;
}

RootSystem::RootSystem(CartanKind kind) : kind_(kind) {
  if (!is_valid_kind(kind.series, kind.rank))
    throw InvalidKind("no simply-laced system " + kind.name());
  cartan_ = cartan_matrix(kind);

  const int n = kind.rank;
  std::map<std::vector<int>, int> found;  // coords -> 1, membership only
  std::vector<Root> level;
  for (int i = 0; i < n; ++i) {
    Root alpha{std::vector<int>(n, 0)};
    alpha.coords[i] = 1;
    level.push_back(alpha);
    found.emplace(alpha.coords, 1);
  }
  std::sort(level.begin(), level.end());

  // Breadth-first by height. beta + alpha_i is a root iff the root string
  // through beta in direction alpha_i extends upward: q = p - <beta, alpha_i^vee>
  // with p the depth of the string below beta; all roots below the current
  // height are already enumerated, so p is computable from `found`.
  while (!level.empty()) {
    for (const Root& r : level) positive_roots_.push_back(r);
    std::vector<Root> next;
    std::map<std::vector<int>, int> seen_next;
    for (const Root& beta : level) {
      for (int i = 0; i < n; ++i) {
        Root cand = beta;
        cand.coords[i] += 1;
        if (seen_next.count(cand.coords)) continue;
        int p = 0;
        Root down = beta;
        while (true) {
          down.coords[i] -= 1;
          if (!found.count(down.coords)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += cartan_[i][j] * beta.coords[j];
        if (p - pair >= 1) {
          seen_next.emplace(cand.coords, 1);
          next.push_back(cand);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (const Root& r : next) found.emplace(r.coords, 1);
    level = std::move(next);
  }

  for (std::size_t i = 0; i < positive_roots_.size(); ++i)
    index_.emplace(positive_roots_[i].coords, i);
}

Root RootSystem::simple_root(int node) const {
  if (node < 0 || node >= rank()) throw InvalidNode("simple root index out of range");
  Root alpha{std::vector<int>(rank(), 0)};
  alpha.coords[node] = 1;
  return alpha;
}

bool RootSystem::is_positive_root(const Root& r) const {
  return index_.count(r.coords) > 0;
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r.coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootSystem build_root_system(CartanKind kind) { return RootSystem(kind); }

RootSystem build_root_system(const std::string& kind_text) {
  return RootSystem(parse_kind(kind_text));
}

int pairing(const Weight& delta, int beta_index, const RootSystem& rs) {
  if (beta_index < 0 || beta_index >= rs.rank())
    throw InvalidNode("pairing index out of range");
  return delta.coords[beta_index];
}

int pairing(const Root& r, int beta_index, const RootSystem& rs) {
  if (beta_index < 0 || beta_index >= rs.rank())
    throw InvalidNode("pairing index out of range");
  const auto& a = rs.cartan();
  int value = 0;
  for (int j = 0; j < rs.rank(); ++j) value += a[beta_index][j] * r.coords[j];
  return value;
}

Weight to_fundamental_basis(const Root& r, const RootSystem& rs) {
  Weight w{std::vector<int>(rs.rank(), 0)};
  for (int i = 0; i < rs.rank(); ++i) w.coords[i] = pairing(r, i, rs);
  return w;
}

int inner_product(const Root& x, const Root& y, const RootSystem& rs) {
  const auto& a = rs.cartan();
  int value = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < rs.rank(); ++j) value += x.coords[i] * a[i][j] * y.coords[j];
  }
  return value;
}

}  // namespace flagcontact
