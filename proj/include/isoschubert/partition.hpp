#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isoschubert {

// Error categories. All derive from std::exception subclasses so callers can
// catch broadly; the CLI maps them to exit codes.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ContextError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A partition stored as its trimmed, weakly decreasing list of positive
/// parts. The empty partition is the unit index.
///
/// Ordering is the canonical enumeration order: weight ascending, then
/// lexicographically descending. All sparse maps keyed by partitions use it,
/// which makes printed output deterministic.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped. Throws ValidationError unless the input is
  /// weakly decreasing with no negative entries.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  /// 0-based part access; returns 0 past the end.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  int first() const { return (*this)[0]; }

  /// (λ_2, λ_3, ...); empty for ∅ and single rows.
  Partition tail() const;
  /// Number of parts strictly greater than k.
  int count_greater(int k) const;
  /// Column heights: entry c-1 is the number of boxes in column c.
  std::vector<int> conjugate() const;
  bool contains(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b);

 private:
  std::vector<int> parts_;
};

/// Total predicate: weakly decreasing, nonnegative, with parts > k distinct.
/// Zeros at the end are ignored; negative entries give false.
bool is_k_strict(std::span<const int> parts, int k);
inline bool is_k_strict(const Partition& p, int k) {
  return is_k_strict(p.parts(), k);
}

/// Partition from column heights (inverse of Partition::conjugate).
Partition from_columns(std::span<const int> heights);

enum class Family { IG, OG };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// IG(n-k, 2n) or OG(n-k, 2n+1).
class SpaceContext {
 public:
  /// Throws ContextError unless n > k >= 0.
  SpaceContext(Family family, int n, int k);

  Family family() const { return family_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int rows() const { return n_ - k_; }
  int cols() const { return n_ + k_; }
  int max_special() const { return n_ + k_; }
  /// Degree of q: n+k+1 for IG, n+k for OG.
  int q_degree() const { return family_ == Family::IG ? n_ + k_ + 1 : n_ + k_; }
  /// Membership in P(k,n).
  bool admits(const Partition& lambda) const;
  void require(const Partition& lambda) const;

  std::string to_string() const;
  friend bool operator==(const SpaceContext&, const SpaceContext&) = default;

 private:
  Family family_;
  int n_;
  int k_;
};

/// P(k,n) in canonical order. Throws ContextError for invalid (k,n).
std::vector<Partition> enumerate_P(int k, int n);

/// All k-strict partitions of the given weight, canonical order.
std::vector<Partition> k_strict_of_weight(int weight, int k);

/// Box [row, col] of a Young diagram, both 1-based.
struct Box {
  int row;
  int col;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline int k_diagonal(const Box& b, int k) {
  const int d = b.col - k - 1;
  return (d < 0 ? -d : d) + b.row;
}

inline bool k_related(const Box& a, const Box& b, int k) {
  return k_diagonal(a, k) == k_diagonal(b, k);
}

/// The pairs (i,j), 1 <= i < j <= ℓ(λ), split by whether
/// λ_i + λ_j > 2k + j - i (pairs_c) or not (pairs_a), with the per-row counts.
struct IndexData {
  std::vector<std::pair<int, int>> pairs_a;
  std::vector<std::pair<int, int>> pairs_c;
  std::vector<int> a;
  std::vector<int> c;
};

inline bool is_c_pair(const Partition& lambda, int i, int j, int k) {
  return lambda[i - 1] + lambda[j - 1] > 2 * k + j - i;
}

IndexData index_data(const Partition& lambda, int k);

/// p_j(λ) for IG, p̄_j(λ) for OG, j = 1..ℓ(λ). Throws DomainError when
/// λ is not in P(k,n).
std::vector<int> rank_function(const Partition& lambda, const SpaceContext& ctx);

}  // namespace isoschubert
