#include "isoschubert/partition.hpp"

#include <algorithm>
#include <numeric>

namespace isoschubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw ValidationError("not a partition: " + to_string());
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::tail() const {
  if (parts_.size() <= 1) return {};
  Partition t;
  t.parts_.assign(parts_.begin() + 1, parts_.end());
  return t;
}

int Partition::count_greater(int k) const {
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [k](int x) { return x > k; }));
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> cols(static_cast<std::size_t>(first()), 0);
  for (int part : parts_)
    for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
  return cols;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other[i] > (*this)[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto w = a.weight() <=> b.weight(); w != 0) return w;
  // lexicographically descending
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                a.parts_.begin(), a.parts_.end());
}

bool is_k_strict(std::span<const int> parts, int k) {
  std::size_t len = parts.size();
  while (len > 0 && parts[len - 1] == 0) --len;
  for (std::size_t i = 0; i < len; ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0) {
      if (parts[i] > parts[i - 1]) return false;
      if (parts[i] == parts[i - 1] && parts[i] > k) return false;
    }
  }
  return true;
}

Partition from_columns(std::span<const int> heights) {
  std::vector<int> parts;
  const int rows = heights.empty() ? 0 : heights.front();
  parts.reserve(static_cast<std::size_t>(rows));
  for (int r = 1; r <= rows; ++r) {
    int len = 0;
    while (len < static_cast<int>(heights.size()) &&
           heights[static_cast<std::size_t>(len)] >= r)
      ++len;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

std::string to_string(Family f) { return f == Family::IG ? "IG" : "OG"; }

Family family_from_string(const std::string& s) {
  if (s == "IG") return Family::IG;
  if (s == "OG") return Family::OG;
  throw ContextError("unknown family '" + s + "' (expected IG or OG)");
}

SpaceContext::SpaceContext(Family family, int n, int k)
    : family_(family), n_(n), k_(k) {
  if (k < 0 || n <= k)
    throw ContextError("need n > k >= 0, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
}

bool SpaceContext::admits(const Partition& lambda) const {
  return lambda.length() <= rows() && lambda.first() <= cols() &&
         is_k_strict(lambda, k_);
}

void SpaceContext::require(const Partition& lambda) const {
  if (!admits(lambda))
    throw DomainError(lambda.to_string() + " is not in P(" + std::to_string(k_) +
                      "," + std::to_string(n_) + ")");
}

std::string SpaceContext::to_string() const {
  return isoschubert::to_string(family_) + "(n=" + std::to_string(n_) +
         ",k=" + std::to_string(k_) + ")";
}

namespace {

// Partitions with at most max_len parts, each at most max_part, parts > k
// distinct; appended in generation order.
void fill_k_strict(std::vector<int>& prefix, int max_len, int max_part, int k,
                   int budget, bool exact, std::vector<Partition>& out) {
  if (!exact || budget == 0) out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == max_len) return;
  int hi = std::min(max_part, budget);
  if (!prefix.empty()) {
    const int last = prefix.back();
    hi = std::min(hi, last > k ? last - 1 : last);
  }
  for (int part = hi; part >= 1; --part) {
    prefix.push_back(part);
    fill_k_strict(prefix, max_len, max_part, k, budget - part, exact, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_P(int k, int n) {
  const SpaceContext ctx(Family::IG, n, k);
  std::vector<Partition> out;
  std::vector<int> prefix;
  const int budget = ctx.rows() * ctx.cols();
  fill_k_strict(prefix, ctx.rows(), ctx.cols(), k, budget, false, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> k_strict_of_weight(int weight, int k) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  fill_k_strict(prefix, weight, weight, k, weight, true, out);
  std::sort(out.begin(), out.end());
  return out;
}

IndexData index_data(const Partition& lambda, int k) {
  if (!is_k_strict(lambda, k))
    throw ValidationError(lambda.to_string() + " is not " + std::to_string(k) +
                          "-strict");
  const int len = lambda.length();
  IndexData d;
  d.a.assign(static_cast<std::size_t>(len), 0);
  d.c.assign(static_cast<std::size_t>(len), 0);
  for (int i = 1; i <= len; ++i) {
    for (int j = i + 1; j <= len; ++j) {
      if (is_c_pair(lambda, i, j, k)) {
        d.pairs_c.emplace_back(i, j);
        ++d.c[static_cast<std::size_t>(i - 1)];
      } else {
        d.pairs_a.emplace_back(i, j);
        ++d.a[static_cast<std::size_t>(i - 1)];
      }
    }
  }
  return d;
}

std::vector<int> rank_function(const Partition& lambda, const SpaceContext& ctx) {
  ctx.require(lambda);
  const int n = ctx.n();
  const int k = ctx.k();
  const bool og = ctx.family() == Family::OG;
  std::vector<int> out;
  for (int j = 1; j <= lambda.length(); ++j) {
    int count = 0;
    // OG counts i <= j, IG counts i < j.
    for (int i = 1; i < j + (og ? 1 : 0); ++i)
      if (lambda[i - 1] + lambda[j - 1] > 2 * k + j - i) ++count;
    out.push_back(n + k + (og ? 1 : 0) + j - lambda[j - 1] - count);
  }
  return out;
}

}  // namespace isoschubert
