#include "isoschubert/pieri.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace isoschubert {

namespace {

int column_count(std::span<const int> heights) {
  int n = 0;
  for (int h : heights)
    if (h > 0) ++n;
  return n;
}

// Counts 8-connected components of `boxes`, and those avoiding column `col`.
std::pair<int, int> count_components(const std::vector<Box>& boxes, int col) {
  const std::size_t m = boxes.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::abs(boxes[i].row - boxes[j].row) <= 1 &&
          std::abs(boxes[i].col - boxes[j].col) <= 1)
        parent[find(i)] = find(j);
  std::vector<char> touches(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (boxes[i].col == col) touches[find(i)] = 1;
  int total = 0;
  int avoiding = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (find(i) != i) continue;
    ++total;
    if (!touches[i]) ++avoiding;
  }
  return {total, avoiding};
}

// Checks conditions (1) and (2) for the column-height pair (old, fresh) and
// fills the witness box data. Returns false if λ → μ fails.
bool evaluate_conditions(std::span<const int> old_h, std::span<const int> new_h,
                         int k, ArrowWitness& w) {
  auto height = [](std::span<const int> hs, int col) {
    return col <= static_cast<int>(hs.size()) ? hs[static_cast<std::size_t>(col - 1)]
                                               : 0;
  };
  const int ncols = static_cast<int>(std::max(old_h.size(), new_h.size()));
  for (int c = 1; c <= ncols; ++c) {
    const int before = height(old_h, c);
    const int after = height(new_h, c);
    for (int r = before + 1; r <= after; ++r) w.added_boxes.push_back({r, c});
    for (int r = after + 1; r <= before; ++r) w.removed_boxes.push_back({r, c});
  }

  std::vector<char> mentioned(w.added_boxes.size(), 0);
  auto related_added = [&](const Box& b) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < w.added_boxes.size(); ++i)
      if (k_related(b, w.added_boxes[i], k)) hits.push_back(i);
    return hits;
  };

  for (int c = 1; c <= std::min(k, ncols); ++c) {
    const int before = height(old_h, c);
    const int after = height(new_h, c);
    if (after == before && before >= 1) {
      // (1): the bottom box is k-related to at most one added box
      const auto hits = related_added({before, c});
      if (hits.size() > 1) return false;
      for (auto i : hits) mentioned[i] = 1;
    } else if (after < before) {
      // (2): removed boxes and the new bottom box each relate to exactly one
      // added box, all in a single row
      std::vector<Box> probes;
      for (int r = after + 1; r <= before; ++r) probes.push_back({r, c});
      if (after >= 1) probes.push_back({after, c});
      int row = -1;
      for (const Box& b : probes) {
        const auto hits = related_added(b);
        if (hits.size() != 1) return false;
        const int hr = w.added_boxes[hits.front()].row;
        if (row != -1 && hr != row) return false;
        row = hr;
        mentioned[hits.front()] = 1;
      }
    }
  }

  for (std::size_t i = 0; i < w.added_boxes.size(); ++i)
    if (!mentioned[i] && w.added_boxes[i].col > k) w.set_a.push_back(w.added_boxes[i]);
  std::tie(w.components, w.components_avoiding_col_kp1) =
      count_components(w.set_a, k + 1);
  return true;
}

class ArrowSearch {
 public:
  ArrowSearch(const Partition& lambda, int p, int k, std::optional<int> row_bound,
              std::optional<int> col_bound)
      : heights_(lambda.conjugate()),
        k_(k),
        p_(p),
        row_bound_(row_bound),
        col_bound_(col_bound),
        used_rows_(static_cast<std::size_t>(lambda.length()) + 2, 0) {
    const std::size_t cols = heights_.size();
    removable_after_.assign(cols + 1, 0);
    for (std::size_t c = cols; c-- > 0;) {
      const int here = static_cast<int>(c) < k_ ? heights_[c] : 0;
      removable_after_[c] = removable_after_[c + 1] + here;
    }
    fresh_.resize(cols);
  }

  std::vector<ArrowWitness> run() {
    descend(0, -1, 0);
    return std::move(out_);
  }

 private:
  // prev < 0 means "no previous column".
  void descend(std::size_t c, int prev, int net) {
    if (c == heights_.size()) {
      finish(net);
      return;
    }
    const int h = heights_[c];
    const bool left = static_cast<int>(c) < k_;
    const int lo = left ? 0 : h;
    int hi = h + 1;
    if (prev >= 0) hi = std::min(hi, prev);
    for (int v = hi; v >= lo; --v) {
      const int next_net = net + (v - h);
      if (next_net - removable_after_[c + 1] > p_) continue;
      // removed rows (v, h] must not repeat a row already used
      bool clash = false;
      for (int r = v + 1; r <= h; ++r)
        if (used_rows_[static_cast<std::size_t>(r)]) clash = true;
      if (clash) continue;
      for (int r = v + 1; r <= h; ++r) used_rows_[static_cast<std::size_t>(r)] = 1;
      fresh_[c] = v;
      descend(c + 1, v, next_net);
      for (int r = v + 1; r <= h; ++r) used_rows_[static_cast<std::size_t>(r)] = 0;
    }
  }

  void finish(int net) {
    const int extra = p_ - net;
    if (extra < 0) return;
    if (extra > 0 && !fresh_.empty() && fresh_.back() < 1) return;
    std::vector<int> mu_h = fresh_;
    mu_h.insert(mu_h.end(), static_cast<std::size_t>(extra), 1);
    while (!mu_h.empty() && mu_h.back() == 0) mu_h.pop_back();
    const int rows = mu_h.empty() ? 0 : mu_h.front();
    if (row_bound_ && rows > *row_bound_) return;
    if (col_bound_ && column_count(mu_h) > *col_bound_) return;
    Partition mu = from_columns(mu_h);
    if (!is_k_strict(mu, k_)) return;
    ArrowWitness w;
    w.target = std::move(mu);
    if (!evaluate_conditions(heights_, mu_h, k_, w)) return;
    out_.push_back(std::move(w));
  }

  std::vector<int> heights_;
  int k_;
  int p_;
  std::optional<int> row_bound_;
  std::optional<int> col_bound_;
  std::vector<char> used_rows_;
  std::vector<int> removable_after_;
  std::vector<int> fresh_;
  std::vector<ArrowWitness> out_;
};

void check_degree(const SpaceContext& ctx, int p) {
  if (p < 1 || p > ctx.max_special())
    throw DomainError("special degree " + std::to_string(p) + " outside [1," +
                      std::to_string(ctx.max_special()) + "] for " + ctx.to_string());
}

Integer pow2(int e) {
  if (e < 0) throw InternalError("negative Pieri exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

int exponent(Family family, const ArrowWitness& w, const Partition& source, int p,
             int k) {
  const int e = family == Family::IG ? w.n_ig() : w.n_og(p, k);
  if (e < 0)
    throw InternalError("negative Pieri exponent N'=" + std::to_string(e) + " for " +
                        source.to_string() + " -> " + w.target.to_string() +
                        " with p=" + std::to_string(p) + ", k=" + std::to_string(k));
  return e;
}

}  // namespace

std::vector<ArrowWitness> arrow_targets(const Partition& lambda, int p, int k,
                                        std::optional<int> row_bound,
                                        std::optional<int> col_bound) {
  if (k < 0) throw ValidationError("k must be nonnegative");
  if (!is_k_strict(lambda, k))
    throw ValidationError(lambda.to_string() + " is not " + std::to_string(k) +
                          "-strict");
  if (p < 1) throw DomainError("Pieri degree must be positive");
  return ArrowSearch(lambda, p, k, row_bound, col_bound).run();
}

ClassicalCombination classical_pieri(const SpaceContext& ctx, int p,
                                     const Partition& lambda) {
  check_degree(ctx, p);
  ctx.require(lambda);
  ClassicalCombination out;
  for (const auto& w : arrow_targets(lambda, p, ctx.k(), ctx.rows(), ctx.cols()))
    out.add(w.target, pow2(exponent(ctx.family(), w, lambda, p, ctx.k())));
  return out;
}

ClassicalCombination stable_pieri(int k, int p, const Partition& lambda,
                                  Family family) {
  ClassicalCombination out;
  for (const auto& w : arrow_targets(lambda, p, k))
    out.add(w.target, pow2(exponent(family, w, lambda, p, k)));
  return out;
}

QuantumCombination quantum_pieri_ig(const SpaceContext& ctx, int p,
                                    const Partition& lambda) {
  if (ctx.family() != Family::IG) throw ContextError("quantum_pieri_ig needs IG");
  QuantumCombination out = to_quantum(classical_pieri(ctx, p, lambda));
  const int top = ctx.n() + ctx.k() + 1;
  for (const auto& w : arrow_targets(lambda, p, ctx.k(), ctx.rows() + 1, top)) {
    if (w.target.first() != top) continue;
    const int e = w.n_ig() - 1;
    if (e < 0)
      throw InternalError("quantum IG Pieri term with N=0: " + lambda.to_string() +
                          " -> " + w.target.to_string() + " in " + ctx.to_string());
    out.add({w.target.tail(), 1}, Dyadic(pow2(e)));
  }
  return out;
}

QuantumCombination quantum_pieri_og(const SpaceContext& ctx, int p,
                                    const Partition& lambda) {
  if (ctx.family() != Family::OG) throw ContextError("quantum_pieri_og needs OG");
  QuantumCombination out = to_quantum(classical_pieri(ctx, p, lambda));
  const int n = ctx.n();
  const int k = ctx.k();

  // q terms: ν in P'(k, n+1)
  for (const auto& w : arrow_targets(lambda, p, k, n + 1 - k, n + k)) {
    const Partition& nu = w.target;
    if (nu.length() != n + 1 - k) continue;
    if (nu.first() < 2 * k) continue;
    const auto cols = nu.conjugate();
    const int second_col = cols.size() > 1 ? cols[1] : 0;
    if (second_col > nu.first() - 2 * k + 1) continue;
    const int r = nu.first() - 2 * k + 1;
    std::vector<int> reduced(nu.vec().begin() + 1, nu.vec().begin() + r);
    out.add({Partition(std::move(reduced)), 1},
            Dyadic(pow2(exponent(Family::OG, w, lambda, p, k))));
  }

  // q^2 terms: only when λ_1 = n+k
  if (lambda.first() == n + k) {
    const Partition rest = lambda.tail();
    for (const auto& w : arrow_targets(rest, p, k, n - k, n + k)) {
      if (w.target.first() != n + k) continue;
      out.add({w.target.tail(), 2}, Dyadic(pow2(exponent(Family::OG, w, rest, p, k))));
    }
  }
  return out;
}

QuantumCombination quantum_pieri(const SpaceContext& ctx, int p,
                                 const Partition& lambda) {
  return ctx.family() == Family::IG ? quantum_pieri_ig(ctx, p, lambda)
                                    : quantum_pieri_og(ctx, p, lambda);
}

}  // namespace isoschubert
