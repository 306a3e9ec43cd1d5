#include <doctest.h>

#include <set>

#include "isoschubert/partition.hpp"

using namespace isoschubert;

namespace {

long binomial(int n, int r) {
  long b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

// every weakly decreasing sequence in the rows x cols rectangle, then filter
void all_in_rectangle(int rows, int cols, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == rows) return;
  const int hi = cur.empty() ? cols : cur.back();
  for (int v = 1; v <= hi; ++v) {
    cur.push_back(v);
    all_in_rectangle(rows, cols, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("is_k_strict") {
  CHECK(is_k_strict(std::vector<int>{3, 1}, 1));
  CHECK_FALSE(is_k_strict(std::vector<int>{3, 3}, 2));
  CHECK(is_k_strict(std::vector<int>{3, 3}, 3));
  CHECK(is_k_strict(std::vector<int>{}, 0));
  CHECK_FALSE(is_k_strict(std::vector<int>{1, 1}, 0));
  CHECK_FALSE(is_k_strict(std::vector<int>{1, 2}, 5));
  CHECK_FALSE(is_k_strict(std::vector<int>{-1}, 5));
}

TEST_CASE("partition basics") {
  const Partition p{4, 3, 1};
  CHECK(p.weight() == 8);
  CHECK(p.length() == 3);
  CHECK(p[5] == 0);
  CHECK(p.tail() == Partition{3, 1});
  CHECK(p.count_greater(1) == 2);
  CHECK(p.conjugate() == std::vector<int>{3, 2, 2, 1});
  CHECK(from_columns(p.conjugate()) == p);
  CHECK(p.contains(Partition{3, 3}));
  CHECK_FALSE(p.contains(Partition{2, 2, 2}));
  CHECK(p.to_string() == "(4,3,1)");
  CHECK(Partition{}.to_string() == "()");
  CHECK(Partition(std::vector<int>{2, 1, 0, 0}) == Partition{2, 1});
  CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
  CHECK(Partition{1, 1} < Partition{3});
  CHECK(Partition{2, 1} < Partition{1, 1, 1});
}

TEST_CASE("space context") {
  CHECK_THROWS_AS(SpaceContext(Family::IG, 2, 2), ContextError);
  CHECK_THROWS_AS(SpaceContext(Family::OG, 1, -1), ContextError);
  const SpaceContext ctx(Family::OG, 3, 1);
  CHECK(ctx.rows() == 2);
  CHECK(ctx.cols() == 4);
  CHECK(ctx.q_degree() == 4);
  CHECK(SpaceContext(Family::IG, 3, 1).q_degree() == 5);
  CHECK(ctx.admits(Partition{4, 3}));
  CHECK_FALSE(ctx.admits(Partition{5}));
  CHECK_FALSE(ctx.admits(Partition{1, 1, 1}));
  CHECK_FALSE(ctx.admits(Partition{2, 2}));
  CHECK_THROWS_AS(ctx.require(Partition{5}), DomainError);
  CHECK(family_from_string("OG") == Family::OG);
  CHECK_THROWS_AS(family_from_string("SG"), ContextError);
}

TEST_CASE("enumerate_P examples") {
  CHECK(enumerate_P(1, 2) == std::vector<Partition>{{}, {1}, {2}, {3}});
  CHECK(enumerate_P(0, 2) == std::vector<Partition>{{}, {1}, {2}, {2, 1}});
  CHECK(enumerate_P(0, 1) == std::vector<Partition>{{}, {1}});
  CHECK_THROWS_AS(enumerate_P(3, 3), ContextError);
}

TEST_CASE("enumerate_P matches a rectangle filter and the Schubert cell count") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      std::vector<Partition> all;
      std::vector<int> cur;
      all_in_rectangle(n - k, n + k, cur, all);
      std::set<Partition> filtered;
      for (const auto& p : all)
        if (is_k_strict(p, k)) filtered.insert(p);
      const auto listed = enumerate_P(k, n);
      CHECK(std::set<Partition>(listed.begin(), listed.end()) == filtered);
      CHECK(std::is_sorted(listed.begin(), listed.end()));
      CHECK(static_cast<long>(listed.size()) == (1L << (n - k)) * binomial(n, k));
    }
}

TEST_CASE("k_strict_of_weight") {
  CHECK(k_strict_of_weight(3, 0) == std::vector<Partition>{{3}, {2, 1}});
  CHECK(k_strict_of_weight(0, 2) == std::vector<Partition>{{}});
  for (const auto& p : k_strict_of_weight(9, 2)) {
    CHECK(p.weight() == 9);
    CHECK(is_k_strict(p, 2));
  }
}

TEST_CASE("k_related") {
  CHECK(k_related({1, 4}, {3, 2}, 1));
  CHECK_FALSE(k_related({1, 1}, {1, 2}, 1));
  for (int k = 0; k < 4; ++k)
    for (int r1 = 1; r1 < 5; ++r1)
      for (int c1 = 1; c1 < 8; ++c1) {
        const Box a{r1, c1};
        CHECK(k_related(a, a, k));
        for (int r2 = 1; r2 < 5; ++r2)
          for (int c2 = 1; c2 < 8; ++c2)
            CHECK(k_related(a, {r2, c2}, k) == k_related({r2, c2}, a, k));
      }
}

TEST_CASE("index_data examples") {
  const IndexData d = index_data({4, 3}, 1);
  CHECK(d.pairs_c == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(d.pairs_a.empty());
  CHECK(d.a == std::vector<int>{0, 0});
  CHECK(d.c == std::vector<int>{1, 0});

  const IndexData e = index_data({2, 1}, 1);
  CHECK(e.pairs_a == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(e.pairs_c.empty());
  CHECK(e.a == std::vector<int>{1, 0});
  CHECK(e.c == std::vector<int>{0, 0});

  for (int k = 0; k < 3; ++k) {
    const IndexData s = index_data({5}, k);
    CHECK(s.pairs_a.empty());
    CHECK(s.pairs_c.empty());
    CHECK(s.a == std::vector<int>{0});
    CHECK(s.c == std::vector<int>{0});
  }
  CHECK_THROWS_AS(index_data({2, 2}, 1), ValidationError);
}

TEST_CASE("rank_function examples") {
  CHECK(rank_function({1}, SpaceContext(Family::IG, 2, 1)) == std::vector<int>{3});
  CHECK(rank_function({}, SpaceContext(Family::OG, 2, 1)).empty());
  CHECK(rank_function({4, 3}, SpaceContext(Family::IG, 3, 1)) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(rank_function({5}, SpaceContext(Family::IG, 3, 1)), DomainError);
}

TEST_CASE("rank_function is strictly increasing and in range") {
  for (Family fam : {Family::IG, Family::OG})
    for (int n = 1; n <= 5; ++n)
      for (int k = 0; k < n; ++k) {
        const SpaceContext ctx(fam, n, k);
        const int top = fam == Family::IG ? 2 * n : 2 * n + 1;
        for (const auto& lambda : enumerate_P(k, n)) {
          CAPTURE(ctx.to_string());
          CAPTURE(lambda.to_string());
          const auto p = rank_function(lambda, ctx);
          REQUIRE(static_cast<int>(p.size()) == lambda.length());
          for (std::size_t j = 0; j < p.size(); ++j) {
            CHECK(p[j] >= 1);
            CHECK(p[j] <= top);
            if (j > 0) CHECK(p[j - 1] < p[j]);
          }
        }
      }
}
