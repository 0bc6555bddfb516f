#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "a3res/split.hpp"

using namespace a3res;

namespace {

CohomologyTable make_table(
    const std::vector<std::pair<int, std::vector<std::pair<Weight, long long>>>>& entries) {
  CohomologyTable t;
  for (const auto& [deg, reps] : entries)
    for (const auto& [w, m] : reps) t.add(deg, w, m);
  return t;
}

Partition random_partition(std::mt19937& rng, int maxRows, int maxSize) {
  std::uniform_int_distribution<int> rows(0, maxRows);
  int r = rows(rng);
  std::vector<int> p(r);
  int budget = maxSize;
  for (int i = 0; i < r; ++i) {
    std::uniform_int_distribution<int> part(0, budget);
    p[i] = part(rng);
    budget -= p[i];
  }
  std::sort(p.rbegin(), p.rend());
  return make_partition(p);
}

}  // namespace

TEST_CASE("flag context roles") {
  FlagContext ctx{1, 2, 3};
  CHECK(ctx.valid());
  CHECK(ctx.dualContext() == FlagContext{1, 2, 3});
  CHECK(FlagContext{1, 3, 4}.dualContext() == FlagContext{1, 3, 4});
  CHECK(FlagContext{1, 2, 4}.dualContext() == FlagContext{2, 3, 4});
  CHECK(!FlagContext{2, 1, 3}.valid());
  CHECK(!FlagContext{-1, 1, 3}.valid());
}

TEST_CASE("split bundles on Flag(1,2,3), lambda=(3,2), mu=(3,1)") {
  FlagContext ctx{1, 2, 3};
  Weight b1w{1, 1, -1}, b2w{1, 0, 0};
  CHECK(cohomology_B1(ctx, {3, 2}, {3, 1}) ==
        make_table({{2, {{b1w, 1}}}, {3, {{b1w, 1}}}}));
  CHECK(cohomology_B2(ctx, {3, 2}, {3, 1}) ==
        make_table({{2, {{b2w, 1}}}, {3, {{b2w, 1}}}}));
  auto rec = reconcile(cohomology_B1(ctx, {3, 2}, {3, 1}), cohomology_B2(ctx, {3, 2}, {3, 1}));
  CHECK(rec.zero());
  CHECK(rec.status == CohomologyTable::Status::Exact);
}

TEST_CASE("split bundles on Flag(1,2,3), lambda=mu=(4,1)") {
  FlagContext ctx{1, 2, 3};
  auto b1 = cohomology_B1(ctx, {4, 1}, {4, 1});
  CHECK(b1 == make_table({{2,
                           {{Weight{0, 0, 0}, 1},
                            {Weight{1, 0, -1}, 1},
                            {Weight{2, 0, -2}, 1},
                            {Weight{1, 1, -2}, 1}}},
                          {3, {{Weight{1, 1, -2}, 1}}}}));

  auto b2 = cohomology_B2(ctx, {4, 1}, {4, 1});
  REQUIRE(b2.byDegree.count(3) == 1);
  CHECK(b2.byDegree.at(3) == RepSum::single(Weight{2, -1, -1}, 1));
  REQUIRE(b2.byDegree.count(2) == 1);
  CHECK(b2.byDegree.at(2).terms.count(Weight{2, -1, -1}) == 1);

  auto rec = reconcile(b1, b2);
  CHECK(rec.status == CohomologyTable::Status::Exact);
  CHECK(rec == make_table({{2,
                            {{Weight{0, 0, 0}, 1},
                             {Weight{1, 0, -1}, 1},
                             {Weight{2, 0, -2}, 1}}}}));
}

TEST_CASE("split bundles on Flag(1,3,4), lambda=mu=(3,1): both filtrations, ambiguous overlap") {
  FlagContext ctx{1, 3, 4};
  auto deg2 = RepSum();
  deg2.add({0, 0, 0, 0}, 1);
  deg2.add({1, 1, 0, -2}, 1);
  deg2.add({1, 1, -1, -1}, 1);
  deg2.add({2, 0, 0, -2}, 1);
  deg2.add({2, 0, -1, -1}, 1);
  deg2.add({1, 0, 0, -1}, 3);
  auto expected = CohomologyTable{};
  for (const auto& [w, m] : deg2.terms) expected.add(2, w, m);
  expected.add(3, {1, 0, 0, -1}, 1);

  auto b1 = cohomology_B1(ctx, {3, 1}, {3, 1});
  auto b2 = cohomology_B2(ctx, {3, 1}, {3, 1});
  CHECK(b1 == expected);
  CHECK(b2 == expected);

  auto rec = reconcile(b1, b2);
  CHECK(rec.status == CohomologyTable::Status::Ambiguous);
}

TEST_CASE("trivial bundle has only constant sections") {
  for (auto ctx : {FlagContext{1, 2, 3}, FlagContext{1, 3, 4}, FlagContext{2, 3, 5}}) {
    auto ones = make_table({{0, {{Weight(ctx.n, 0), 1}}}});
    CHECK(cohomology_B1(ctx, {}, {}) == ones);
    CHECK(cohomology_B2(ctx, {}, {}) == ones);
  }
}

TEST_CASE("degenerate contexts reduce to one-step Grassmannians") {
  // r1 == r2: the associated graded bundle is the bundle itself on Gr(r, n).
  FlagContext flat{2, 2, 4};
  CHECK(cohomology_B1(flat, {2, 1}, {1}) == cohomology_grassmannian(2, 4, {2, 1}, {1}));

  // r1 == 0: the mu factor is a constant bundle; cohomology is
  // H(S_lambda(R2)) tensored with S_mu(W*), decomposed.
  FlagContext sub0{0, 1, 2};
  CHECK(cohomology_B1(sub0, {2}, {1}) == make_table({{1, {{Weight{1, 0}, 1}}}}));
}

TEST_CASE("input validation") {
  FlagContext ctx{1, 2, 3};
  CHECK_THROWS_AS(cohomology_B1(ctx, {1, 1, 1}, {}), std::invalid_argument);   // > r2 rows
  CHECK_THROWS_AS(cohomology_B1(ctx, {}, {1, 1, 1}), std::invalid_argument);   // > n-r1 rows
  CHECK_THROWS_AS(cohomology_B2(ctx, {1, 1, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(cohomology_B1(FlagContext{2, 1, 3}, {}, {}), std::invalid_argument);
}

TEST_CASE("duality fixed points and involution") {
  CHECK(duality(FlagContext{1, 2, 3}, make_table({{2, {{Weight{1, 1, -1}, 1}}}})) ==
        make_table({{2, {{Weight{1, -1, -1}, 1}}}}));
  CHECK(duality(FlagContext{1, 2, 3}, make_table({{0, {{Weight{0, 0, 0}, 1}}}})) ==
        make_table({{0, {{Weight{0, 0, 0}, 1}}}}));
  CHECK(duality(FlagContext{1, 2, 3}, CohomologyTable{}).zero());

  std::mt19937 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    CohomologyTable t;
    std::uniform_int_distribution<int> deg(0, 4), entry(-3, 3), mult(1, 3);
    for (int k = 0; k < 4; ++k) {
      Weight w{entry(rng), entry(rng), entry(rng), entry(rng)};
      std::sort(w.rbegin(), w.rend());
      t.add(deg(rng), w, mult(rng));
    }
    CHECK(duality(FlagContext{1, 2, 4}, duality(FlagContext{1, 2, 4}, t)) == t);
  }
}

TEST_CASE("the two filtrations have equal Euler characteristics") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> nd(2, 5);
  int tested = 0;
  while (tested < 300) {
    int n = nd(rng);
    std::uniform_int_distribution<int> rr(0, n);
    int r1 = rr(rng), r2 = rr(rng);
    if (r1 > r2) std::swap(r1, r2);
    FlagContext ctx{r1, r2, n};
    Partition lam = random_partition(rng, r2, 6);
    Partition mu = random_partition(rng, n - r1, 6);
    auto b1 = cohomology_B1(ctx, lam, mu);
    auto b2 = cohomology_B2(ctx, lam, mu);
    CHECK(b1.euler() == b2.euler());
    ++tested;
  }
}

TEST_CASE("reconcile rejects mismatched Euler characteristics") {
  Weight w{1, 0, 0};
  auto b1 = make_table({{0, {{w, 1}}}, {1, {{w, 1}}}});  // chi = 0
  auto b2 = make_table({{0, {{w, 2}}}});                 // chi = 2
  CHECK_THROWS_AS(reconcile(b1, b2), std::logic_error);
}

TEST_CASE("reconcile returns the forced solution, not the cap table") {
  // Caps (1,1,1) in degrees 0,1,2 with chi = 2: the only solution with
  // x0 - x1 + x2 = 2 under the caps is (1,0,1), which differs from the
  // degreewise minimum (1,1,1) in degree 1.
  Weight w{1, 0, 0};
  auto b1 = make_table({{0, {{w, 1}}}, {1, {{w, 1}}}, {2, {{w, 2}}}});  // chi = 2
  auto b2 = make_table({{0, {{w, 2}}}, {1, {{w, 1}}}, {2, {{w, 1}}}});  // chi = 2
  auto got = reconcile(b1, b2);
  CHECK(got.status == CohomologyTable::Status::Exact);
  CHECK(got == make_table({{0, {{w, 1}}}, {2, {{w, 1}}}}));
}

TEST_CASE("reconcile: ambiguous and forced synthetic systems") {
  Weight w{2, 0, 0};
  {
    // chi = 0 with caps (1, 1) in adjacent degrees: solutions (0,0) and (1,1)
    // -> ambiguous, caps kept as upper bounds.
    auto a = make_table({{2, {{w, 1}}}, {3, {{w, 1}}}});
    auto got = reconcile(a, a);
    CHECK(got.status == CohomologyTable::Status::Ambiguous);
    CHECK(got.sameEntries(a));
  }
  {
    // chi = 2 with caps (2, 0): x2 = 2 is forced -> exact.
    auto b1 = make_table({{2, {{w, 2}}}});
    auto b2 = make_table({{2, {{w, 2}}}, {3, {{w, 0}}}});
    auto got = reconcile(b1, b2);
    CHECK(got.status == CohomologyTable::Status::Exact);
    CHECK(got == make_table({{2, {{w, 2}}}}));
  }
  {
    // Same-parity degrees 0 and 2 with caps (1, 1) and chi = 2: both entries
    // are forced to their caps.
    auto b = make_table({{0, {{w, 1}}}, {2, {{w, 1}}}});
    auto got = reconcile(b, b);
    CHECK(got.status == CohomologyTable::Status::Exact);
    CHECK(got == b);
  }
  // Empty tables reconcile to the empty exact table.
  auto z = reconcile(CohomologyTable{}, CohomologyTable{});
  CHECK(z.zero());
  CHECK(z.status == CohomologyTable::Status::Exact);
}

TEST_CASE("hook formula: narrow-arm case reduces to one Bott step") {
  // lambda = (2) on Flag(1,2,4), mu = (): the reduced weight is singular, so
  // everything vanishes; the filtrations agree.
  FlagContext ctx{1, 2, 4};
  auto h = hook_cohomology(ctx, 1, 0, {});
  REQUIRE(h.has_value());
  CHECK(h->zero());
  auto rec = reconcile(cohomology_B1(ctx, {2}, {}), cohomology_B2(ctx, {2}, {}));
  CHECK(rec.status == CohomologyTable::Status::Exact);
  CHECK(rec.zero());

  // Same shape with mu = (1,1) is regular: H^2 is the trivial representation.
  auto h2 = hook_cohomology(ctx, 1, 0, {1, 1});
  REQUIRE(h2.has_value());
  CHECK(*h2 == make_table({{2, {{Weight{0, 0, 0, 0}, 1}}}}));
}

TEST_CASE("hook formula: full-arm cases") {
  // a = n-r2, mu = (k): the explicit single-row lists.
  auto h = hook_cohomology(FlagContext{1, 2, 4}, 2, 0, {1});
  REQUIRE(h.has_value());
  CHECK(*h == make_table({{2, {{Weight{1, 1, 0, 0}, 1}}}}));

  // k <= min{b, r1} kills all cohomology.
  auto z = hook_cohomology(FlagContext{2, 3, 5}, 2, 1, {1});
  REQUIRE(z.has_value());
  CHECK(z->zero());
}

TEST_CASE("hook formula matches exact reconciliations where both are available") {
  for (int n = 3; n <= 4; ++n)
    for (int r1 = 1; r1 < n; ++r1)
      for (int r2 = r1 + 1; r2 < n; ++r2)
        for (int a = 1; a <= n - r2; ++a)
          for (int b = 0; b < r2; ++b)
            for (int k = 0; k <= 4; ++k) {
              FlagContext ctx{r1, r2, n};
              Partition mu = k == 0 ? Partition{} : Partition{k};
              auto h = hook_cohomology(ctx, a, b, mu);
              if (!h) continue;
              for (const auto& [deg, reps] : h->byDegree)
                for (const auto& [w, m] : reps.terms) CHECK(m == 1);
              Partition lam(static_cast<size_t>(b) + 1, 1);
              lam[0] = a + 1;
              auto rec = reconcile(cohomology_B1(ctx, lam, mu), cohomology_B2(ctx, lam, mu));
              if (rec.status == CohomologyTable::Status::Exact) CHECK(h->sameEntries(rec));
            }
}

TEST_CASE("hook formula validates input") {
  CHECK_THROWS_AS(hook_cohomology(FlagContext{0, 2, 4}, 1, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(hook_cohomology(FlagContext{1, 2, 4}, 0, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(hook_cohomology(FlagContext{1, 2, 4}, 3, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(hook_cohomology(FlagContext{1, 2, 4}, 1, 2, {}), std::invalid_argument);
}
