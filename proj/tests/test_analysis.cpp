#include "dynamo/analysis.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dynamo;

namespace {

constexpr std::uint64_t kSeed = 0x5eed0002;

Configuration random_config(const TorusShape& shape, std::mt19937_64& rng, double density) {
  Configuration c(shape);
  std::bernoulli_distribution coin(density);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    if (coin(rng)) c.set(v);
  }
  return c;
}

}  // namespace

TEST_CASE("reference bound values") {
  CHECK(table1_bounds(1, 1, 5, RuleKind::kReversible, false).lower == Rational(1));
  CHECK(table1_bounds(1, 1, 4, RuleKind::kReversible, false).lower == Rational(2));
  CHECK(table1_bounds(2, 3, 12, RuleKind::kReversible, false).lower == Rational(96));
  CHECK(table1_bounds(2, 3, 12, RuleKind::kReversible, true).lower == Rational(96));
  CHECK(table1_bounds(2, 0, 10, RuleKind::kMajority, true).lower == Rational(50));
  CHECK(table1_bounds(2, 0, 10, RuleKind::kMajority, false).lower == Rational(100, 3));
  CHECK(table1_bounds(3, 2, 5, RuleKind::kBootstrap, false).lower == Rational(15, 2));
  CHECK(table1_bounds(2, 2, 8, RuleKind::kReversible, true).lower == Rational(16));
  CHECK(table1_bounds(2, 4, 10, RuleKind::kBootstrap, false).lower == Rational(50));
  CHECK_THROWS_AS(table1_bounds(2, 5, 10, RuleKind::kReversible, false), std::invalid_argument);
  CHECK_THROWS_AS(table1_bounds(2, 0, 10, RuleKind::kBootstrap, false), std::invalid_argument);
}

TEST_CASE("k-core peeling") {
  const TorusShape t = TorusShape::make(5, 2);
  const VertexSet whole = Configuration::all(t);
  CHECK(k_core(whole, 4) == whole);  // 4-regular graph is its own 4-core

  VertexSet holed = whole;
  holed.set(12, false);
  CHECK(k_core(holed, 4).none());  // peeling cascades from the hole

  VertexSet some(t);
  for (VertexId v : {0u, 1u, 2u, 7u, 11u}) some.set(v);
  CHECK(k_core(some, 0) == some);
}

TEST_CASE("k-core is independent of removal order") {
  const TorusShape t = TorusShape::make(6, 2);
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 30; ++trial) {
    const VertexSet set = random_config(t, rng, 0.6);
    for (int k = 1; k <= 4; ++k) {
      const VertexSet core = k_core(set, k);
      // oracle: peel in randomized order until no low-degree member remains
      VertexSet manual = set;
      std::vector<VertexId> members;
      bool changed = true;
      while (changed) {
        changed = false;
        members.clear();
        manual.for_each([&](VertexId v) { members.push_back(v); });
        std::shuffle(members.begin(), members.end(), rng);
        for (VertexId v : members) {
          if (manual.test(v) && members_among_neighbors(manual, v) < k) {
            manual.set(v, false);
            changed = true;
          }
        }
      }
      CHECK(core == manual);
    }
  }
}

TEST_CASE("core criterion matches simulated bootstrap percolation") {
  const TorusShape t = TorusShape::make(6, 2);
  CHECK(bp_dynamo_by_core(Configuration::all(t), 1));
  CHECK_FALSE(bp_dynamo_by_core(Configuration(t), 1));

  std::mt19937_64 rng(kSeed + 1);
  for (int r = 1; r <= 4; ++r) {
    for (int i = 0; i < 200; ++i) {
      const Configuration c = random_config(t, rng, 0.05 + 0.09 * (i % 10));
      CHECK(bp_dynamo_by_core(c, r) == (is_dynamo(c, Rule::bootstrap(r)).verdict == Tristate::kYes));
    }
  }
}

TEST_CASE("exhaustive minima on small cycles") {
  const TorusShape c5 = TorusShape::make(5, 1);
  CHECK(min_dynamo_search(c5, Rule::bootstrap(1), false).minimum == 1);
  CHECK(min_dynamo_search(c5, Rule::reversible(1), false).minimum == 1);

  const TorusShape c4 = TorusShape::make(4, 1);
  const SearchResult r = min_dynamo_search(c4, Rule::reversible(1), false);
  CHECK(r.minimum == 2);
  CHECK(r.exhaustive);
  CHECK(is_dynamo(r.witness, Rule::reversible(1)).yes());

  // full enumeration of C_4 under reversible 2-BP touches every nonempty set
  const SearchResult full = min_dynamo_search(c4, Rule::reversible(2), false);
  CHECK(full.minimum == 4);
  CHECK(full.examined == 15);

  // majority on C_4: two adjacent vertices stall, three percolate
  CHECK(min_dynamo_search(c4, Rule::majority(), false).minimum == 3);
  CHECK(min_dynamo_search(c4, Rule::majority(), true).minimum == 3);
}

TEST_CASE("frozen fixture: T_3^2 under 2-BP") {
  // computed by this search on first run; regenerate with
  //   dynamo-lab search --d 2 --n 3 --r 2 --model bp
  const TorusShape t = TorusShape::make(3, 2);
  const SearchResult r = min_dynamo_search(t, Rule::bootstrap(2), false);
  CHECK(r.minimum == 2);
  CHECK(r.exhaustive);
  CHECK(bp_dynamo_by_core(r.witness, 2));
}

TEST_CASE("translation pruning and sharding do not change the minimum") {
  for (const auto& [shape, rule] : std::vector<std::pair<TorusShape, Rule>>{
           {TorusShape::make(3, 2), Rule::bootstrap(2)},
           {TorusShape::make(6, 1), Rule::reversible(2)},
           {TorusShape::make(5, 1), Rule::majority()},
           {TorusShape::make(4, 2), Rule::reversible(2)}}) {
    const std::uint64_t plain = min_dynamo_search(shape, rule, false).minimum;
    SearchOptions pruned;
    pruned.prune_translations = true;
    CHECK(min_dynamo_search(shape, rule, false, pruned).minimum == plain);
    SearchOptions threaded;
    threaded.threads = 2;
    CHECK(min_dynamo_search(shape, rule, false, threaded).minimum == plain);
  }
}

TEST_CASE("budget exhaustion degrades to a non-exhaustive upper bound") {
  const TorusShape t = TorusShape::make(4, 2);
  SearchOptions tiny;
  tiny.budget = 10;
  const SearchResult r = min_dynamo_search(t, Rule::reversible(3), false, tiny);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.minimum == 16);  // all-active fallback
  CHECK(r.witness.is_all());
}

TEST_CASE("search witnesses verify under the requested property") {
  const TorusShape c5 = TorusShape::make(5, 1);
  const SearchResult mono = min_dynamo_search(c5, Rule::reversible(1), true);
  CHECK(mono.minimum == 2);
  CHECK(is_monotone_dynamo(mono.witness, Rule::reversible(1)).yes());

  const SearchResult maj = min_dynamo_search(TorusShape::make(4, 1), Rule::majority(), false);
  CHECK(is_dynamo(maj.witness, Rule::majority()).yes());
}

TEST_CASE("monotone chain m <= m_rev <= m_rev_mon on exhaustively searched cycles") {
  for (int n : {4, 5, 6}) {
    const TorusShape c = TorusShape::make(n, 1);
    for (int r : {1, 2}) {
      const std::uint64_t bp = min_dynamo_search(c, Rule::bootstrap(r), false).minimum;
      const std::uint64_t rev = min_dynamo_search(c, Rule::reversible(r), false).minimum;
      const std::uint64_t mon = min_dynamo_search(c, Rule::reversible(r), true).minimum;
      CHECK(bp <= rev);
      CHECK(rev <= mon);
    }
  }
}

TEST_CASE("search rejects shapes beyond the enumeration cap") {
  CHECK_THROWS_AS(min_dynamo_search(TorusShape::make(9, 2), Rule::bootstrap(1), false),
                  std::invalid_argument);
}

TEST_CASE("closed-form lower bound checks") {
  // C_4, monotone reversible r=2: bound 2(1-1/2)*4 = 4, forcing all-active
  const TorusShape c4 = TorusShape::make(4, 1);
  const BoundReport at4 = check_lower_bounds(c4, Rule::reversible(2), true, 4);
  CHECK(at4.all_ok);
  REQUIRE(at4.checks.size() >= 1);
  CHECK(at4.checks[0].required == 4);
  CHECK_FALSE(check_lower_bounds(c4, Rule::reversible(2), true, 3).all_ok);

  // C_6: reversible minimum >= 2 * bootstrap minimum
  const TorusShape c6 = TorusShape::make(6, 1);
  const BoundReport bi = check_lower_bounds(c6, Rule::reversible(1), false, 2, 1);
  CHECK(bi.all_ok);
  REQUIRE(bi.checks.size() == 1);
  CHECK(bi.checks[0].required == 2);

  // T_4^2 majority monotone: bound (1-2/4)*16 = 8
  const TorusShape t42 = TorusShape::make(4, 2);
  const BoundReport maj = check_lower_bounds(t42, Rule::majority(), true, 8);
  CHECK(maj.all_ok);
  REQUIRE(maj.checks.size() == 1);
  CHECK(maj.checks[0].bound == Rational(8));
  CHECK_FALSE(check_lower_bounds(t42, Rule::majority(), true, 7).all_ok);

  // small r makes the regular-graph bound non-positive, hence vacuous
  const BoundReport vac = check_lower_bounds(t42, Rule::reversible(1), true, 1);
  CHECK(vac.all_ok);
}
