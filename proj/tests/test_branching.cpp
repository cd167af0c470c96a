#include "fuscat/branching.hpp"

#include <algorithm>
#include <doctest.h>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuscat/partition.hpp"

using namespace fuscat;

namespace {

using PairList = std::vector<std::pair<Partition, Partition>>;

bool table_has(const BranchingTable& bt, Sector s, const Partition& a,
               const Partition& b) {
  const auto& v = bt.sector(s);
  return std::find(v.begin(), v.end(), std::pair{a, b}) != v.end();
}

}  // namespace

TEST_CASE("shuffles: smallest case and counts") {
  const auto two = enumerate_w1(1, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].dots() == "BW");
  CHECK(two[1].dots() == "WB");
  CHECK(enumerate_w1(3, 2).size() == 10);
  CHECK(enumerate_w1(1, 4).size() == 5);
  CHECK(enumerate_w1(7, 7).size() == 3432);
  CHECK_THROWS_AS(enumerate_w1(8, 7), std::invalid_argument);
}

TEST_CASE("shuffles: boundary weight values") {
  const auto all = enumerate_w1(3, 2);
  const auto first = kp_weight(all.front());
  CHECK(first.first == std::vector<int>{2, 2, 2});
  CHECK(first.second == std::vector<int>{0, 0});
  const auto last = kp_weight(all.back());
  CHECK(last.first == std::vector<int>{0, 0, 0});
  CHECK(last.second == std::vector<int>{3, 3});
}

TEST_CASE("shuffles: worked seven-by-six example") {
  const Shuffle s{{1, 2, 4, 5, 6, 7, 11, 3, 8, 9, 10, 12, 13}, 7, 6};
  s.validate();
  CHECK(s.dots() == "BBWBBBBWWWBWW");
  const auto [w1, w2] = kp_weight(s);
  CHECK(w1 == std::vector<int>{6, 6, 5, 5, 5, 5, 2});
  CHECK(w2 == std::vector<int>{5, 1, 1, 1, 0, 0});
  CHECK(Partition(w1) == read_dots_black(s.dots()));
}

TEST_CASE("shuffles: weights are the dot partition and its complement") {
  for (auto [n, k] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{1, 4}}) {
    const Rectangle rect{n, k};
    std::set<Partition> seen;
    for (const Shuffle& s : enumerate_w1(n, k)) {
      const auto [w1, w2] = kp_weight(s);
      const Partition lam = read_dots_black(s.dots());
      CHECK(Partition(w1) == lam);
      CHECK(Partition(w2) == complement(lam, rect));
      CHECK(rect.contains(lam));
      seen.insert(lam);
    }
    CHECK(seen.size() == enumerate_rectangle(rect).size());
  }
}

TEST_CASE("shuffles: reversing the diagram transposes and complements") {
  for (auto [n, k] : {std::pair{3, 2}, std::pair{2, 2}}) {
    const Rectangle rect{n, k};
    for (const Shuffle& s : enumerate_w1(n, k)) {
      const std::string d = s.dots();
      const std::string rev(d.rbegin(), d.rend());
      CHECK(read_dots_black(rev) == tc(read_dots_black(d), rect));
    }
  }
}

TEST_CASE("shuffles: validation rejects malformed data") {
  const Shuffle unsorted{{3, 1, 2, 4}, 2, 2};
  CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);
  const Shuffle dup{{1, 1, 2, 3}, 2, 2};
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
  const Shuffle short_perm{{1, 2, 3}, 2, 2};
  CHECK_THROWS_AS(short_perm.validate(), std::invalid_argument);
  const Shuffle out_of_range{{0, 1, 2, 3}, 2, 2};
  CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);
}

TEST_CASE("sector names round-trip") {
  for (Sector s : {Sector::L0, Sector::L1, Sector::LPlus, Sector::LMinus})
    CHECK(sector_from_name(sector_name(s)) == s);
  CHECK(sector_name(Sector::LPlus) == "L+");
  CHECK_THROWS_AS(sector_from_name("L2"), std::invalid_argument);
}

TEST_CASE("branching table: smallest case is fully pinned") {
  const BranchingTable bt = branching_table(1, 1);
  CHECK(bt.sector(Sector::L0) == PairList{{Partition{}, Partition{}}});
  CHECK(bt.sector(Sector::L1) == PairList{{Partition{1}, Partition{1}}});
  CHECK(bt.sector(Sector::LPlus) == PairList{{Partition{}, Partition{1}}});
  CHECK(bt.sector(Sector::LMinus) == PairList{{Partition{1}, Partition{}}});
}

TEST_CASE("branching table: worked pair lands in the plus sector") {
  const BranchingTable bt = branching_table(7, 6);
  CHECK(table_has(bt, Sector::LPlus, Partition{6, 6, 5, 5, 5, 5, 2},
                  Partition{5, 1, 1, 1}));
}

TEST_CASE("branching table: sizes and the full-rectangle rule") {
  for (auto [n, k] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2}}) {
    const BranchingTable bt = branching_table(n, k);
    const size_t total = enumerate_rectangle(Rectangle{n, k}).size();
    CHECK(bt.sector(Sector::L0).size() + bt.sector(Sector::L1).size() == total);
    CHECK(bt.sector(Sector::LPlus).size() + bt.sector(Sector::LMinus).size() ==
          total);
    const Partition full(std::vector<int>(static_cast<size_t>(n), k));
    const Sector expect = (n * k) % 2 == 0 ? Sector::LPlus : Sector::LMinus;
    CHECK(table_has(bt, expect, full, Partition{}));
  }
  CHECK(table_has(branching_table(1, 2), Sector::LPlus, Partition{2},
                  Partition{}));
}

TEST_CASE("branching verification is exact and passes") {
  for (auto [n, k] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2},
                      std::pair{2, 3}, std::pair{3, 2}, std::pair{1, 3}}) {
    CAPTURE(n);
    CAPTURE(k);
    const BranchingReport rep = verify_branching(n, k);
    CHECK(rep.pass());
    CHECK(rep.checks.size() == 6);
    for (const Check& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
      CHECK(c.gap == 0.0);
    }
  }
}

TEST_CASE("etale dimension identities hold numerically") {
  for (auto [n, k] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2},
                      std::pair{2, 3}}) {
    CAPTURE(n);
    CAPTURE(k);
    const BranchingReport rep = verify_etale_dims(n, k);
    CHECK(rep.pass());
    for (const Check& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("etale gaps are honest floating-point residues") {
  const BranchingReport rep = verify_etale_dims(2, 3, 0.0, 0.0);
  bool any_gap = false;
  for (const Check& c : rep.checks) any_gap = any_gap || c.gap > 0.0;
  CHECK(any_gap);
  CHECK_FALSE(rep.pass());
}
