#include <doctest.h>

#include <algorithm>
#include <set>

#include "fuscat/partition.hpp"

using namespace fuscat;

namespace {

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
  CHECK(Partition{2, 1, 0} == Partition{2, 1});
  CHECK(Partition{}.empty());
  CHECK(Partition{2, 1, 1}.boxes() == 4);
  CHECK(Partition{2, 1}.part(5) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("graded-lex order") {
  CHECK(Partition{} < Partition{1});
  CHECK(Partition{1, 1} < Partition{2});
  CHECK(Partition{3} < Partition{2, 1, 1});
  CHECK_FALSE(Partition{2} < Partition{1, 1});
}

TEST_CASE("rectangle enumeration is graded-lex and counts C(n+k,n)") {
  auto l21 = enumerate_rectangle(Rectangle{2, 1});
  REQUIRE(l21.size() == 3);
  CHECK(l21[0] == Partition{});
  CHECK(l21[1] == Partition{1});
  CHECK(l21[2] == Partition{1, 1});

  auto l32 = enumerate_rectangle(Rectangle{3, 2});
  CHECK(l32.size() == 10);
  CHECK(std::find(l32.begin(), l32.end(), Partition{2, 1, 1}) != l32.end());
  CHECK(std::is_sorted(l32.begin(), l32.end()));

  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 5; ++k)
      CHECK(enumerate_rectangle(Rectangle{n, k}).size() ==
            static_cast<size_t>(binom(n + k, n)));
}

TEST_CASE("transpose golden values and involution") {
  CHECK(transpose(Partition{2, 1, 1}) == Partition{3, 1});
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(transpose(Partition{4, 1, 1, 1, 1}) == Partition{5, 1, 1, 1});
  for (auto& p : enumerate_rectangle(Rectangle{3, 4})) {
    CHECK(transpose(transpose(p)) == p);
    CHECK(transpose(p).boxes() == p.boxes());
  }
}

TEST_CASE("complement golden values") {
  Rectangle r32{3, 2};
  CHECK(complement(Partition{2, 1, 1}, r32) == Partition{2});
  CHECK(complement(Partition{}, r32) == Partition{3, 3});       // full transpose box
  CHECK(complement(Partition{2, 2, 2}, r32) == Partition{});
  CHECK(complement(Partition{6, 6, 5, 5, 5, 5, 2}, Rectangle{7, 6}) ==
        Partition{5, 1, 1, 1});
  CHECK_THROWS_AS(complement(Partition{3}, r32), std::invalid_argument);
}

TEST_CASE("complement is an involution across swapped rectangles") {
  Rectangle r{3, 4}, rt{4, 3};
  for (auto& p : enumerate_rectangle(r)) {
    Partition c = complement(p, r);
    CHECK(rt.contains(c));
    CHECK(complement(c, rt) == p);
    CHECK(c.boxes() == r.n * r.k - p.boxes());
  }
}

TEST_CASE("tc golden value and involution") {
  CHECK(tc(Partition{2, 1, 1}, Rectangle{3, 2}) == Partition{1, 1});
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      Rectangle r{n, k};
      for (auto& p : enumerate_rectangle(r)) {
        Partition q = tc(p, r);
        CHECK(r.contains(q));
        CHECK(tc(q, r) == p);
        CHECK(q.boxes() == n * k - p.boxes());
        // The two factorizations of the composite agree.
        CHECK(q == transpose(complement(p, r)));
      }
    }
}

TEST_CASE("affine coordinates: golden values and round trip") {
  // Vacuum: all level at the zeroth mark.
  CHECK(to_affine(Partition{}, Rectangle{3, 2}) == AffineWeight{2, 0, 0, 0});
  CHECK(from_affine(AffineWeight{2, 0, 0, 0}) == Partition{});

  AffineWeight w{0, 0, 1, 0, 0, 0, 3, 2};
  CHECK(from_affine(w) == Partition{6, 6, 5, 5, 5, 5, 2});
  CHECK(to_affine(Partition{6, 6, 5, 5, 5, 5, 2}, Rectangle{7, 6}) == w);

  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      Rectangle r{n, k};
      for (auto& p : enumerate_rectangle(r)) {
        AffineWeight m = to_affine(p, r);
        CHECK(static_cast<int>(m.size()) == n + 1);
        int sum = 0;
        for (int x : m) {
          CHECK(x >= 0);
          sum += x;
        }
        CHECK(sum == k);
        CHECK(from_affine(m) == p);
      }
    }
  CHECK_THROWS_AS(from_affine(AffineWeight{1, -1}), std::invalid_argument);
}

TEST_CASE("dot diagram golden values") {
  CHECK(dot_diagram(Partition{6, 6, 5, 5, 5, 5, 2}, Rectangle{7, 6}) ==
        "BBWBBBBWWWBWW");
  // Vacuum: all whites precede all blacks; full rectangle is the reverse.
  CHECK(dot_diagram(Partition{}, Rectangle{2, 3}) == "WWWBB");
  CHECK(dot_diagram(Partition{3, 3}, Rectangle{2, 3}) == "BBWWW");
}

TEST_CASE("dot diagram readings: black recovers, white complements, reverse composes") {
  CHECK(read_dots_black("BBWBBBBWWWBWW") == Partition{6, 6, 5, 5, 5, 5, 2});
  CHECK(read_dots_white("BBWBBBBWWWBWW") == Partition{5, 1, 1, 1});
  CHECK_THROWS_AS(read_dots_black("BXW"), std::invalid_argument);

  for (int n = 1; n + 1 <= 10; ++n)
    for (int k = 1; n + k <= 10; ++k) {
      Rectangle r{n, k};
      for (auto& p : enumerate_rectangle(r)) {
        std::string d = dot_diagram(p, r);
        CHECK(static_cast<int>(d.size()) == n + k);
        CHECK(read_dots_black(d) == p);
        CHECK(read_dots_white(d) == complement(p, r));
        std::string rev(d.rbegin(), d.rend());
        CHECK(read_dots_black(rev) == tc(p, r));
      }
    }
}

TEST_CASE("white reading in affine coordinates matches the complement") {
  // The 13-dot example: white marks in C_{6,7}.
  Partition lam{6, 6, 5, 5, 5, 5, 2};
  Rectangle r{7, 6};
  AffineWeight white = to_affine(complement(lam, r), Rectangle{6, 7});
  CHECK(white == AffineWeight{2, 4, 0, 0, 1, 0, 0});
}
