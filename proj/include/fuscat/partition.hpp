#pragma once

#include <string>
#include <vector>

namespace fuscat {

// Young diagram with weakly decreasing non-negative parts. Trailing zeros are
// stripped on construction, so (2,1,0) and (2,1) compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int boxes() const;
  // 0-based row access; rows past the end read as 0.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition&) const = default;
  // Graded lexicographic: first by box count, then lex on the part vector.
  // This is the enumeration order used everywhere.
  bool operator<(const Partition& o) const;

  std::string str() const;  // "(2,1,1)", empty partition prints "()"

 private:
  std::vector<int> parts_;
};

// The n-by-k box: partitions with at most n rows and parts at most k.
struct Rectangle {
  int n = 0;  // rows
  int k = 0;  // columns
  bool contains(const Partition& p) const;
};

// Marks (k0,...,kn) with sum k; the affine-coordinate image of a partition.
using AffineWeight = std::vector<int>;

// All partitions in the rectangle, graded-lex order; C(n+k, n) of them.
std::vector<Partition> enumerate_rectangle(const Rectangle& rect);

Partition transpose(const Partition& p);

// Transpose of the box complement in the rectangle: lands in the k-by-n box.
Partition complement(const Partition& p, const Rectangle& rect);

// Composition of transpose and complement; an involution on the rectangle.
Partition tc(const Partition& p, const Rectangle& rect);

// lambda -> (k - l1, l1 - l2, ..., l_{n-1} - l_n, l_n).
AffineWeight to_affine(const Partition& p, const Rectangle& rect);

// Inverse: suffix sums of the last n marks.
Partition from_affine(const AffineWeight& w);

// String over {B, W}: k0 whites, a black, k1 whites, a black, ..., kn whites.
std::string dot_diagram(const Partition& p, const Rectangle& rect);

// Reading a diagram by its black dots recovers the partition.
Partition read_dots_black(const std::string& dots);

// Reading the same diagram by its white dots gives the complement.
Partition read_dots_white(const std::string& dots);

}  // namespace fuscat
