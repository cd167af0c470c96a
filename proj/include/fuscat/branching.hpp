#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fuscat/checks.hpp"
#include "fuscat/partition.hpp"
#include "fuscat/rootdata.hpp"

namespace fuscat {

// A two-block shuffle of {1,...,n+k}: perm holds the inverse images
// (s^-1(1),...,s^-1(n+k)), ascending within the first n and within the last k
// entries. Each shuffle cuts the line into black positions (first block) and
// white positions (second block).
struct Shuffle {
  std::vector<int> perm;  // 1-based positions
  int n = 0;
  int k = 0;

  void validate() const;  // throws std::invalid_argument
  // 'B' at the first-block positions, 'W' elsewhere; length n+k.
  std::string dots() const;
};

// All binomial(n+k, n) shuffles, first block in ascending lexicographic
// order, so the blacks-first shuffle comes first. Guarded at n+k <= 14.
std::vector<Shuffle> enumerate_w1(int n, int k);

// The weight pair cut out by a shuffle: row i of the first component is
// k + i - perm[i-1] (i = 1..n), row j of the second is n + j - perm[n+j-1].
// Both components are weakly decreasing and nonnegative; as partitions they
// are the dot-diagram partition of the shuffle and its box complement.
std::pair<std::vector<int>, std::vector<int>> kp_weight(const Shuffle& s);

// The four sectors of the rank-level decomposition: diagonal pairs (lambda,
// transpose) split by box parity into L0/L1, and antidiagonal pairs (lambda,
// complement) split into L+/L-.
enum class Sector { L0, L1, LPlus, LMinus };

std::string sector_name(Sector s);                 // "L0", "L1", "L+", "L-"
Sector sector_from_name(const std::string& name);  // throws on anything else

struct BranchingTable {
  int n = 0;
  int k = 0;
  // Indexed by Sector; pairs ordered by the first partition, graded-lex.
  std::array<std::vector<std::pair<Partition, Partition>>, 4> sectors;

  const std::vector<std::pair<Partition, Partition>>& sector(Sector s) const {
    return sectors[static_cast<int>(s)];
  }
};

// Guarded at n+k <= 14 like the shuffle enumeration.
BranchingTable branching_table(int n, int k);

struct BranchingReport {
  int n = 0;
  int k = 0;
  std::vector<Check> checks;

  bool pass() const { return all_pass(checks); }
};

// Exact rational checks tying the two symplectic categories at
// ell = 2n+2k+2 to the four-object orthogonal level-1 data: complement pairs
// sum to nk/4 mod 1, transpose pairs sum to the parity half-integer, sector
// gradings, the level-1 h vector, the full-rectangle parity rule, and the
// shuffle enumeration reproducing the antidiagonal sectors.
BranchingReport verify_branching(int n, int k);

// Numerical dimension identities for the same pair of categories: the global
// dimension product equals four times the squared even diagonal sum, the
// four-sector algebra is Lagrangian in the triple product, and all four
// sector sums agree. Gaps are relative; sum agreement uses sum_tol.
BranchingReport verify_etale_dims(int n, int k, double tol = 1e-6,
                                  double sum_tol = 1e-9);

}  // namespace fuscat
