#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "fuscat/partition.hpp"
#include "fuscat/rational.hpp"

namespace fuscat {

enum class Family { SpEven, SpOdd, SoOdd, SoLevel1 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Root data in the orthogonal coordinate basis. Type C: roots e_i±e_j, 2e_i,
// half-sum rho = (n,...,1), inner product <e_i,e_j> = d_ij. Type B: roots
// e_i±e_j, e_i, rho = (k-1/2,...,1/2), form scaled so <e_i,e_j> = 2 d_ij;
// the scale is fixed by the braiding-eigenvalue normalization.
struct RootSystem {
  enum class Kind { C, B };
  Kind kind;
  int rank;

  int form_scale() const { return kind == Kind::C ? 1 : 2; }
  // Doubled Weyl vector 2*rho, integral for both kinds.
  std::vector<int> rho2() const;
  // Positive roots as integer coordinate vectors.
  std::vector<std::vector<int>> positive_roots() const;
};

// Simple object label: a partition, with a spin flag for type-B weights
// shifted by (1/2,...,1/2). The partition of a spin label is the integer part.
struct Label {
  Partition partition;
  bool spin = false;

  // Doubled weight vector 2*lambda (spin adds 1 to every coordinate), padded
  // to the given rank.
  std::vector<int> doubled_weight(int rank) const;

  bool operator==(const Label&) const = default;
  bool operator<(const Label& o) const {
    if (spin != o.spin) return !spin;
    return partition < o.partition;
  }
  // Spin labels render with half-integer parts padded to the rank: "(3/2,1/2)".
  std::string str(int rank = 0) const;
};

// A category in one of the four families, pinned by rank, the root-of-unity
// order ell and the exponent a in q = exp(i*pi*a/ell).
struct CategorySpec {
  Family family = Family::SpEven;
  int rank = 0;  // n for sp families, k for so-odd, 4nk for so-level1
  int ell = 0;
  int a = 1;

  static CategorySpec sp_even(int n, int k, int a = 1);
  static CategorySpec sp_even_ell(int n, int ell, int a = 1);
  static CategorySpec sp_odd(int n, int ell, int a = 1);
  static CategorySpec so_odd(int k, int ell, int a = 1);
  static CategorySpec so_level1(int n, int k);

  void validate() const;  // throws std::invalid_argument on a bad spec
  // Alcove width: k for sp families, n for so-odd.
  int level() const;
  RootSystem root_system() const;  // not available for so-level1

  bool operator==(const CategorySpec&) const = default;
  std::string str() const;
};

// Simple-object labels in graded-lex order (integer labels before spin
// labels for so-odd); the unit comes first.
std::vector<Label> label_set(const CategorySpec& spec);

bool label_set_contains(const CategorySpec& spec, const Label& label);

// Casimir number <lambda + 2 rho, lambda> in the family form; half-integers
// occur for type-B spin weights.
Rational casimir(const Label& label, const RootSystem& rs);

// Signed permutations (sigma, eps) with det = sgn(sigma) * prod(eps); the Weyl
// group of both root-system kinds. Calls f(sigma, eps, det) once per element,
// where sigma maps position i to sigma[i] and eps holds the signs. Guarded at
// rank <= 10 (2^n n! elements).
template <typename F>
void for_each_weyl_element(int rank, F&& f);

long long weyl_order(int rank);

namespace detail {
void check_weyl_rank(int rank);
}

template <typename F>
void for_each_weyl_element(int rank, F&& f) {
  detail::check_weyl_rank(rank);
  std::vector<int> sigma(rank);
  for (int i = 0; i < rank; ++i) sigma[i] = i;
  std::vector<int> eps(rank, 1);
  do {
    // Parity of the permutation by counting inversions.
    int inv = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (sigma[i] > sigma[j]) ++inv;
    int base_det = (inv % 2 == 0) ? 1 : -1;
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      int det = base_det;
      for (int i = 0; i < rank; ++i) {
        eps[i] = (mask >> i) & 1u ? -1 : 1;
        if (eps[i] < 0) det = -det;
      }
      f(sigma, eps, det);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace fuscat
