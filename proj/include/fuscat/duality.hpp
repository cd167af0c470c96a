#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "fuscat/checks.hpp"
#include "fuscat/rootdata.hpp"

namespace fuscat {

// Outcome of pairing two category specs: the check list, plus the label
// matching that realized the pairing (left label, right label as strings).
struct DualityReport {
  CategorySpec left;
  CategorySpec right;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> matching;

  bool pass() const { return all_pass(checks); }
};

// Braiding eigenvalues on the two-fold product of the one-box object,
// ordered [unit, (2), (1,1)], computed from Casimir numbers with sign +1 on
// the symmetric summands. Needs rank >= 2 so (1,1) is a label.
std::array<std::complex<double>, 3> eigenvalue_triple(const CategorySpec& spec);

// Closed forms of the same triples, with q = exp(i pi a / ell):
// symplectic rank n gives [-q^(-2n-1), q, -q^(-1)]; odd orthogonal rank k
// gives [q^(-4k), q^2, -q^(-2)].
std::array<std::complex<double>, 3> sp_triple(int n, int ell, int a);
std::array<std::complex<double>, 3> so_triple(int k, int ell, int a);

// Swap the last two entries, then invert and negate each: the transform that
// carries one side's triple to the other side's.
std::array<std::complex<double>, 3> dual_triple(
    const std::array<std::complex<double>, 3>& t);

// Rank-level pairing at even ell = 2n+2k+2: the full modular data of
// sp(2n) level k against the braiding-reversed data of sp(2k) level n,
// matched by transposing partitions. Checks fusion rules, twist products,
// S-matrix conjugation, dimensions, the scalar anchor q^(2k+1) = -q^(-2n-1)
// and the eigenvalue-triple calculus.
DualityReport verify_sp_sp(int n, int k, double tol = 1e-9);

// Odd-order pairing at ell = 2n+2k+1 between sp(2n) at exponent a_P and
// so(2k+1) at exponent a_Q. exponent_case 1 takes (a_P, a_Q) = (1, (ell+1)/2),
// case 2 takes (2, 1). Matches the integer-label block of the orthogonal side
// with the even-box block of the symplectic side by a ring isomorphism seeded
// at the one-box generator paired with (boundary x one-box); checks twists,
// S-matrices, the invertible boundary labels on both sides and the scalar
// eigenvalue bookkeeping.
DualityReport verify_sp_so_odd(int n, int k, int exponent_case,
                               double tol = 1e-9);

}  // namespace fuscat
