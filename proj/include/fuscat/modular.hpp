#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "fuscat/rootdata.hpp"

namespace fuscat {

// Numerical modular data of a category spec. The S-matrix lives on the
// modular block (all labels for sp-even, even-box labels for sp-odd, integer
// labels for so-odd, nothing for so-level1); dims, twists, conformal weights
// and the grading cover the full label set.
struct ModularData {
  CategorySpec spec;
  std::vector<Label> labels;
  std::vector<int> block;    // indices into labels, in label order
  Eigen::MatrixXcd smatrix;  // block x block, unitary, S[0][0] > 0
  Eigen::VectorXd dims;
  std::vector<Rational> h;  // conformal weights mod 1
  Eigen::VectorXcd twists;  // exp(2 pi i h)
  std::vector<int> grading;  // Z/2; so-level1 packs two bits as 0..3

  int index_of(const Label& l) const;       // -1 if absent
  int block_position(int label_index) const;  // -1 if not in the block
};

// Quantum dimension by the Weyl product of sine ratios; may be negative for
// non-unitary specs.
double qdim(const CategorySpec& spec, const Label& label);

// h = a * casimir / (2 ell) mod 1, exact.
Rational conformal_weight(const CategorySpec& spec, const Label& label);

// theta = exp(2 pi i h) = q^(casimir).
std::complex<double> twist(const CategorySpec& spec, const Label& label);

// Z/2 grading: box-count parity for sp families, spin flag for so-odd;
// so-level1 returns the two-bit code.
int grading_of(const CategorySpec& spec, const Label& label);

// Unnormalized S: signed-permutation sum of q^(2<w(lambda+rho), mu+rho>).
// Guarded at rank <= 6.
Eigen::MatrixXcd smatrix_weyl_sum(const CategorySpec& spec,
                                  const std::vector<Label>& rows,
                                  const std::vector<Label>& cols);

// The same matrix as a rank x rank sine determinant per entry; any rank.
Eigen::MatrixXcd smatrix_det_sin(const CategorySpec& spec,
                                 const std::vector<Label>& rows,
                                 const std::vector<Label>& cols);

// Full pipeline. Normalizes S to a unitary matrix with S[0][0] > 0 and
// cross-checks: unitarity, symmetry, dims against the first S column, and
// (sp-even, rank <= 6) the determinant evaluation against the brute sum.
ModularData make_modular_data(const CategorySpec& spec, double tol = 1e-9);

// The four-object rank-4nk orthogonal level-1 category: labels [0, v, s+, s-],
// all dims 1, h = (0, 1/2, nk/4, nk/4), Z/2 x Z/2 fusion with v s± = s∓.
// s+ is fixed as the spinor pairing with the even-box sector.
ModularData so_level1_data(int n, int k);

// Indices of transparent labels, detected on the full label set from the
// unnormalized S (rank-1 column criterion).
std::vector<int> muger_center(const CategorySpec& spec, double tol = 1e-9);

// Braiding sign flip on the odd part: negates twists of odd labels and shifts
// their h by 1/2; S, dims, fusion and grading are untouched. An involution.
ModularData minus_transform(const ModularData& md);

}  // namespace fuscat
