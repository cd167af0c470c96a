#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "fuscat/modular.hpp"
#include "fuscat/rootdata.hpp"

namespace fuscat {

// Structure constants N[a](b,c) of the fusion ring over the full label set.
struct FusionTable {
  CategorySpec spec;
  std::vector<Label> labels;
  std::vector<Eigen::MatrixXi> table;

  int count() const { return static_cast<int>(labels.size()); }
  int coeff(int a, int b, int c) const { return table[a](b, c); }
  int index_of(const Label& l) const;
};

// Labels reachable from `label` by adding or removing one box, restricted to
// the label set: the generic vector-representation tensor rule.
std::vector<Label> fuse_one_box(const CategorySpec& spec, const Label& label);

// N_a = S diag(S_ax / S_0x) S* over the modular block, rounded to integers.
// Throws if any entry is farther than tol from a nonnegative integer.
std::vector<Eigen::MatrixXi> verlinde_block(const ModularData& md, double tol);

// Exact integer route for the even-ell symplectic table: Freudenthal weight
// multiplicities, the Klimyk expansion of the classical tensor product, and
// affine folding into the level alcove. No floating point, no S-matrix.
std::vector<Eigen::MatrixXi> kac_walton_table(const CategorySpec& spec,
                                              const std::vector<Label>& labels);

// Full table with cross-checks: sp-even runs Verlinde and the integer route
// and demands exact agreement; odd ell extends Verlinde on the block through
// the invertible action matched by characters; so-level1 is the group table.
// Guarded at 300 labels.
FusionTable fusion_table(const CategorySpec& spec, double tol = 1e-6);

// Regular-representation associativity: L_a L_b = sum_c N_ab^c L_c for all
// pairs. Quadratic in pairs, cubic per product; intended for moderate sizes.
bool is_associative(const FusionTable& f);

// Per-label gap between the table row of the one-box label and the plain
// ±box rule: how many labels appear in exactly one of the two sets. Labels
// with gap zero are omitted.
std::vector<std::pair<Label, int>> one_box_discrepancies(
    const CategorySpec& spec, double tol = 1e-6);

// Does map (f1 indices -> f2 indices) carry every structure constant over?
bool tables_match_under(const FusionTable& f1, const FusionTable& f2,
                        const std::vector<int>& map);

// All bijections fixing the unit, sending gen1 to gen2 and preserving every
// structure constant. Empty when the rings are not isomorphic that way;
// throws if gen1 does not generate f1.
std::vector<std::vector<int>> find_ring_isomorphism(const FusionTable& f1,
                                                    int gen1,
                                                    const FusionTable& f2,
                                                    int gen2);

}  // namespace fuscat
