#include "fuscat/suite.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "fuscat/branching.hpp"
#include "fuscat/duality.hpp"
#include "fuscat/fusion.hpp"
#include "fuscat/modular.hpp"
#include "fuscat/partition.hpp"
#include "fuscat/rootdata.hpp"

namespace fuscat {
namespace {

// Pinned tolerances. These are the release bar, not knobs.
constexpr double kSTol = 1e-9;        // S-matrix checks and duality sweeps
constexpr double kFusionTol = 1e-6;   // Verlinde integrality
constexpr double kTripleTol = 1e-12;  // closed-form eigenvalue triples
constexpr double kAnchorTol = 1e-12;  // the scalar anchor inside even duality
constexpr double kExactTol = 1e-12;   // case-table values inside odd duality
constexpr double kEtaleRel = 1e-6;    // relative gaps of dimension sums
constexpr double kEtaleSum = 1e-9;    // agreement of the four sector sums

using cd = std::complex<double>;
using Triple = std::array<cd, 3>;

std::string fmt(double x) {
  char b[32];
  std::snprintf(b, sizeof(b), "%.3g", x);
  return b;
}

std::string pair_tag(int n, int k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

void fail(CriterionResult& c, const std::string& what) { c.failures.push_back(what); }

double triple_gap(const Triple& x, const Triple& y) {
  double g = 0.0;
  for (int i = 0; i < 3; ++i) g = std::max(g, std::abs(x[i] - y[i]));
  return g;
}

Triple scale(Triple t, double s) {
  for (cd& z : t) z *= s;
  return t;
}

long long binomial(int m, int r) {
  if (r < 0 || r > m) return 0;
  long long out = 1;
  for (int i = 1; i <= r; ++i) out = out * (m - r + i) / i;
  return out;
}

bool same_tables(const std::vector<Eigen::MatrixXi>& x,
                 const std::vector<Eigen::MatrixXi>& y) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].rows() != y[i].rows() || x[i].cols() != y[i].cols()) return false;
    if (!(x[i].array() == y[i].array()).all()) return false;
  }
  return true;
}

CriterionResult combinatorics_goldens() {
  CriterionResult c;
  c.id = 1;
  c.name = "rectangle combinatorics worked examples";
  int total = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++total;
    if (!ok) fail(c, what);
  };

  const Rectangle r32{3, 2};
  const Partition p{2, 1, 1};
  expect(transpose(p) == Partition{3, 1}, "transpose of (2,1,1)");
  expect(complement(p, r32) == Partition{2}, "complement of (2,1,1) in the 3x2 box");
  expect(tc(p, r32) == Partition{1, 1}, "transpose-complement of (2,1,1) in the 3x2 box");

  const Rectangle r76{7, 6};
  const Partition lam{6, 6, 5, 5, 5, 5, 2};
  const Partition lamc{5, 1, 1, 1};
  expect(complement(lam, r76) == lamc, "complement of the 7x6 example");
  expect(to_affine(lam, r76) == AffineWeight({0, 0, 1, 0, 0, 0, 3, 2}),
         "affine marks of the 7x6 example");
  expect(from_affine(AffineWeight({0, 0, 1, 0, 0, 0, 3, 2})) == lam,
         "affine marks round-trip");
  expect(to_affine(lamc, Rectangle{6, 7}) == AffineWeight({2, 4, 0, 0, 1, 0, 0}),
         "affine marks of the complement");

  const std::string dots = "BBWBBBBWWWBWW";
  expect(dot_diagram(lam, r76) == dots, "dot diagram of the 7x6 example");
  expect(read_dots_black(dots) == lam, "black reading of the dot diagram");
  expect(read_dots_white(dots) == lamc, "white reading of the dot diagram");

  c.summary = std::to_string(total) + " exact identities, zero tolerance";
  c.pass = c.failures.empty();
  return c;
}

CriterionResult modular_routes(int max_sum) {
  CriterionResult c;
  c.id = 2;
  c.name = "modular data sanity and matching fusion routes";
  int count = 0;
  double worst_u = 0.0, worst_s = 0.0;
  for (int n = 1; n < max_sum; ++n)
    for (int k = 1; n + k <= max_sum; ++k) {
      const std::string tag = "sp-even " + pair_tag(n, k);
      try {
        const CategorySpec spec = CategorySpec::sp_even(n, k);
        const ModularData md = make_modular_data(spec, kSTol);
        const Eigen::MatrixXcd& S = md.smatrix;
        const int B = static_cast<int>(S.rows());
        const double gu =
            (S * S.adjoint() - Eigen::MatrixXcd::Identity(B, B)).cwiseAbs().maxCoeff();
        const double gs = (S - S.transpose()).cwiseAbs().maxCoeff();
        worst_u = std::max(worst_u, gu);
        worst_s = std::max(worst_s, gs);
        if (gu > kSTol) fail(c, tag + ": unitarity gap " + fmt(gu));
        if (gs > kSTol) fail(c, tag + ": symmetry gap " + fmt(gs));
        const auto verlinde = verlinde_block(md, kFusionTol);
        const auto integer_route = kac_walton_table(spec, md.labels);
        if (!same_tables(verlinde, integer_route))
          fail(c, tag + ": the two fusion routes disagree");
        ++count;
      } catch (const std::exception& e) {
        fail(c, tag + ": " + e.what());
      }
    }
  c.summary = std::to_string(count) + " specs, worst unitarity gap " + fmt(worst_u) +
              ", worst symmetry gap " + fmt(worst_s);
  c.pass = c.failures.empty();
  return c;
}

CriterionResult even_duality(int max_sum) {
  CriterionResult c;
  c.id = 3;
  c.name = "even-level duality sweep";
  int count = 0;
  double worst = 0.0, worst_anchor = 0.0;
  for (int n = 1; n < max_sum; ++n)
    for (int k = 1; n + k <= max_sum; ++k) {
      const std::string tag = "sp-even " + pair_tag(n, k);
      try {
        const DualityReport rep = verify_sp_sp(n, k, kSTol);
        ++count;
        for (const Check& ch : rep.checks) {
          worst = std::max(worst, ch.gap);
          if (!ch.pass) fail(c, tag + ": " + ch.name + " (gap " + fmt(ch.gap) + ")");
          if (ch.name.rfind("scalar anchor", 0) == 0) {
            worst_anchor = std::max(worst_anchor, ch.gap);
            if (ch.gap > kAnchorTol)
              fail(c, tag + ": anchor gap " + fmt(ch.gap) + " above " + fmt(kAnchorTol));
          }
        }
      } catch (const std::exception& e) {
        fail(c, tag + ": " + e.what());
      }
    }
  c.summary = std::to_string(count) + " pairs, worst gap " + fmt(worst) +
              ", worst anchor gap " + fmt(worst_anchor);
  c.pass = c.failures.empty();
  return c;
}

CriterionResult triple_forms(int max_sum) {
  CriterionResult c;
  c.id = 4;
  c.name = "eigenvalue triple closed forms and the dual transform";
  int transforms = 0, computed = 0;
  double worst = 0.0;
  auto check_gap = [&](double g, const std::string& what) {
    worst = std::max(worst, g);
    if (g > kTripleTol) fail(c, what + " (gap " + fmt(g) + ")");
  };
  auto check_computed = [&](const CategorySpec& spec, const Triple& closed,
                            const std::string& tag) {
    try {
      const Triple got = eigenvalue_triple(spec);
      ++computed;
      check_gap(triple_gap(got, closed), tag);
    } catch (const std::domain_error&) {
      // the square labels do not fit at this size; nothing to compare
    } catch (const std::exception& e) {
      fail(c, tag + ": " + e.what());
    }
  };

  for (int n = 1; n < max_sum; ++n)
    for (int k = 1; n + k <= max_sum; ++k) {
      const int ell = 2 * (n + k) + 2;
      ++transforms;
      check_gap(triple_gap(dual_triple(sp_triple(k, ell, 1)), sp_triple(n, ell, 1)),
                "even transform " + pair_tag(n, k));
      check_computed(CategorySpec::sp_even(n, k), sp_triple(n, ell, 1),
                     "sp-even computed triple " + pair_tag(n, k));
    }

  for (int n = 1; n < max_sum - 2; ++n)
    for (int k = 1; n + k <= max_sum - 2; ++k) {
      const int ell = 2 * (n + k) + 1;
      for (int caseno = 1; caseno <= 2; ++caseno) {
        const int ap = caseno == 1 ? 1 : 2;
        const int aq = caseno == 1 ? (ell + 1) / 2 : 1;
        const double sign = caseno == 1 ? -1.0 : 1.0;
        const std::string tag = pair_tag(n, k) + " case " + std::to_string(caseno);
        ++transforms;
        check_gap(triple_gap(dual_triple(so_triple(k, ell, aq)),
                             scale(sp_triple(n, ell, ap), sign)),
                  "odd transform " + tag);
        check_computed(CategorySpec::sp_odd(n, ell, ap), sp_triple(n, ell, ap),
                       "sp-odd computed triple " + tag);
        check_computed(CategorySpec::so_odd(k, ell, aq), so_triple(k, ell, aq),
                       "so-odd computed triple " + tag);
      }
    }

  c.summary = std::to_string(transforms) + " transform identities, " +
              std::to_string(computed) + " computed triples, worst gap " + fmt(worst);
  c.pass = c.failures.empty();
  return c;
}

CriterionResult odd_duality(int max_sum) {
  CriterionResult c;
  c.id = 5;
  c.name = "odd-level duality sweep, both exponent cases";
  static const char* exact_names[] = {
      "sp boundary dimension is -1",    "sp boundary twist is (-1)^a",
      "sp center is the boundary pair", "so top spin twist closed form",
      "so top spin has unit dimension", "so center matches the parity rule"};
  int count = 0;
  double worst = 0.0;
  for (int n = 1; n < max_sum - 2; ++n)
    for (int k = 1; n + k <= max_sum - 2; ++k)
      for (int caseno = 1; caseno <= 2; ++caseno) {
        const std::string tag = "odd " + pair_tag(n, k) + " case " + std::to_string(caseno);
        try {
          const DualityReport rep = verify_sp_so_odd(n, k, caseno, kSTol);
          ++count;
          for (const Check& ch : rep.checks) {
            worst = std::max(worst, ch.gap);
            if (!ch.pass) fail(c, tag + ": " + ch.name + " (gap " + fmt(ch.gap) + ")");
            for (const char* name : exact_names)
              if (ch.name == name && ch.gap > kExactTol)
                fail(c, tag + ": " + ch.name + " off the exact value by " + fmt(ch.gap));
          }
        } catch (const std::exception& e) {
          fail(c, tag + ": " + e.what());
        }
      }
  c.summary = std::to_string(count) + " verifications, worst gap " + fmt(worst);
  c.pass = c.failures.empty();
  return c;
}

CriterionResult shuffle_oracle(int max_sum) {
  CriterionResult c;
  c.id = 6;
  c.name = "shuffle weights against the complement pairing";
  int rectangles = 0;
  long long total = 0;
  for (int n = 1; n < max_sum + 2; ++n)
    for (int k = 1; n + k <= max_sum + 2; ++k) {
      const std::string tag = pair_tag(n, k);
      try {
        const auto shuffles = enumerate_w1(n, k);
        if (static_cast<long long>(shuffles.size()) != binomial(n + k, n))
          fail(c, tag + ": expected " + std::to_string(binomial(n + k, n)) +
                      " shuffles, got " + std::to_string(shuffles.size()));
        std::vector<std::pair<Partition, Partition>> got;
        got.reserve(shuffles.size());
        for (const Shuffle& s : shuffles) {
          const auto [w1, w2] = kp_weight(s);
          got.emplace_back(Partition(w1), Partition(w2));
        }
        std::vector<std::pair<Partition, Partition>> want;
        const Rectangle rect{n, k};
        for (const Partition& lam : enumerate_rectangle(rect))
          want.emplace_back(lam, complement(lam, rect));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) fail(c, tag + ": weight pairs differ from the complement pairing");
        rectangles += 1;
        total += static_cast<long long>(shuffles.size());
      } catch (const std::exception& e) {
        fail(c, tag + ": " + e.what());
      }
    }
  c.summary = std::to_string(rectangles) + " rectangles, " + std::to_string(total) +
              " shuffles checked exactly";
  c.pass = c.failures.empty();
  return c;
}

CriterionResult branching_exact(int max_sum) {
  CriterionResult c;
  c.id = 7;
  c.name = "branching gradings and weight sums";
  int count = 0;
  for (int n = 1; n < max_sum; ++n)
    for (int k = 1; n + k <= max_sum; ++k) {
      const std::string tag = pair_tag(n, k);
      try {
        const BranchingReport rep = verify_branching(n, k);
        ++count;
        for (const Check& ch : rep.checks)
          if (!ch.pass || ch.gap != 0.0) fail(c, tag + ": " + ch.name);
      } catch (const std::exception& e) {
        fail(c, tag + ": " + e.what());
      }
    }
  c.summary = std::to_string(count) + " rectangles, every check exact";
  c.pass = c.failures.empty();
  return c;
}

CriterionResult sector_dimensions(int max_sum) {
  CriterionResult c;
  c.id = 8;
  c.name = "sector dimension sums and the global dimension identity";
  int count = 0;
  double worst = 0.0;
  for (int n = 1; n < max_sum; ++n)
    for (int k = 1; n + k <= max_sum; ++k) {
      const std::string tag = pair_tag(n, k);
      try {
        const BranchingReport rep = verify_etale_dims(n, k, kEtaleRel, kEtaleSum);
        ++count;
        for (const Check& ch : rep.checks) {
          worst = std::max(worst, ch.gap);
          if (!ch.pass) fail(c, tag + ": " + ch.name + " (gap " + fmt(ch.gap) + ")");
        }
      } catch (const std::exception& e) {
        fail(c, tag + ": " + e.what());
      }
    }
  c.summary = std::to_string(count) + " rectangles, worst relative gap " + fmt(worst);
  c.pass = c.failures.empty();
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int max_sum) {
  if (max_sum < 2) throw std::invalid_argument("run_acceptance: max_sum must be at least 2");
  std::vector<CriterionResult> out;
  out.push_back(combinatorics_goldens());
  out.push_back(modular_routes(max_sum));
  out.push_back(even_duality(max_sum));
  out.push_back(triple_forms(max_sum));
  out.push_back(odd_duality(max_sum));
  out.push_back(shuffle_oracle(max_sum));
  out.push_back(branching_exact(max_sum));
  out.push_back(sector_dimensions(max_sum));
  return out;
}

}  // namespace fuscat
