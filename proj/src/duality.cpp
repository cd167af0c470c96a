#include "fuscat/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fuscat/fusion.hpp"
#include "fuscat/modular.hpp"

namespace fuscat {

namespace {

using cd = std::complex<double>;

// q^m for q = exp(i pi a / ell).
cd unit_phase(int a, long long m, int ell) {
  return std::polar(1.0, std::numbers::pi * static_cast<double>(a) *
                             static_cast<double>(m) / static_cast<double>(ell));
}

void add(std::vector<Check>& cs, std::string name, bool pass, double gap,
         std::string detail = "") {
  cs.push_back(Check{std::move(name), pass, gap, std::move(detail)});
}

double triple_gap(const std::array<cd, 3>& u, const std::array<cd, 3>& v) {
  double g = 0.0;
  for (int i = 0; i < 3; ++i) g = std::max(g, std::abs(u[i] - v[i]));
  return g;
}

// Restriction of a fusion table to a sublist of label indices. Throws if the
// sublist is not closed under fusion.
FusionTable restrict_table(const FusionTable& f, const std::vector<int>& keep) {
  const int m = static_cast<int>(keep.size());
  FusionTable out;
  out.spec = f.spec;
  for (int i : keep) out.labels.push_back(f.labels[i]);
  out.table.assign(m, Eigen::MatrixXi::Zero(m, m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      long long total = 0;
      for (int c = 0; c < f.count(); ++c) total += f.table[keep[a]](keep[b], c);
      long long kept = 0;
      for (int c = 0; c < m; ++c) {
        const int v = f.table[keep[a]](keep[b], keep[c]);
        out.table[a](b, c) = v;
        kept += v;
      }
      if (kept != total)
        throw std::logic_error("restrict_table: sublist not closed under fusion");
    }
  return out;
}

// The unique c with N(inv, b, c) = 1 for an invertible label inv.
int invertible_product(const FusionTable& f, int inv, int b) {
  int found = -1;
  for (int c = 0; c < f.count(); ++c) {
    const int v = f.table[inv](b, c);
    if (v == 0) continue;
    if (v != 1 || found >= 0)
      throw std::logic_error("invertible_product: row is not a permutation");
    found = c;
  }
  if (found < 0) throw std::logic_error("invertible_product: empty row");
  return found;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const Label kOne{Partition{1}, false};
const Label kTwo{Partition{2}, false};
const Label kOneOne{Partition{1, 1}, false};

bool has_square_labels(const CategorySpec& spec) {
  return label_set_contains(spec, kTwo) && label_set_contains(spec, kOneOne);
}

}  // namespace

std::array<cd, 3> eigenvalue_triple(const CategorySpec& spec) {
  spec.validate();
  if (spec.family == Family::SoLevel1)
    throw std::domain_error("eigenvalue_triple: no one-box object at level 1");
  if (!has_square_labels(spec))
    throw std::domain_error("eigenvalue_triple: needs (2) and (1,1) as labels");
  const RootSystem rs = spec.root_system();
  const Rational cx = casimir(kOne, rs);
  // The unit sits in the symmetric square for the orthogonal form, in the
  // alternating square for the symplectic one; (2) is always symmetric and
  // (1,1) always alternating.
  const std::array<Label, 3> summands = {Label{}, kTwo, kOneOne};
  const std::array<int, 3> sign = {rs.kind == RootSystem::Kind::B ? 1 : -1, 1,
                                   -1};
  std::array<cd, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Rational e = casimir(summands[i], rs) / 2 - cx;
    out[i] = static_cast<double>(sign[i]) *
             std::polar(1.0, std::numbers::pi * spec.a * e.value() / spec.ell);
  }
  return out;
}

std::array<cd, 3> sp_triple(int n, int ell, int a) {
  return {-unit_phase(a, -(2 * n + 1), ell), unit_phase(a, 1, ell),
          -unit_phase(a, -1, ell)};
}

std::array<cd, 3> so_triple(int k, int ell, int a) {
  return {unit_phase(a, -4 * k, ell), unit_phase(a, 2, ell),
          -unit_phase(a, -2, ell)};
}

std::array<cd, 3> dual_triple(const std::array<cd, 3>& t) {
  return {-1.0 / t[0], -1.0 / t[2], -1.0 / t[1]};
}

DualityReport verify_sp_sp(int n, int k, double tol) {
  const int ell = 2 * (n + k) + 2;
  DualityReport rep;
  rep.left = CategorySpec::sp_even(n, k);
  rep.right = CategorySpec::sp_even(k, n);
  const ModularData mdL = make_modular_data(rep.left);
  const ModularData mdR = minus_transform(make_modular_data(rep.right));
  const FusionTable fL = fusion_table(rep.left);
  const FusionTable fR = fusion_table(rep.right);

  const int count = fL.count();
  std::vector<int> map(count, -1);
  std::vector<int> seen(fR.count(), 0);
  bool bij = fR.count() == count;
  for (int i = 0; i < count && bij; ++i) {
    const int j = fR.index_of(Label{transpose(fL.labels[i].partition), false});
    if (j < 0 || seen[j]) {
      bij = false;
      break;
    }
    seen[j] = 1;
    map[i] = j;
  }
  add(rep.checks, "transpose maps labels bijectively", bij, 0.0);
  if (!bij) return rep;
  for (int i = 0; i < count; ++i)
    rep.matching.emplace_back(fL.labels[i].str(rep.left.rank),
                              fR.labels[map[i]].str(rep.right.rank));

  add(rep.checks, "fusion rules match under transpose",
      tables_match_under(fL, fR, map), 0.0);

  double tgap = 0.0;
  for (int i = 0; i < count; ++i)
    tgap = std::max(tgap,
                    std::abs(mdL.twists[i] * mdR.twists[map[i]] - cd(1.0)));
  add(rep.checks, "twists multiply to one", tgap <= tol, tgap);

  double sgap = 0.0;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const cd lhs = mdL.smatrix(mdL.block_position(i), mdL.block_position(j));
      const cd rhs = mdR.smatrix(mdR.block_position(map[i]),
                                 mdR.block_position(map[j]));
      sgap = std::max(sgap, std::abs(lhs - std::conj(rhs)));
    }
  add(rep.checks, "s-matrices conjugate-match", sgap <= tol, sgap);

  double dgap = 0.0;
  for (int i = 0; i < count; ++i)
    dgap = std::max(dgap, std::abs(mdL.dims[i] - mdR.dims[map[i]]));
  add(rep.checks, "dimensions match", dgap <= tol, dgap);

  const double agap =
      std::abs(unit_phase(1, 2 * k + 1, ell) + unit_phase(1, -(2 * n + 1), ell));
  add(rep.checks, "scalar anchor q^(2k+1) = -q^(-2n-1)", agap <= tol, agap);

  if (has_square_labels(rep.left)) {
    const double g = triple_gap(eigenvalue_triple(rep.left), sp_triple(n, ell, 1));
    add(rep.checks, "one-box square eigenvalues, left closed form", g <= tol, g);
  }
  if (has_square_labels(rep.right)) {
    const double g =
        triple_gap(eigenvalue_triple(rep.right), sp_triple(k, ell, 1));
    add(rep.checks, "one-box square eigenvalues, right closed form", g <= tol,
        g);
  }
  const double cg =
      triple_gap(dual_triple(sp_triple(k, ell, 1)), sp_triple(n, ell, 1));
  add(rep.checks, "triple transform carries right to left", cg <= tol, cg);

  return rep;
}

DualityReport verify_sp_so_odd(int n, int k, int exponent_case, double tol) {
  if (exponent_case != 1 && exponent_case != 2)
    throw std::invalid_argument("verify_sp_so_odd: exponent_case must be 1 or 2");
  const int ell = 2 * (n + k) + 1;
  const int aP = exponent_case == 1 ? 1 : 2;
  const int aQ = exponent_case == 1 ? (ell + 1) / 2 : 1;
  DualityReport rep;
  rep.left = CategorySpec::sp_odd(n, ell, aP);
  rep.right = CategorySpec::so_odd(k, ell, aQ);
  const ModularData mdC = make_modular_data(rep.left);
  const ModularData mdB = make_modular_data(rep.right);
  const FusionTable fC = fusion_table(rep.left);
  const FusionTable fB = fusion_table(rep.right);

  const Label eta{Partition{ell - 2 * n}, false};
  const Label gamma{Partition(std::vector<int>(static_cast<size_t>(k), n)),
                    true};
  const int etaC = fC.index_of(eta);
  const int gamB = fB.index_of(gamma);
  const int oneC = fC.index_of(kOne);

  int ximage = -1;
  std::string xdetail;
  try {
    ximage = invertible_product(fC, etaC, oneC);
    xdetail = "(1) pairs with " + fC.labels[ximage].str(rep.left.rank);
  } catch (const std::logic_error&) {
  }
  add(rep.checks, "boundary label pairs the one-box generator", ximage >= 0,
      0.0, xdetail);
  if (ximage < 0) return rep;

  const FusionTable fB0 = restrict_table(fB, mdB.block);
  const FusionTable fC0 = restrict_table(fC, mdC.block);
  const long long expected = binomial(n + k, n);
  const bool sizes_ok = fB0.count() == fC0.count() && fB0.count() == expected;
  add(rep.checks, "block sizes match the binomial count", sizes_ok, 0.0,
      std::to_string(fB0.count()) + " labels per block");
  if (!sizes_ok) return rep;

  int g0B = -1;
  int g0C = -1;
  for (int p = 0; p < fB0.count(); ++p)
    if (fB0.labels[p] == kOne) g0B = p;
  for (int p = 0; p < fC0.count(); ++p)
    if (fC0.labels[p] == fC.labels[ximage]) g0C = p;
  std::vector<std::vector<int>> isos;
  bool gen_ok = g0B >= 0 && g0C >= 0;
  if (gen_ok) {
    try {
      isos = find_ring_isomorphism(fB0, g0B, fC0, g0C);
    } catch (const std::exception&) {
      gen_ok = false;
    }
  }
  add(rep.checks, "one-box generates the block ring", gen_ok, 0.0);
  add(rep.checks, "block rings isomorphic from the seeded generator",
      gen_ok && !isos.empty(), 0.0,
      std::to_string(isos.size()) + " candidate matchings");
  if (!gen_ok || isos.empty()) return rep;

  // Among the candidate ring matchings keep the one that best aligns the
  // numerical data; the report records its gaps.
  int best = -1;
  double best_t = 0.0;
  double best_s = 0.0;
  for (int m = 0; m < static_cast<int>(isos.size()); ++m) {
    double tg = 0.0;
    double sg = 0.0;
    for (int y = 0; y < fB0.count(); ++y) {
      const cd prod = mdB.twists[mdB.block[y]] * mdC.twists[mdC.block[isos[m][y]]];
      tg = std::max(tg, std::abs(prod - cd(1.0)));
      for (int z = 0; z < fB0.count(); ++z)
        sg = std::max(sg, std::abs(mdB.smatrix(y, z) -
                                   std::conj(mdC.smatrix(isos[m][y],
                                                         isos[m][z]))));
    }
    if (best < 0 || std::max(tg, sg) < std::max(best_t, best_s)) {
      best = m;
      best_t = tg;
      best_s = sg;
    }
  }
  add(rep.checks, "twists multiply to one on the block", best_t <= tol, best_t);
  add(rep.checks, "s-matrices conjugate-match on the block", best_s <= tol,
      best_s);
  const std::vector<int>& phi = isos[best];

  // Extend block-to-block over the odd parts through the invertible pairing
  // and demand a full fusion-ring isomorphism.
  std::vector<int> full_map(fB.count(), -1);
  for (int y = 0; y < fB0.count(); ++y)
    full_map[mdB.block[y]] = mdC.block[phi[y]];
  bool ext_ok = gamB >= 0;
  if (ext_ok) {
    try {
      for (int y = 0; y < fB0.count(); ++y) {
        const int oB = invertible_product(fB, gamB, mdB.block[y]);
        const int oC = invertible_product(fC, etaC, full_map[mdB.block[y]]);
        if (full_map[oB] >= 0 && full_map[oB] != oC) ext_ok = false;
        full_map[oB] = oC;
      }
    } catch (const std::logic_error&) {
      ext_ok = false;
    }
    for (int i : full_map)
      if (i < 0) ext_ok = false;
  }
  add(rep.checks, "full fusion rings match", ext_ok && tables_match_under(fB, fC, full_map),
      0.0);
  if (ext_ok)
    for (int i = 0; i < fB.count(); ++i)
      rep.matching.emplace_back(fC.labels[full_map[i]].str(rep.left.rank),
                                fB.labels[i].str(rep.right.rank));

  // Scalar eigenvalue bookkeeping: the dual transform of the orthogonal
  // triple is the symplectic one up to the boundary twist (-1)^a.
  const double sign = aP % 2 == 0 ? 1.0 : -1.0;
  const std::array<cd, 3> sp3 = sp_triple(n, ell, aP);
  std::array<cd, 3> want = sp3;
  for (cd& v : want) v *= sign;
  const double bg = triple_gap(dual_triple(so_triple(k, ell, aQ)), want);
  add(rep.checks, "scalar eigenvalue bookkeeping", bg <= tol, bg,
      aP % 2 == 0 ? "boundary twist +1" : "boundary twist -1");

  const double edgap = std::abs(mdC.dims[etaC] + 1.0);
  add(rep.checks, "sp boundary dimension is -1", edgap <= tol, edgap);
  const cd theta_eta = aP % 2 == 0 ? cd(1.0) : cd(-1.0);
  const double etgap = std::abs(mdC.twists[etaC] - theta_eta);
  add(rep.checks, "sp boundary twist is (-1)^a", etgap <= tol, etgap);
  const std::vector<int> centerC = muger_center(rep.left);
  add(rep.checks, "sp center is the boundary pair",
      centerC == std::vector<int>{0, etaC}, 0.0);

  const cd theta_gamma_expect = std::polar(
      1.0, std::numbers::pi * aQ * k * (ell - 2 * k) / 2.0);
  const double gtgap = std::abs(mdB.twists[gamB] - theta_gamma_expect);
  add(rep.checks, "so top spin twist closed form", gamB >= 0 && gtgap <= tol,
      gtgap);
  const double gdgap = std::abs(std::abs(mdB.dims[gamB]) - 1.0);
  add(rep.checks, "so top spin has unit dimension", gdgap <= tol, gdgap);
  const bool gamma_transparent = k % 2 == 0 || aQ % 2 == 0;
  const std::vector<int> centerB = muger_center(rep.right);
  const std::vector<int> expect_center =
      gamma_transparent ? std::vector<int>{0, gamB} : std::vector<int>{0};
  add(rep.checks, "so center matches the parity rule", centerB == expect_center,
      0.0, gamma_transparent ? "top spin transparent" : "top spin is a semion");

  if (has_square_labels(rep.left)) {
    const double g = triple_gap(eigenvalue_triple(rep.left), sp3);
    add(rep.checks, "one-box square eigenvalues, sp closed form", g <= tol, g);
  }
  if (has_square_labels(rep.right)) {
    const double g =
        triple_gap(eigenvalue_triple(rep.right), so_triple(k, ell, aQ));
    add(rep.checks, "one-box square eigenvalues, so closed form", g <= tol, g);
  }

  return rep;
}

}  // namespace fuscat
