#include "fuscat/branching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fuscat/modular.hpp"

namespace fuscat {

namespace {

void add(std::vector<Check>& cs, std::string name, bool pass, double gap = 0.0,
         std::string detail = "") {
  cs.push_back(Check{std::move(name), pass, gap, std::move(detail)});
}

void check_size(int n, int k) {
  if (n < 0 || k < 0 || n + k < 1)
    throw std::invalid_argument("shuffles: need n, k >= 0 and n + k >= 1");
  if (n + k > 14)
    throw std::invalid_argument("shuffles: n + k > 14 exceeds the size guard");
}

double rel_gap(double x, double y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace

void Shuffle::validate() const {
  const int total = n + k;
  if (n < 0 || k < 0 || static_cast<int>(perm.size()) != total)
    throw std::invalid_argument("Shuffle: perm size must be n + k");
  std::vector<char> seen(static_cast<size_t>(total) + 1, 0);
  for (int v : perm) {
    if (v < 1 || v > total || seen[v])
      throw std::invalid_argument("Shuffle: perm is not a permutation of 1..n+k");
    seen[v] = 1;
  }
  for (int i = 1; i < n; ++i)
    if (perm[i - 1] >= perm[i])
      throw std::invalid_argument("Shuffle: first block must ascend");
  for (int i = n + 1; i < total; ++i)
    if (perm[i - 1] >= perm[i])
      throw std::invalid_argument("Shuffle: second block must ascend");
}

std::string Shuffle::dots() const {
  std::string s(static_cast<size_t>(n + k), 'W');
  for (int i = 0; i < n; ++i) s[perm[i] - 1] = 'B';
  return s;
}

std::vector<Shuffle> enumerate_w1(int n, int k) {
  check_size(n, k);
  std::vector<Shuffle> out;
  std::vector<int> first(n);
  std::iota(first.begin(), first.end(), 1);
  while (true) {
    Shuffle s{first, n, k};
    std::vector<char> black(static_cast<size_t>(n + k) + 1, 0);
    for (int v : first) black[v] = 1;
    for (int v = 1; v <= n + k; ++v)
      if (!black[v]) s.perm.push_back(v);
    out.push_back(std::move(s));
    int i = n - 1;
    while (i >= 0 && first[i] == k + i + 1) --i;
    if (i < 0) break;
    ++first[i];
    for (int j = i + 1; j < n; ++j) first[j] = first[j - 1] + 1;
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> kp_weight(const Shuffle& s) {
  s.validate();
  std::vector<int> w1(static_cast<size_t>(s.n));
  std::vector<int> w2(static_cast<size_t>(s.k));
  for (int i = 1; i <= s.n; ++i) w1[i - 1] = s.k + i - s.perm[i - 1];
  for (int i = 1; i <= s.k; ++i) w2[i - 1] = s.n + i - s.perm[s.n + i - 1];
  return {std::move(w1), std::move(w2)};
}

std::string sector_name(Sector s) {
  switch (s) {
    case Sector::L0:
      return "L0";
    case Sector::L1:
      return "L1";
    case Sector::LPlus:
      return "L+";
    case Sector::LMinus:
      return "L-";
  }
  throw std::logic_error("sector_name: bad sector");
}

Sector sector_from_name(const std::string& name) {
  if (name == "L0") return Sector::L0;
  if (name == "L1") return Sector::L1;
  if (name == "L+") return Sector::LPlus;
  if (name == "L-") return Sector::LMinus;
  throw std::invalid_argument("sector_from_name: expected L0, L1, L+ or L-");
}

BranchingTable branching_table(int n, int k) {
  check_size(n, k);
  BranchingTable bt;
  bt.n = n;
  bt.k = k;
  const Rectangle rect{n, k};
  for (const Partition& lam : enumerate_rectangle(rect)) {
    const bool odd = lam.boxes() % 2 != 0;
    bt.sectors[static_cast<int>(odd ? Sector::L1 : Sector::L0)].emplace_back(
        lam, transpose(lam));
    bt.sectors[static_cast<int>(odd ? Sector::LMinus : Sector::LPlus)]
        .emplace_back(lam, complement(lam, rect));
  }
  return bt;
}

BranchingReport verify_branching(int n, int k) {
  BranchingReport rep;
  rep.n = n;
  rep.k = k;
  const auto c1 = CategorySpec::sp_even(n, k);
  const auto c2 = CategorySpec::sp_even(k, n);
  const Rectangle rect{n, k};
  const Rational quarter = Rational(n * k, 4).mod_one();

  bool cong = true;
  bool par = true;
  for (const Partition& lam : enumerate_rectangle(rect)) {
    const Rational h1 = conformal_weight(c1, Label{lam, false});
    const Rational hc =
        conformal_weight(c2, Label{complement(lam, rect), false});
    if ((h1 + hc).mod_one() != quarter) cong = false;
    const Rational ht = conformal_weight(c2, Label{transpose(lam), false});
    if ((h1 + ht).mod_one() != Rational(lam.boxes() % 2, 2)) par = false;
  }
  add(rep.checks, "complement pairs sum to nk/4 mod 1", cong);
  add(rep.checks, "transpose pairs sum to the parity half-integer", par);

  const BranchingTable bt = branching_table(n, k);
  bool grad = true;
  for (const auto& [lam, mu] : bt.sector(Sector::L0))
    grad = grad && grading_of(c1, Label{lam, false}) == 0 &&
           grading_of(c2, Label{mu, false}) == 0;
  for (const auto& [lam, mu] : bt.sector(Sector::L1))
    grad = grad && grading_of(c1, Label{lam, false}) == 1 &&
           grading_of(c2, Label{mu, false}) == 1;
  for (const auto& [lam, mu] : bt.sector(Sector::LPlus))
    grad = grad && grading_of(c1, Label{lam, false}) == 0;
  for (const auto& [lam, mu] : bt.sector(Sector::LMinus))
    grad = grad && grading_of(c1, Label{lam, false}) == 1;
  add(rep.checks, "sector gradings split by box parity", grad);

  const ModularData level1 = so_level1_data(n, k);
  const std::vector<Rational> want_h = {Rational(0), Rational(1, 2), quarter,
                                        quarter};
  add(rep.checks, "level-1 h vector is (0, 1/2, nk/4, nk/4)",
      level1.h == want_h);

  const Partition full(std::vector<int>(static_cast<size_t>(n), k));
  const std::pair<Partition, Partition> rect_pair{full, Partition{}};
  const auto& plus = bt.sector(Sector::LPlus);
  const auto& minus = bt.sector(Sector::LMinus);
  const bool in_plus =
      std::find(plus.begin(), plus.end(), rect_pair) != plus.end();
  const bool in_minus =
      std::find(minus.begin(), minus.end(), rect_pair) != minus.end();
  const bool want_plus = (n * k) % 2 == 0;
  add(rep.checks, "full rectangle joins the unit exactly when nk is even",
      in_plus == want_plus && in_minus == !want_plus);

  std::vector<std::pair<Partition, Partition>> from_shuffles;
  for (const Shuffle& s : enumerate_w1(n, k)) {
    const auto [w1, w2] = kp_weight(s);
    from_shuffles.emplace_back(Partition(w1), Partition(w2));
  }
  std::vector<std::pair<Partition, Partition>> anti;
  for (const auto& p : plus) anti.push_back(p);
  for (const auto& p : minus) anti.push_back(p);
  std::sort(from_shuffles.begin(), from_shuffles.end());
  std::sort(anti.begin(), anti.end());
  const bool counts = static_cast<long long>(from_shuffles.size()) ==
                      static_cast<long long>(enumerate_rectangle(rect).size());
  add(rep.checks, "shuffle weights enumerate the antidiagonal sectors",
      counts && from_shuffles == anti);

  return rep;
}

BranchingReport verify_etale_dims(int n, int k, double tol, double sum_tol) {
  BranchingReport rep;
  rep.n = n;
  rep.k = k;
  const auto c1 = CategorySpec::sp_even(n, k);
  const auto c2 = CategorySpec::sp_even(k, n);
  const ModularData md1 = make_modular_data(c1);
  const ModularData md2 = make_modular_data(c2);
  const Rectangle rect{n, k};

  double fp1 = 0.0;
  double fp2 = 0.0;
  for (int i = 0; i < md1.dims.size(); ++i) fp1 += md1.dims[i] * md1.dims[i];
  for (int i = 0; i < md2.dims.size(); ++i) fp2 += md2.dims[i] * md2.dims[i];

  double sums[4] = {0.0, 0.0, 0.0, 0.0};  // even-t, odd-t, even-c, odd-c
  for (const Partition& lam : enumerate_rectangle(rect)) {
    const double d1 = md1.dims[md1.index_of(Label{lam, false})];
    const double dt = md2.dims[md2.index_of(Label{transpose(lam), false})];
    const double dc =
        md2.dims[md2.index_of(Label{complement(lam, rect), false})];
    const int p = lam.boxes() % 2;
    sums[p] += d1 * dt;
    sums[2 + p] += d1 * dc;
  }

  const double even_diag = sums[0];
  const double g1 = rel_gap(fp1 * fp2, 4.0 * even_diag * even_diag);
  add(rep.checks, "global dimension product is 4 (even diagonal sum)^2",
      g1 <= tol, g1);

  const double total = sums[0] + sums[1] + sums[2] + sums[3];
  const double g2 = rel_gap(total * total, 4.0 * fp1 * fp2);
  add(rep.checks, "four-sector algebra is Lagrangian in the triple product",
      g2 <= tol, g2);

  double g3 = 0.0;
  for (int i = 1; i < 4; ++i) g3 = std::max(g3, rel_gap(sums[0], sums[i]));
  add(rep.checks, "the four sector sums agree", g3 <= sum_tol, g3);

  return rep;
}

}  // namespace fuscat
