#include "fuscat/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace fuscat {

namespace {

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

bool same_matrix(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a - b).cwiseAbs().sum() == 0;
}

// ---- classical sp(2n) weight systems ----------------------------------
//
// Standard coordinates, <e_i, e_j> = delta_ij, rho = (n, ..., 1).

std::vector<int> sp_rho(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = n - i;
  return r;
}

// Dominant representative of the hyperoctahedral orbit: sorted |coords|.
std::vector<int> orbit_rep(std::vector<int> v) {
  for (int& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

// mu - tau in the positive root cone of C_n: partial sums nonnegative and
// the total even.
bool below_in_root_order(const std::vector<int>& tau, const Partition& mu, int n) {
  long long run = 0, total = 0;
  for (int i = 0; i < n; ++i) {
    const long long d = mu.part(i) - tau[i];
    run += d;
    total += d;
    if (i + 1 < n && run < 0) return false;
  }
  return run >= 0 && total % 2 == 0;
}

struct WeightSystem {
  // every weight of the irreducible with highest weight mu, with multiplicity
  std::vector<std::pair<std::vector<int>, long long>> weights;
};

// Multiplicities of dominant weights by the Freudenthal recursion, then the
// full system by spreading over signed-permutation orbits.
WeightSystem sp_weight_system(int n, const Partition& mu) {
  if (mu.rows() > n) throw std::invalid_argument("sp_weight_system: too many rows");
  const std::vector<int> rho = sp_rho(n);
  std::vector<int> top(n, 0);
  for (int i = 0; i < n; ++i) top[i] = mu.part(i);

  std::vector<std::vector<int>> roots;  // positive roots of C_n
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> p(n, 0), m(n, 0);
      p[i] = 1; p[j] = 1;
      m[i] = 1; m[j] = -1;
      roots.push_back(p);
      roots.push_back(m);
    }
  for (int i = 0; i < n; ++i) {
    std::vector<int> d(n, 0);
    d[i] = 2;
    roots.push_back(d);
  }

  // Candidate dominant weights: weakly decreasing vectors fitting under mu
  // in the root order.
  std::vector<std::vector<int>> dominants;
  {
    std::vector<int> stack;
    auto gen = [&](auto&& self, int row, int maxpart) -> void {
      if (row == n) {
        if (below_in_root_order(stack, mu, n)) dominants.push_back(stack);
        return;
      }
      for (int v = maxpart; v >= 0; --v) {
        stack.push_back(v);
        self(self, row + 1, v);
        stack.pop_back();
      }
    };
    gen(gen, 0, mu.part(0));
  }

  // Freudenthal wants higher weights first: box count descending, then lex
  // descending (the orbit representative referenced by tau + j*alpha is
  // strictly higher in this order).
  std::sort(dominants.begin(), dominants.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              long long sa = 0, sb = 0;
              for (int x : a) sa += x;
              for (int x : b) sb += x;
              if (sa != sb) return sa > sb;
              return a > b;
            });

  std::map<std::vector<int>, long long> mult;
  std::vector<int> top_shift(n);
  for (int i = 0; i < n; ++i) top_shift[i] = top[i] + rho[i];
  const long long top_norm = dot(top_shift, top_shift);

  for (const auto& tau : dominants) {
    if (tau == top) {
      mult[tau] = 1;
      continue;
    }
    std::vector<int> tau_shift(n);
    for (int i = 0; i < n; ++i) tau_shift[i] = tau[i] + rho[i];
    const long long denom = top_norm - dot(tau_shift, tau_shift);
    if (denom <= 0)
      throw std::logic_error("sp_weight_system: bad Freudenthal denominator");

    long long num = 0;
    for (const auto& alpha : roots) {
      for (int j = 1;; ++j) {
        std::vector<int> up(n);
        long long absum = 0;
        for (int i = 0; i < n; ++i) {
          up[i] = tau[i] + j * alpha[i];
          absum += std::abs(up[i]);
        }
        if (absum > mu.boxes()) break;  // outside the weight hull
        const auto it = mult.find(orbit_rep(up));
        if (it != mult.end()) num += it->second * dot(up, alpha);
      }
    }
    num *= 2;
    if (num % denom != 0)
      throw std::logic_error("sp_weight_system: non-integral multiplicity");
    if (num / denom > 0) mult[tau] = num / denom;
  }

  WeightSystem ws;
  for (const auto& [tau, m] : mult) {
    // distinct permutations, then sign choices on nonzero entries
    std::vector<int> perm = tau;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> nz;
      for (int i = 0; i < n; ++i)
        if (perm[i] != 0) nz.push_back(i);
      for (unsigned mask = 0; mask < (1u << nz.size()); ++mask) {
        std::vector<int> w = perm;
        for (size_t b = 0; b < nz.size(); ++b)
          if (mask >> b & 1u) w[nz[b]] = -w[nz[b]];
        ws.weights.emplace_back(std::move(w), m);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return ws;
}

// Affine fold of a doubled shifted weight for C_n at root order ell: reflect
// into (0, ell) strictly decreasing; 0 on a wall. Entries stay even.
int affine_fold(std::vector<long long>& x, int ell) {
  const long long period = 2 * ell;
  int det = 1;
  for (auto& v : x) {
    v %= period;
    if (v < 0) v += period;
    if (v == 0 || v == ell) return 0;
    if (v > ell) {
      v = period - v;
      det = -det;
    }
  }
  // sort descending, tracking swap parity
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i] < x[j]) {
        std::swap(x[i], x[j]);
        det = -det;
      }
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i] == x[i + 1]) return 0;
  return det;
}

void check_label_budget(size_t count) {
  if (count > 300)
    throw std::domain_error("fusion_table: label set too large (" +
                            std::to_string(count) + " > 300)");
}

// ---- odd-ell construction ----------------------------------------------

Label invertible_generator(const CategorySpec& spec) {
  if (spec.family == Family::SpOdd)
    return Label{Partition{spec.ell - 2 * spec.rank}, false};
  // so-odd: top spin label (m + 1/2, ..., m + 1/2)
  const int m = (spec.ell - 2 * spec.rank - 1) / 2;
  return Label{Partition(std::vector<int>(spec.rank, m)), true};
}

FusionTable odd_family_table(const CategorySpec& spec, double tol) {
  FusionTable f;
  f.spec = spec;
  f.labels = label_set(spec);
  const int count = static_cast<int>(f.labels.size());

  const ModularData md = make_modular_data(spec, 1e-9);
  const auto n0 = verlinde_block(md, tol);
  const int bsize = static_cast<int>(md.block.size());

  std::vector<Label> block_labels;
  for (int i : md.block) block_labels.push_back(md.labels[i]);
  const Eigen::MatrixXcd raw = smatrix_det_sin(spec, f.labels, block_labels);

  // chi(x, y) = S~(x,y) / S~(unit,y): a character of the full ring for every
  // block column y. The block characters separate labels.
  Eigen::MatrixXcd chi(count, bsize);
  for (int x = 0; x < count; ++x)
    for (int y = 0; y < bsize; ++y) chi(x, y) = raw(x, y) / raw(0, y);
  const double scale = chi.cwiseAbs().maxCoeff();

  const int inv = [&] {
    const Label g = invertible_generator(spec);
    for (int i = 0; i < count; ++i)
      if (f.labels[i] == g) return i;
    throw std::logic_error("odd_family_table: invertible label missing");
  }();
  for (int y = 0; y < bsize; ++y) {
    const double sq = std::abs(chi(inv, y) * chi(inv, y) - 1.0);
    if (sq > tol * (1.0 + scale))
      throw std::runtime_error("odd_family_table: invertible is not an involution");
  }

  // Factor every label as (invertible)^g (x) block label, matching characters.
  std::vector<int> part0(count, -1);
  std::vector<int> parity(count);
  for (int x = 0; x < count; ++x)
    parity[x] = grading_of(spec, f.labels[x]);
  for (int p = 0; p < bsize; ++p) part0[md.block[p]] = p;
  for (int x = 0; x < count; ++x) {
    if (parity[x] == 0) {
      if (part0[x] < 0)
        throw std::logic_error("odd_family_table: even label outside block");
      continue;
    }
    int hit = -1;
    for (int p = 0; p < bsize; ++p) {
      double gap = 0;
      for (int y = 0; y < bsize; ++y)
        gap = std::max(gap, std::abs(chi(x, y) -
                                     chi(inv, y) * chi(md.block[p], y)));
      if (gap <= tol * (1.0 + scale)) {
        if (hit >= 0)
          throw std::runtime_error("odd_family_table: ambiguous factorization");
        hit = p;
      }
    }
    if (hit < 0)
      throw std::runtime_error("odd_family_table: no factorization for label " +
                               f.labels[x].str(spec.rank));
    part0[x] = hit;
  }
  {  // the odd part must biject onto the block
    std::vector<int> seen(bsize, 0);
    for (int x = 0; x < count; ++x)
      if (parity[x] == 1) seen[part0[x]] += 1;
    for (int p = 0; p < bsize; ++p)
      if (seen[p] != 1)
        throw std::runtime_error("odd_family_table: odd part is not a free orbit");
  }

  f.table.assign(count, Eigen::MatrixXi::Zero(count, count));
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      for (int c = 0; c < count; ++c)
        if ((parity[a] ^ parity[b]) == parity[c])
          f.table[a](b, c) = n0[part0[a]](part0[b], part0[c]);
  return f;
}

void check_axioms(const FusionTable& f) {
  const int count = f.count();
  for (int b = 0; b < count; ++b)
    for (int c = 0; c < count; ++c) {
      if (f.table[0](b, c) != (b == c ? 1 : 0))
        throw std::runtime_error("fusion_table: unit row is not the identity");
      for (int a = 0; a < count; ++a)
        if (f.table[a](b, c) != f.table[b](a, c))
          throw std::runtime_error("fusion_table: product is not commutative");
    }
  if (count <= 60 && !is_associative(f))
    throw std::runtime_error("fusion_table: product is not associative");
}

}  // namespace

int FusionTable::index_of(const Label& l) const {
  for (int i = 0; i < count(); ++i)
    if (labels[i] == l) return i;
  return -1;
}

std::vector<Label> fuse_one_box(const CategorySpec& spec, const Label& label) {
  std::vector<Label> out;
  const auto& parts = label.partition.parts();
  for (int row = 0; row < spec.rank; ++row) {
    for (int delta : {+1, -1}) {
      std::vector<int> next(parts);
      if (row >= static_cast<int>(next.size())) next.resize(row + 1, 0);
      next[row] += delta;
      if (next[row] < 0) continue;
      bool sorted = true;
      for (size_t i = 0; i + 1 < next.size(); ++i)
        if (next[i] < next[i + 1]) sorted = false;
      if (!sorted) continue;
      const Label cand{Partition(next), label.spin};
      if (label_set_contains(spec, cand)) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Eigen::MatrixXi> verlinde_block(const ModularData& md, double tol) {
  const int b = static_cast<int>(md.block.size());
  if (b == 0) throw std::invalid_argument("verlinde_block: empty block");
  const Eigen::MatrixXcd& s = md.smatrix;
  std::vector<Eigen::MatrixXi> out(b);
  for (int a = 0; a < b; ++a) {
    Eigen::VectorXcd ratio(b);
    for (int x = 0; x < b; ++x) ratio(x) = s(a, x) / s(0, x);
    const Eigen::MatrixXcd m = s * ratio.asDiagonal() * s.adjoint();
    out[a].resize(b, b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        const double re = m(i, j).real();
        const long long r = std::llround(re);
        if (std::abs(re - r) > tol || std::abs(m(i, j).imag()) > tol)
          throw std::runtime_error("verlinde_block: entry not integral");
        if (r < 0)
          throw std::runtime_error("verlinde_block: negative coefficient");
        out[a](i, j) = static_cast<int>(r);
      }
  }
  return out;
}

std::vector<Eigen::MatrixXi> kac_walton_table(const CategorySpec& spec,
                                              const std::vector<Label>& labels) {
  if (spec.family != Family::SpEven)
    throw std::domain_error("kac_walton_table: sp-even only");
  const int n = spec.rank;
  const int count = static_cast<int>(labels.size());
  const std::vector<int> rho = sp_rho(n);

  std::map<Partition, int> index;
  for (int i = 0; i < count; ++i) {
    if (labels[i].spin)
      throw std::invalid_argument("kac_walton_table: spin label");
    index[labels[i].partition] = i;
  }

  std::vector<WeightSystem> systems(count);
  for (int i = 0; i < count; ++i)
    systems[i] = sp_weight_system(n, labels[i].partition);

  std::vector<Eigen::MatrixXi> out(count, Eigen::MatrixXi::Zero(count, count));
  for (int a = 0; a < count; ++a) {
    for (int b = a; b < count; ++b) {
      // expand over the smaller weight system
      const int hw = systems[a].weights.size() <= systems[b].weights.size() ? b : a;
      const int other = hw == a ? b : a;
      std::vector<long long> base(n);
      for (int i = 0; i < n; ++i)
        base[i] = labels[other].partition.part(i) + rho[i];

      std::vector<long long> x(n);
      for (const auto& [tau, m] : systems[hw].weights) {
        for (int i = 0; i < n; ++i) x[i] = 2 * (base[i] + tau[i]);
        const int det = affine_fold(x, spec.ell);
        if (det == 0) continue;
        std::vector<int> nu(n);
        for (int i = 0; i < n; ++i)
          nu[i] = static_cast<int>(x[i] / 2) - (n - i);
        const auto it = index.find(Partition(nu));
        if (it == index.end())
          throw std::logic_error("kac_walton_table: folded weight not a label");
        out[a](b, it->second) += static_cast<int>(det * m);
      }
      if (a != b) out[b].row(a) = out[a].row(b);
    }
  }
  for (int a = 0; a < count; ++a)
    if ((out[a].array() < 0).any())
      throw std::runtime_error("kac_walton_table: negative coefficient");
  return out;
}

FusionTable fusion_table(const CategorySpec& spec, double tol) {
  spec.validate();
  const auto labels = label_set(spec);
  check_label_budget(labels.size());

  FusionTable f;
  switch (spec.family) {
    case Family::SpEven: {
      f.spec = spec;
      f.labels = labels;
      const ModularData md = make_modular_data(spec, 1e-9);
      f.table = verlinde_block(md, tol);
      const auto integer_route = kac_walton_table(spec, labels);
      for (size_t a = 0; a < labels.size(); ++a)
        if (!same_matrix(f.table[a], integer_route[a]))
          throw std::runtime_error(
              "fusion_table: Verlinde and integer routes disagree at row " +
              labels[a].str(spec.rank));
      break;
    }
    case Family::SpOdd:
    case Family::SoOdd:
      f = odd_family_table(spec, tol);
      break;
    case Family::SoLevel1: {
      f.spec = spec;
      f.labels = labels;
      const int count = static_cast<int>(labels.size());
      std::vector<int> code(count);
      for (int i = 0; i < count; ++i) code[i] = grading_of(spec, labels[i]);
      f.table.assign(count, Eigen::MatrixXi::Zero(count, count));
      for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
          for (int c = 0; c < count; ++c)
            if ((code[a] ^ code[b]) == code[c]) f.table[a](b, c) = 1;
      break;
    }
  }
  check_axioms(f);
  return f;
}

bool is_associative(const FusionTable& f) {
  const int count = f.count();
  std::vector<Eigen::MatrixXi> left(count);
  for (int a = 0; a < count; ++a) left[a] = f.table[a].transpose();
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b) {
      Eigen::MatrixXi rhs = Eigen::MatrixXi::Zero(count, count);
      for (int c = 0; c < count; ++c)
        if (f.table[a](b, c) != 0) rhs += f.table[a](b, c) * left[c];
      if (!same_matrix(left[a] * left[b], rhs)) return false;
    }
  return true;
}

std::vector<std::pair<Label, int>> one_box_discrepancies(
    const CategorySpec& spec, double tol) {
  const FusionTable f = fusion_table(spec, tol);
  const int g = f.index_of(Label{Partition{1}, false});
  std::vector<std::pair<Label, int>> out;
  if (g < 0) return out;
  for (int x = 0; x < f.count(); ++x) {
    std::vector<Label> from_ring;
    for (int c = 0; c < f.count(); ++c)
      if (f.table[g](x, c) > 0) from_ring.push_back(f.labels[c]);
    const std::vector<Label> naive = fuse_one_box(spec, f.labels[x]);
    int gap = 0;
    for (const Label& l : from_ring)
      if (std::find(naive.begin(), naive.end(), l) == naive.end()) ++gap;
    for (const Label& l : naive)
      if (std::find(from_ring.begin(), from_ring.end(), l) == from_ring.end())
        ++gap;
    if (gap > 0) out.emplace_back(f.labels[x], gap);
  }
  return out;
}

bool tables_match_under(const FusionTable& f1, const FusionTable& f2,
                        const std::vector<int>& map) {
  const int count = f1.count();
  if (f2.count() != count || static_cast<int>(map.size()) != count) return false;
  std::vector<int> seen(count, 0);
  for (int v : map) {
    if (v < 0 || v >= count || seen[v]) return false;
    seen[v] = 1;
  }
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      for (int c = 0; c < count; ++c)
        if (f1.table[a](b, c) != f2.table[map[a]](map[b], map[c])) return false;
  return true;
}

std::vector<std::vector<int>> find_ring_isomorphism(const FusionTable& f1,
                                                    int gen1,
                                                    const FusionTable& f2,
                                                    int gen2) {
  const int count = f1.count();
  std::vector<std::vector<int>> found;
  if (f2.count() != count) return found;

  auto layers_of = [](const FusionTable& f, int gen) {
    const int n = f.count();
    std::vector<int> dist(n, -1);
    std::deque<int> queue{0};
    dist[0] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < n; ++y)
        if (dist[y] < 0 && (f.table[gen](x, y) > 0 || f.table[gen](y, x) > 0)) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    for (int d : dist)
      if (d < 0)
        throw std::runtime_error("find_ring_isomorphism: generator does not generate");
    return dist;
  };
  const std::vector<int> d1 = layers_of(f1, gen1);
  std::vector<int> d2;
  try {
    d2 = layers_of(f2, gen2);
  } catch (const std::runtime_error&) {
    return found;  // gen2 does not generate f2: no isomorphism of this shape
  }

  std::vector<int> order(count);
  for (int i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::pair(d1[a], a) < std::pair(d1[b], b); });

  std::vector<int> map(count, -1), used(count, 0), assigned;
  auto consistent = [&](int x, int y) {
    for (int u : assigned)
      for (int v : assigned) {
        if (f1.table[x](u, v) != f2.table[y](map[u], map[v])) return false;
        if (f1.table[u](x, v) != f2.table[map[u]](y, map[v])) return false;
        if (f1.table[u](v, x) != f2.table[map[u]](map[v], y)) return false;
      }
    if (f1.table[x](x, x) != f2.table[y](y, y)) return false;
    for (int u : assigned) {
      if (f1.table[x](x, u) != f2.table[y](y, map[u])) return false;
      if (f1.table[x](u, x) != f2.table[y](map[u], y)) return false;
      if (f1.table[u](x, x) != f2.table[map[u]](y, y)) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, size_t pos) -> void {
    if (pos == order.size()) {
      if (tables_match_under(f1, f2, map)) found.push_back(map);
      return;
    }
    const int x = order[pos];
    for (int y = 0; y < count; ++y) {
      if (used[y] || d2[y] != d1[x]) continue;
      if (x == 0 && y != 0) continue;
      if (x == gen1 && y != gen2) continue;
      if (x != gen1 && y == gen2) continue;
      if (!consistent(x, y)) continue;
      map[x] = y;
      used[y] = 1;
      assigned.push_back(x);
      self(self, pos + 1);
      assigned.pop_back();
      used[y] = 0;
      map[x] = -1;
    }
  };
  dfs(dfs, 0);
  return found;
}

}  // namespace fuscat
