#include "fuscat/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fuscat {

std::string family_name(Family f) {
  switch (f) {
    case Family::SpEven: return "sp-even";
    case Family::SpOdd: return "sp-odd";
    case Family::SoOdd: return "so-odd";
    case Family::SoLevel1: return "so-level1";
  }
  throw std::logic_error("family_name: bad enum");
}

Family family_from_name(const std::string& name) {
  if (name == "sp-even") return Family::SpEven;
  if (name == "sp-odd") return Family::SpOdd;
  if (name == "so-odd") return Family::SoOdd;
  if (name == "so-level1") return Family::SoLevel1;
  throw std::invalid_argument("unknown family: " + name);
}

std::vector<int> RootSystem::rho2() const {
  std::vector<int> r(rank);
  for (int i = 0; i < rank; ++i)
    r[i] = kind == Kind::C ? 2 * (rank - i) : 2 * (rank - i) - 1;
  return r;
}

std::vector<std::vector<int>> RootSystem::positive_roots() const {
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      std::vector<int> d(rank, 0), s(rank, 0);
      d[i] = 1;
      d[j] = -1;
      s[i] = 1;
      s[j] = 1;
      roots.push_back(d);
      roots.push_back(s);
    }
    std::vector<int> e(rank, 0);
    e[i] = kind == Kind::C ? 2 : 1;
    roots.push_back(e);
  }
  return roots;
}

std::vector<int> Label::doubled_weight(int rank) const {
  if (partition.rows() > rank)
    throw std::invalid_argument("Label: more rows than the rank");
  std::vector<int> w(rank);
  for (int i = 0; i < rank; ++i) w[i] = 2 * partition.part(i) + (spin ? 1 : 0);
  return w;
}

std::string Label::str(int rank) const {
  if (!spin) return partition.str();
  int r = std::max(rank, partition.rows());
  std::string s = "(";
  for (int i = 0; i < r; ++i) {
    if (i) s += ',';
    s += std::to_string(2 * partition.part(i) + 1) + "/2";
  }
  s += ')';
  return s;
}

CategorySpec CategorySpec::sp_even(int n, int k, int a) {
  CategorySpec s{Family::SpEven, n, 2 * n + 2 * k + 2, a};
  s.validate();
  return s;
}

CategorySpec CategorySpec::sp_even_ell(int n, int ell, int a) {
  CategorySpec s{Family::SpEven, n, ell, a};
  s.validate();
  return s;
}

CategorySpec CategorySpec::sp_odd(int n, int ell, int a) {
  CategorySpec s{Family::SpOdd, n, ell, a};
  s.validate();
  return s;
}

CategorySpec CategorySpec::so_odd(int k, int ell, int a) {
  CategorySpec s{Family::SoOdd, k, ell, a};
  s.validate();
  return s;
}

CategorySpec CategorySpec::so_level1(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("so_level1: need n,k >= 1");
  CategorySpec s{Family::SoLevel1, 4 * n * k, 1, 1};
  s.validate();
  return s;
}

void CategorySpec::validate() const {
  if (a < 1) throw std::invalid_argument("spec: a must be positive");
  switch (family) {
    case Family::SpEven:
      if (rank < 1) throw std::invalid_argument("spec: rank must be >= 1");
      if (ell % 2 != 0 || ell < 2 * rank + 4)
        throw std::invalid_argument("spec: sp-even needs even ell >= 2n+4");
      if (std::gcd(a, 2 * ell) != 1)
        throw std::invalid_argument("spec: sp-even needs gcd(a, 2*ell) = 1");
      break;
    case Family::SpOdd:
    case Family::SoOdd:
      if (rank < 1) throw std::invalid_argument("spec: rank must be >= 1");
      if (ell % 2 == 0 || ell <= 2 * rank)
        throw std::invalid_argument("spec: odd family needs odd ell > 2*rank");
      // q^2 must be a primitive ell-th root of unity; a itself may be even.
      if (std::gcd(a, ell) != 1)
        throw std::invalid_argument("spec: odd family needs gcd(a, ell) = 1");
      break;
    case Family::SoLevel1:
      if (rank < 4 || rank % 4 != 0)
        throw std::invalid_argument("spec: so-level1 rank must be 4nk");
      break;
  }
}

int CategorySpec::level() const {
  switch (family) {
    case Family::SpEven: return (ell - 2 * rank - 2) / 2;
    case Family::SpOdd: return (ell - 2 * rank - 1) / 2;
    case Family::SoOdd: return (ell - 2 * rank - 1) / 2;
    case Family::SoLevel1: return 1;
  }
  throw std::logic_error("level: bad enum");
}

RootSystem CategorySpec::root_system() const {
  switch (family) {
    case Family::SpEven:
    case Family::SpOdd: return RootSystem{RootSystem::Kind::C, rank};
    case Family::SoOdd: return RootSystem{RootSystem::Kind::B, rank};
    case Family::SoLevel1:
      throw std::invalid_argument("root_system: not modeled for so-level1");
  }
  throw std::logic_error("root_system: bad enum");
}

std::string CategorySpec::str() const {
  return family_name(family) + "(rank=" + std::to_string(rank) +
         ",ell=" + std::to_string(ell) + ",a=" + std::to_string(a) + ")";
}

std::vector<Label> label_set(const CategorySpec& spec) {
  spec.validate();
  std::vector<Label> labels;
  switch (spec.family) {
    case Family::SpEven: {
      for (auto& p : enumerate_rectangle(Rectangle{spec.rank, spec.level()}))
        labels.push_back(Label{p, false});
      break;
    }
    case Family::SpOdd: {
      int bound = spec.ell - 2 * spec.rank;
      for (auto& p : enumerate_rectangle(Rectangle{spec.rank, bound}))
        if (p.part(0) + p.part(1) <= bound) labels.push_back(Label{p, false});
      break;
    }
    case Family::SoOdd: {
      int m = (spec.ell - 2 * spec.rank - 1) / 2;
      for (auto& p : enumerate_rectangle(Rectangle{spec.rank, m}))
        labels.push_back(Label{p, false});
      for (auto& p : enumerate_rectangle(Rectangle{spec.rank, m}))
        labels.push_back(Label{p, true});
      break;
    }
    case Family::SoLevel1: {
      labels.push_back(Label{Partition{}, false});   // 0
      labels.push_back(Label{Partition{1}, false});  // v
      labels.push_back(Label{Partition{}, true});    // s+
      labels.push_back(Label{Partition{1}, true});   // s-
      break;
    }
  }
  return labels;
}

bool label_set_contains(const CategorySpec& spec, const Label& label) {
  switch (spec.family) {
    case Family::SpEven:
      return !label.spin && label.partition.rows() <= spec.rank &&
             label.partition.part(0) <= spec.level();
    case Family::SpOdd:
      return !label.spin && label.partition.rows() <= spec.rank &&
             label.partition.part(0) + label.partition.part(1) <= spec.ell - 2 * spec.rank;
    case Family::SoOdd:
      return label.partition.rows() <= spec.rank &&
             label.partition.part(0) <= (spec.ell - 2 * spec.rank - 1) / 2;
    case Family::SoLevel1:
      return label.partition.part(0) <= 1 && label.partition.rows() <= 1;
  }
  return false;
}

Rational casimir(const Label& label, const RootSystem& rs) {
  std::vector<int> w2 = label.doubled_weight(rs.rank);
  std::vector<int> rho2 = rs.rho2();
  long long acc = 0;  // 4 * sum_i w_i (w_i + 2 rho_i)
  for (int i = 0; i < rs.rank; ++i)
    acc += static_cast<long long>(w2[i]) * (w2[i] + 2 * rho2[i]);
  return Rational(rs.form_scale() * acc, 4);
}

long long weyl_order(int rank) {
  detail::check_weyl_rank(rank);
  long long ord = 1;
  for (int i = 1; i <= rank; ++i) ord *= 2 * i;
  return ord;
}

namespace detail {

void check_weyl_rank(int rank) {
  if (rank < 1 || rank > 10)
    throw std::invalid_argument("weyl elements: rank must be in [1, 10]");
}

}  // namespace detail

}  // namespace fuscat
