#include "fuscat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fuscat {

namespace {

void check_weakly_decreasing(const std::vector<int>& parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_weakly_decreasing(parts_);
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 0) throw std::invalid_argument("Partition: negative row index");
  return i < rows() ? parts_[i] : 0;
}

bool Partition::operator<(const Partition& o) const {
  int a = boxes(), b = o.boxes();
  if (a != b) return a < b;
  return std::lexicographical_compare(parts_.begin(), parts_.end(), o.parts_.begin(),
                                      o.parts_.end());
}

std::string Partition::str() const {
  std::string s = "(";
  for (int i = 0; i < rows(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

bool Rectangle::contains(const Partition& p) const {
  return p.rows() <= n && p.part(0) <= k;
}

namespace {

void gen_in_box(int rows_left, int max_part, std::vector<int>& cur,
                std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (rows_left == 0) return;
  for (int v = 1; v <= max_part; ++v) {
    cur.push_back(v);
    gen_in_box(rows_left - 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_rectangle(const Rectangle& rect) {
  if (rect.n < 0 || rect.k < 0) throw std::invalid_argument("enumerate_rectangle: bad rectangle");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_in_box(rect.n, rect.k, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition transpose(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> t(p.part(0), 0);
  for (int j = 0; j < p.part(0); ++j)
    for (int i = 0; i < p.rows(); ++i)
      if (p.part(i) >= j + 1) ++t[j];
  return Partition(std::move(t));
}

Partition complement(const Partition& p, const Rectangle& rect) {
  if (!rect.contains(p))
    throw std::invalid_argument("complement: partition does not fit the rectangle");
  std::vector<int> rev(rect.n);
  for (int i = 0; i < rect.n; ++i) rev[i] = rect.k - p.part(rect.n - 1 - i);
  return transpose(Partition(std::move(rev)));
}

Partition tc(const Partition& p, const Rectangle& rect) {
  if (!rect.contains(p))
    throw std::invalid_argument("tc: partition does not fit the rectangle");
  return complement(transpose(p), Rectangle{rect.k, rect.n});
}

AffineWeight to_affine(const Partition& p, const Rectangle& rect) {
  if (!rect.contains(p))
    throw std::invalid_argument("to_affine: partition does not fit the rectangle");
  AffineWeight w(rect.n + 1);
  w[0] = rect.k - p.part(0);
  for (int i = 1; i < rect.n; ++i) w[i] = p.part(i - 1) - p.part(i);
  w[rect.n] = p.part(rect.n - 1);
  return w;
}

Partition from_affine(const AffineWeight& w) {
  if (w.empty()) throw std::invalid_argument("from_affine: empty weight");
  for (int m : w)
    if (m < 0) throw std::invalid_argument("from_affine: negative mark");
  int n = static_cast<int>(w.size()) - 1;
  std::vector<int> parts(n);
  int suffix = 0;
  for (int i = n; i >= 1; --i) {
    suffix += w[i];
    parts[i - 1] = suffix;
  }
  return Partition(std::move(parts));
}

std::string dot_diagram(const Partition& p, const Rectangle& rect) {
  AffineWeight w = to_affine(p, rect);
  std::string s;
  s.reserve(rect.n + rect.k);
  for (int i = 0; i <= rect.n; ++i) {
    s.append(w[i], 'W');
    if (i < rect.n) s.push_back('B');
  }
  return s;
}

namespace {

// Marks counted as runs of `gap` dots between consecutive `sep` dots.
AffineWeight runs_between(const std::string& dots, char gap, char sep) {
  AffineWeight w;
  int run = 0;
  for (char c : dots) {
    if (c == gap) {
      ++run;
    } else if (c == sep) {
      w.push_back(run);
      run = 0;
    } else {
      throw std::invalid_argument("dot diagram: characters must be B or W");
    }
  }
  w.push_back(run);
  return w;
}

}  // namespace

Partition read_dots_black(const std::string& dots) {
  return from_affine(runs_between(dots, 'W', 'B'));
}

Partition read_dots_white(const std::string& dots) {
  return from_affine(runs_between(dots, 'B', 'W'));
}

}  // namespace fuscat
