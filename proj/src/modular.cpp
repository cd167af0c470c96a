#include "fuscat/modular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fuscat {

namespace {

constexpr double kPi = std::numbers::pi;

Label unit_label() { return Label{Partition{}, false}; }

// lambda + rho in doubled coordinates; strictly decreasing positive ints
// for every label in the alcove.
std::vector<int> shifted_weight(const Label& label, const RootSystem& rs) {
  std::vector<int> x = label.doubled_weight(rs.rank);
  const std::vector<int> r2 = rs.rho2();
  for (int i = 0; i < rs.rank; ++i) x[i] += r2[i];
  return x;
}

// exp(i pi j / ell) for j in [0, 2 ell): every phase a Weyl sum can produce.
std::vector<std::complex<double>> phase_table(int ell) {
  std::vector<std::complex<double>> tab(2 * ell);
  for (int j = 0; j < 2 * ell; ++j)
    tab[j] = std::polar(1.0, kPi * j / ell);
  return tab;
}

Eigen::MatrixXcd normalize_smatrix(const Eigen::MatrixXcd& raw, double tol,
                                   const std::string& what) {
  const auto n = raw.rows();
  if (n == 0 || n != raw.cols())
    throw std::invalid_argument(what + ": square nonempty matrix required");
  const double c0 = raw.row(0).norm();
  const double top = std::abs(raw(0, 0));
  if (c0 <= 0.0 || top <= 1e-12 * raw.cwiseAbs().maxCoeff())
    throw std::runtime_error(what + ": degenerate unit row");
  const std::complex<double> phase = raw(0, 0) / top;
  Eigen::MatrixXcd s = raw / (c0 * phase);

  const double unitary_err =
      (s * s.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unitary_err > tol)
    throw std::runtime_error(what + ": unitarity check failed, error " +
                             std::to_string(unitary_err));
  const double sym_err = (s - s.transpose()).cwiseAbs().maxCoeff();
  if (sym_err > tol)
    throw std::runtime_error(what + ": symmetry check failed, error " +
                             std::to_string(sym_err));
  return s;
}

std::vector<int> modular_block(const CategorySpec& spec,
                               const std::vector<Label>& labels) {
  std::vector<int> block;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    bool in = false;
    switch (spec.family) {
      case Family::SpEven: in = true; break;
      case Family::SpOdd: in = labels[i].partition.boxes() % 2 == 0; break;
      case Family::SoOdd: in = !labels[i].spin; break;
      case Family::SoLevel1: in = false; break;
    }
    if (in) block.push_back(i);
  }
  return block;
}

// Group law of the four so-level1 invertibles in two-bit codes; the product
// is bitwise xor, which sends (v, s+) to s- as it must.
int level1_code(const Label& l) {
  const int p = l.partition.boxes() % 2;
  const int b1 = (p + (l.spin ? 1 : 0)) % 2;
  return 2 * b1 + p;
}

Eigen::MatrixXcd raw_full_smatrix(const CategorySpec& spec,
                                  const std::vector<Label>& labels) {
  return smatrix_det_sin(spec, labels, labels);
}

}  // namespace

int ModularData::index_of(const Label& l) const {
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] == l) return i;
  return -1;
}

int ModularData::block_position(int label_index) const {
  for (int i = 0; i < static_cast<int>(block.size()); ++i)
    if (block[i] == label_index) return i;
  return -1;
}

double qdim(const CategorySpec& spec, const Label& label) {
  if (spec.family == Family::SoLevel1) return 1.0;
  const std::vector<Label> rows = {label, unit_label()};
  const std::vector<Label> cols = {unit_label()};
  const Eigen::MatrixXcd col = smatrix_det_sin(spec, rows, cols);
  return (col(0, 0) / col(1, 0)).real();
}

Rational conformal_weight(const CategorySpec& spec, const Label& label) {
  if (spec.family == Family::SoLevel1) {
    const int code = level1_code(label);
    if (code == 0) return Rational(0);
    if (code == 3) return Rational(1, 2);
    return Rational(spec.rank, 16).mod_one();  // rank/16 = nk/4
  }
  const Rational c = casimir(label, spec.root_system());
  return (Rational(spec.a, 2 * spec.ell) * c).mod_one();
}

std::complex<double> twist(const CategorySpec& spec, const Label& label) {
  return std::polar(1.0, 2.0 * kPi * conformal_weight(spec, label).value());
}

int grading_of(const CategorySpec& spec, const Label& label) {
  switch (spec.family) {
    case Family::SpEven:
    case Family::SpOdd: return label.partition.boxes() % 2;
    case Family::SoOdd: return label.spin ? 1 : 0;
    case Family::SoLevel1: return level1_code(label);
  }
  throw std::logic_error("grading_of: unknown family");
}

Eigen::MatrixXcd smatrix_weyl_sum(const CategorySpec& spec,
                                  const std::vector<Label>& rows,
                                  const std::vector<Label>& cols) {
  const RootSystem rs = spec.root_system();
  if (rs.rank > 6)
    throw std::domain_error("smatrix_weyl_sum: rank capped at 6, got " +
                            std::to_string(rs.rank));
  const int rank = rs.rank;
  const int s = rs.form_scale();
  const int two_ell = 2 * spec.ell;
  const auto tab = phase_table(spec.ell);

  std::vector<std::vector<int>> xs, ys;
  xs.reserve(rows.size());
  ys.reserve(cols.size());
  for (const Label& l : rows) xs.push_back(shifted_weight(l, rs));
  for (const Label& l : cols) ys.push_back(shifted_weight(l, rs));

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rows.size(), cols.size());
  std::vector<int> wx(rank);
  for_each_weyl_element(rank, [&](const std::vector<int>& sigma,
                                  const std::vector<int>& eps, int det) {
    for (size_t r = 0; r < xs.size(); ++r) {
      for (int i = 0; i < rank; ++i) wx[i] = eps[i] * xs[r][sigma[i]];
      for (size_t c = 0; c < ys.size(); ++c) {
        long long dot = 0;
        for (int i = 0; i < rank; ++i) dot += static_cast<long long>(wx[i]) * ys[c][i];
        const long long twice = static_cast<long long>(spec.a) * s * dot;
        if (twice % 2 != 0)
          throw std::logic_error("smatrix_weyl_sum: non-integral exponent");
        const long long idx = (((twice / 2) % two_ell) + two_ell) % two_ell;
        acc(r, c) += static_cast<double>(det) * tab[idx];
      }
    }
  });
  return acc;
}

Eigen::MatrixXcd smatrix_det_sin(const CategorySpec& spec,
                                 const std::vector<Label>& rows,
                                 const std::vector<Label>& cols) {
  const RootSystem rs = spec.root_system();
  const int rank = rs.rank;
  const double step = kPi * spec.a * rs.form_scale() / (2.0 * spec.ell);

  std::vector<std::vector<int>> xs, ys;
  for (const Label& l : rows) xs.push_back(shifted_weight(l, rs));
  for (const Label& l : cols) ys.push_back(shifted_weight(l, rs));

  // The signed-permutation sum collapses to (2i)^rank det[sin(step x_i y_j)].
  std::complex<double> pref = 1.0;
  for (int i = 0; i < rank; ++i) pref *= std::complex<double>(0.0, 2.0);

  Eigen::MatrixXcd out(rows.size(), cols.size());
  Eigen::MatrixXd m(rank, rank);
  for (size_t r = 0; r < xs.size(); ++r)
    for (size_t c = 0; c < ys.size(); ++c) {
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
          m(i, j) = std::sin(step * xs[r][i] * ys[c][j]);
      out(r, c) = pref * m.determinant();
    }
  return out;
}

ModularData make_modular_data(const CategorySpec& spec, double tol) {
  spec.validate();
  ModularData md;
  md.spec = spec;
  md.labels = label_set(spec);
  const int count = static_cast<int>(md.labels.size());

  md.dims.resize(count);
  md.h.resize(count);
  md.twists.resize(count);
  md.grading.resize(count);
  for (int i = 0; i < count; ++i) {
    md.dims[i] = qdim(spec, md.labels[i]);
    md.h[i] = conformal_weight(spec, md.labels[i]);
    md.twists[i] = twist(spec, md.labels[i]);
    md.grading[i] = grading_of(spec, md.labels[i]);
  }

  md.block = modular_block(spec, md.labels);
  if (md.block.empty()) {
    md.smatrix.resize(0, 0);
    return md;
  }

  std::vector<Label> bl;
  bl.reserve(md.block.size());
  for (int i : md.block) bl.push_back(md.labels[i]);

  md.smatrix = normalize_smatrix(smatrix_det_sin(spec, bl, bl), tol,
                                 "make_modular_data(" + spec.str() + ")");
  if (spec.rank <= 6) {
    const Eigen::MatrixXcd brute = normalize_smatrix(
        smatrix_weyl_sum(spec, bl, bl), tol, "brute-sum cross-check");
    const double gap = (md.smatrix - brute).cwiseAbs().maxCoeff();
    if (gap > tol)
      throw std::runtime_error("make_modular_data: sine-determinant and "
                               "brute-sum S disagree by " + std::to_string(gap));
  }

  for (size_t p = 0; p < md.block.size(); ++p) {
    const double from_s = (md.smatrix(p, 0) / md.smatrix(0, 0)).real();
    const double want = md.dims[md.block[p]];
    if (std::abs(from_s - want) > tol * (1.0 + std::abs(want)))
      throw std::runtime_error("make_modular_data: S column and Weyl product "
                               "give different dims at row " + std::to_string(p));
  }
  return md;
}

ModularData so_level1_data(int n, int k) {
  return make_modular_data(CategorySpec::so_level1(n, k));
}

std::vector<int> muger_center(const CategorySpec& spec, double tol) {
  spec.validate();
  const std::vector<Label> labels = label_set(spec);
  const int count = static_cast<int>(labels.size());
  std::vector<int> center;

  if (spec.family == Family::SoLevel1) {
    // All four objects are invertible: x is transparent iff the bilinear form
    // h(xy) - h(x) - h(y) vanishes mod 1 against every y. Exact arithmetic.
    std::vector<int> codes(count);
    std::vector<Rational> hs(count);
    for (int i = 0; i < count; ++i) {
      codes[i] = level1_code(labels[i]);
      hs[i] = conformal_weight(spec, labels[i]);
    }
    auto at_code = [&](int code) {
      for (int i = 0; i < count; ++i)
        if (codes[i] == code) return i;
      throw std::logic_error("muger_center: missing group element");
    };
    for (int x = 0; x < count; ++x) {
      bool clear = true;
      for (int y = 0; y < count && clear; ++y) {
        const Rational b = hs[at_code(codes[x] ^ codes[y])] - hs[x] - hs[y];
        if (!(b.mod_one() == Rational(0))) clear = false;
      }
      if (clear) center.push_back(x);
    }
    return center;
  }

  const Eigen::MatrixXcd raw = raw_full_smatrix(spec, labels);
  const double scale = raw.cwiseAbs().maxCoeff();
  for (int x = 0; x < count; ++x) {
    bool clear = true;
    for (int y = 0; y < count && clear; ++y) {
      const std::complex<double> gap =
          raw(x, y) * raw(0, 0) - raw(x, 0) * raw(0, y);
      if (std::abs(gap) > tol * scale * scale) clear = false;
    }
    if (clear) center.push_back(x);
  }
  return center;
}

ModularData minus_transform(const ModularData& md) {
  if (md.spec.family == Family::SoLevel1)
    throw std::domain_error("minus_transform: needs a Z/2 graded family");
  ModularData out = md;
  for (size_t i = 0; i < md.labels.size(); ++i) {
    if (md.grading[i] % 2 == 0) continue;
    out.twists[i] = -out.twists[i];
    out.h[i] = (out.h[i] + Rational(1, 2)).mod_one();
  }
  return out;
}

}  // namespace fuscat
