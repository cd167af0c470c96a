#include "fuscat/modular.hpp"

#include <cmath>
#include <complex>
#include <doctest.h>

#include "fuscat/rootdata.hpp"

using namespace fuscat;

namespace {

const double kSqrt2 = std::sqrt(2.0);

double max_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Label lab(std::initializer_list<int> parts, bool spin = false) {
  return Label{Partition(std::vector<int>(parts)), spin};
}

}  // namespace

TEST_CASE("conformal weights: rank-1 symplectic goldens") {
  const auto ell6 = CategorySpec::sp_even_ell(1, 6);
  CHECK(conformal_weight(ell6, lab({})) == Rational(0));
  CHECK(conformal_weight(ell6, lab({1})) == Rational(1, 4));
  CHECK(std::abs(twist(ell6, lab({1})) - std::complex<double>(0, 1)) < 1e-12);

  const auto ell8 = CategorySpec::sp_even_ell(1, 8);
  CHECK(conformal_weight(ell8, lab({1})) == Rational(3, 16));
  CHECK(conformal_weight(ell8, lab({2})) == Rational(1, 2));
}

TEST_CASE("conformal weights: boundary label is a boson or fermion by a") {
  // h of the width-(ell-2n) one-row label is a * (ell-2n) / 2 mod 1.
  for (int n = 1; n <= 2; ++n)
    for (int ell : {2 * n + 1, 2 * n + 3, 2 * n + 5})
      for (int a = 1; a < 2 * ell; ++a) {
        if (std::gcd(a, ell) != 1) continue;
        const auto spec = CategorySpec::sp_odd(n, ell, a);
        const Label eta = lab({ell - 2 * n});
        REQUIRE(label_set_contains(spec, eta));
        const double want = (a % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(twist(spec, eta) - std::complex<double>(want, 0)) < 1e-12);
      }
}

TEST_CASE("conformal weights: top spin label twist") {
  // theta of the top spin label is exp(i pi a k (ell-2k) / 2).
  const auto semion = CategorySpec::so_odd(1, 5, 1);
  const Label gamma1 = lab({1}, true);  // (3/2)
  CHECK(gamma1.str(1) == "(3/2)");
  CHECK(conformal_weight(semion, gamma1) == Rational(3, 4));
  CHECK(std::abs(twist(semion, gamma1) - std::complex<double>(0, -1)) < 1e-12);

  CHECK(conformal_weight(CategorySpec::so_odd(1, 5, 2), gamma1) == Rational(1, 2));

  const auto k2 = CategorySpec::so_odd(2, 9, 1);
  const Label gamma2 = lab({2, 2}, true);  // (5/2, 5/2)
  CHECK(conformal_weight(k2, gamma2) == Rational(1, 2));
}

TEST_CASE("transposed labels pair to integer total weight") {
  // casimir(lambda) + casimir(lambda^t) = ell * |lambda| when the two ranks
  // share ell = 2n + 2k + 2.
  const int n = 2, k = 3, ell = 2 * n + 2 * k + 2;
  const auto cn = CategorySpec::sp_even(n, k).root_system();
  const auto ck = CategorySpec::sp_even(k, n).root_system();
  for (const Partition& p : enumerate_rectangle({n, k})) {
    const Rational total = casimir(Label{p, false}, cn) +
                           casimir(Label{transpose(p), false}, ck);
    CHECK(total == Rational(static_cast<long long>(ell) * p.boxes()));
  }
}

TEST_CASE("smatrix golden: two labels at ell = 6") {
  const auto md = make_modular_data(CategorySpec::sp_even_ell(1, 6));
  REQUIRE(md.block.size() == 2);
  Eigen::MatrixXcd want(2, 2);
  want << 1, 1, 1, -1;
  want /= kSqrt2;
  CHECK(max_gap(md.smatrix, want) < 1e-12);
  CHECK(md.dims[0] == doctest::Approx(1.0));
  CHECK(md.dims[1] == doctest::Approx(1.0));
}

TEST_CASE("smatrix golden: three labels at ell = 8") {
  const auto md = make_modular_data(CategorySpec::sp_even_ell(1, 8));
  REQUIRE(md.block.size() == 3);
  Eigen::MatrixXcd want(3, 3);
  want << 1, kSqrt2, 1, kSqrt2, 0, -kSqrt2, 1, -kSqrt2, 1;
  want /= 2.0;
  CHECK(max_gap(md.smatrix, want) < 1e-12);
  CHECK(md.dims[1] == doctest::Approx(kSqrt2));
  CHECK(md.dims[2] == doctest::Approx(1.0));
}

TEST_CASE("normalized smatrix is real, unitary, symmetric") {
  for (const auto& spec :
       {CategorySpec::sp_even(2, 2), CategorySpec::sp_even(3, 1),
        CategorySpec::sp_odd(2, 7), CategorySpec::so_odd(2, 9),
        CategorySpec::so_odd(1, 7), CategorySpec::sp_odd(1, 5, 2)}) {
    CAPTURE(spec.str());
    const auto md = make_modular_data(spec);
    const auto n = md.smatrix.rows();
    REQUIRE(n == static_cast<long>(md.block.size()));
    CHECK(md.smatrix.imag().cwiseAbs().maxCoeff() < 1e-9);
    CHECK((md.smatrix * md.smatrix.adjoint() - Eigen::MatrixXcd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() < 1e-9);
    CHECK(max_gap(md.smatrix, md.smatrix.transpose()) < 1e-9);
    CHECK(md.smatrix(0, 0).real() > 0.0);
  }
}

TEST_CASE("brute signed-permutation sum matches the sine determinant") {
  for (const auto& spec :
       {CategorySpec::sp_even(2, 2), CategorySpec::sp_odd(1, 5),
        CategorySpec::sp_odd(2, 7), CategorySpec::so_odd(1, 5),
        CategorySpec::so_odd(2, 7), CategorySpec::so_odd(2, 9, 2)}) {
    CAPTURE(spec.str());
    const auto labels = label_set(spec);
    const auto brute = smatrix_weyl_sum(spec, labels, labels);
    const auto slick = smatrix_det_sin(spec, labels, labels);
    const double scale = brute.cwiseAbs().maxCoeff();
    REQUIRE(scale > 0.0);
    CHECK(max_gap(brute, slick) < 1e-10 * scale);
  }
}

TEST_CASE("quantum dimensions") {
  const auto even = make_modular_data(CategorySpec::sp_even(2, 3));
  for (int i = 0; i < even.dims.size(); ++i)
    CHECK(even.dims[i] >= 1.0 - 1e-9);  // a = 1 is the unitary choice

  // The boundary one-row label at odd ell has dimension exactly -1.
  for (const auto& spec : {CategorySpec::sp_odd(1, 5), CategorySpec::sp_odd(2, 7),
                           CategorySpec::sp_odd(1, 7)}) {
    CAPTURE(spec.str());
    CHECK(qdim(spec, lab({spec.ell - 2 * spec.rank})) == doctest::Approx(-1.0));
  }

  // Top spin labels are invertible: dimension squared is 1.
  const Label g15 = lab({1}, true);
  CHECK(qdim(CategorySpec::so_odd(1, 5), g15) == doctest::Approx(1.0));
  const double dg = qdim(CategorySpec::so_odd(1, 5, 2), g15);
  CHECK(dg * dg == doctest::Approx(1.0));
}

TEST_CASE("modular block per family") {
  const auto sp = make_modular_data(CategorySpec::sp_odd(1, 5));
  CHECK(sp.block == std::vector<int>{0, 2});
  CHECK(sp.labels[sp.block[1]] == lab({2}));

  const auto so = make_modular_data(CategorySpec::so_odd(1, 5));
  CHECK(so.block == std::vector<int>{0, 1});

  const auto even = make_modular_data(CategorySpec::sp_even(2, 2));
  CHECK(even.block.size() == even.labels.size());

  CHECK(so_level1_data(1, 1).block.empty());
}

TEST_CASE("transparent labels") {
  CHECK(muger_center(CategorySpec::sp_even_ell(1, 6)) == std::vector<int>{0});
  CHECK(muger_center(CategorySpec::sp_even(2, 2)) == std::vector<int>{0});

  // Odd-ell symplectic: the unit and the boundary label, always.
  CHECK(muger_center(CategorySpec::sp_odd(1, 5)) == std::vector<int>{0, 3});
  CHECK(muger_center(CategorySpec::sp_odd(1, 7)) == std::vector<int>{0, 5});
  CHECK(muger_center(CategorySpec::sp_odd(1, 5, 2)) == std::vector<int>{0, 3});

  // Odd-ell orthogonal: the top spin label is transparent iff k or a is even.
  CHECK(muger_center(CategorySpec::so_odd(1, 5, 1)) == std::vector<int>{0});
  CHECK(muger_center(CategorySpec::so_odd(1, 5, 2)) == std::vector<int>{0, 3});
  const auto k2 = CategorySpec::so_odd(2, 9, 1);
  const auto labels = label_set(k2);
  const auto center = muger_center(k2);
  REQUIRE(center.size() == 2);
  CHECK(center[0] == 0);
  CHECK(labels[center[1]] == lab({2, 2}, true));

  CHECK(muger_center(CategorySpec::so_level1(1, 1)) == std::vector<int>{0});
  CHECK(muger_center(CategorySpec::so_level1(2, 2)) == std::vector<int>{0});
}

TEST_CASE("minus transform flips odd twists and nothing else") {
  const auto md = make_modular_data(CategorySpec::sp_even_ell(1, 6));
  const auto neg = minus_transform(md);
  CHECK(std::abs(neg.twists[1] - std::complex<double>(0, -1)) < 1e-12);
  CHECK(neg.h[1] == Rational(3, 4));
  CHECK(neg.h[0] == md.h[0]);
  CHECK(max_gap(neg.smatrix, md.smatrix) == 0.0);
  CHECK(neg.dims == md.dims);
  CHECK(neg.grading == md.grading);

  const auto back = minus_transform(neg);
  for (size_t i = 0; i < md.labels.size(); ++i) {
    CHECK(back.h[i] == md.h[i]);
    CHECK(std::abs(back.twists[i] - md.twists[i]) == 0.0);
  }

  for (const auto& spec : {CategorySpec::sp_odd(2, 7), CategorySpec::so_odd(2, 9)}) {
    const auto odd = make_modular_data(spec);
    const auto flipped = minus_transform(odd);
    for (size_t i = 0; i < odd.labels.size(); ++i) {
      const auto want = odd.twists[i] * (odd.grading[i] ? -1.0 : 1.0);
      CHECK(std::abs(flipped.twists[i] - want) < 1e-15);
      // h still generates the twist after the half shift
      const auto from_h = std::polar(1.0, 2 * 3.14159265358979323846 * flipped.h[i].value());
      CHECK(std::abs(flipped.twists[i] - from_h) < 1e-12);
    }
  }

  CHECK_THROWS_AS(minus_transform(so_level1_data(1, 1)), std::domain_error);
}

TEST_CASE("four-object level-one data") {
  const auto md = so_level1_data(1, 1);
  REQUIRE(md.labels.size() == 4);
  CHECK(md.spec.rank == 4);
  CHECK(md.grading == std::vector<int>{0, 3, 2, 1});  // 0, v, s+, s-
  CHECK(md.h[0] == Rational(0));
  CHECK(md.h[1] == Rational(1, 2));
  CHECK(md.h[2] == Rational(1, 4));
  CHECK(md.h[3] == Rational(1, 4));
  for (int i = 0; i < 4; ++i) CHECK(md.dims[i] == doctest::Approx(1.0));

  CHECK(so_level1_data(2, 1).h[2] == Rational(1, 2));
  CHECK(so_level1_data(2, 2).h[2] == Rational(0));
  CHECK(so_level1_data(3, 2).h[2] == Rational(1, 2));
  CHECK(so_level1_data(3, 2).h[3] == Rational(1, 2));
}

TEST_CASE("brute sum is guarded, determinant route is not") {
  const auto big = CategorySpec::sp_even(7, 1);
  const auto labels = label_set(big);
  REQUIRE(labels.size() == 8);
  CHECK_THROWS_AS(smatrix_weyl_sum(big, labels, labels), std::domain_error);
  const auto md = make_modular_data(big);
  CHECK(md.block.size() == 8);
  CHECK(md.smatrix.imag().cwiseAbs().maxCoeff() < 1e-9);
}
