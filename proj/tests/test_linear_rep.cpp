#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>

#include "quandlekit/linear_rep.hpp"
#include "quandlekit/rng.hpp"

using namespace quandlekit;

namespace {

std::vector<int> sorted_dims(const std::vector<GroupLinearRep> &reps) {
  std::vector<int> dims;
  for (const auto &r : reps)
    dims.push_back(r.dim);
  std::sort(dims.begin(), dims.end());
  return dims;
}

ComplexMatrix random_invertible(int dim, SeededRng &rng) {
  for (;;) {
    ComplexMatrix t(dim, dim);
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r)
        t(r, c) = rng.complex_in_square();
    if (std::abs(t.determinant()) > 0.1)
      return t;
  }
}

} // namespace

TEST_CASE("regular representation basics") {
  const FiniteGroup c1 = group_from_family(GroupFamily::cyclic, 1);
  const GroupLinearRep triv = regular_representation(c1);
  CHECK(triv.dim == 1);
  CHECK(triv.matrices[0] == ComplexMatrix::Identity(1, 1));

  const FiniteGroup s3 = group_from_family(GroupFamily::symmetric, 3);
  const GroupLinearRep reg = regular_representation(s3);
  CHECK(reg.dim == 6);
  for (int g = 0; g < s3.order; ++g) {
    const auto &m = reg.matrices[static_cast<std::size_t>(g)];
    // 0/1 permutation matrix
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        const double v = std::abs(m(r, c));
        CHECK((v == 0.0 || v == 1.0));
      }
    const std::complex<double> tr = m.trace();
    if (g == s3.identity)
      CHECK(std::abs(tr - 6.0) < 1e-12);
    else
      CHECK(std::abs(tr) < 1e-12);
  }
  CHECK(!first_homomorphism_defect(reg).has_value());
}

TEST_CASE("decompose_irreps: abelian groups give all 1-dimensional pieces") {
  const FiniteGroup c4 = group_from_family(GroupFamily::cyclic, 4);
  const auto irreps = decompose_irreps(c4, 0);
  CHECK(sorted_dims(irreps) == std::vector<int>({1, 1, 1, 1}));
}

TEST_CASE("decompose_irreps: S_3 and Q_8 dimension patterns") {
  CHECK(sorted_dims(decompose_irreps(group_from_family(GroupFamily::symmetric, 3), 0)) ==
        std::vector<int>({1, 1, 2}));
  CHECK(sorted_dims(decompose_irreps(
            group_from_family(GroupFamily::generalized_quaternion, 2), 0)) ==
        std::vector<int>({1, 1, 1, 1, 2}));
}

TEST_CASE("decompose_irreps invariants across several groups") {
  for (const auto &spec : {"symmetric:3", "quaternion:2", "dihedral:4",
                           "dihedral:5", "cyclic:6"}) {
    const FiniteGroup g = group_from_spec(spec);
    const auto irreps = decompose_irreps(g, 0);
    const auto classes = conjugacy_classes(g);
    CHECK(irreps.size() == classes.size());
    long long dimsq = 0;
    for (const auto &rep : irreps) {
      dimsq += static_cast<long long>(rep.dim) * rep.dim;
      CHECK(commutant_dimension(rep) == 1);
      CHECK(!first_homomorphism_defect(rep).has_value());
      CHECK(is_unitary_family(rep.matrices, 1e-8));
    }
    CHECK(dimsq == g.order);
    for (std::size_t i = 0; i < irreps.size(); ++i)
      for (std::size_t j = i + 1; j < irreps.size(); ++j)
        CHECK(!are_equivalent(irreps[i], irreps[j]));
    // character orthonormality in the class-weighted inner product
    for (std::size_t i = 0; i < irreps.size(); ++i)
      for (std::size_t j = 0; j < irreps.size(); ++j) {
        std::complex<double> ip = 0.0;
        for (int x = 0; x < g.order; ++x)
          ip += irreps[i].matrices[static_cast<std::size_t>(x)].trace() *
                std::conj(irreps[j].matrices[static_cast<std::size_t>(x)].trace());
        ip /= static_cast<double>(g.order);
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-6);
      }
  }
}

TEST_CASE("decompose_irreps is deterministic bit for bit at equal seeds") {
  const FiniteGroup g = group_from_family(GroupFamily::symmetric, 4);
  const auto a = decompose_irreps(g, 42);
  const auto b = decompose_irreps(g, 42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].dim == b[i].dim);
    for (int x = 0; x < g.order; ++x) {
      const auto &ma = a[i].matrices[static_cast<std::size_t>(x)];
      const auto &mb = b[i].matrices[static_cast<std::size_t>(x)];
      for (int r = 0; r < a[i].dim; ++r)
        for (int c = 0; c < a[i].dim; ++c) {
          CHECK(ma(r, c).real() == mb(r, c).real());
          CHECK(ma(r, c).imag() == mb(r, c).imag());
        }
    }
  }
}

TEST_CASE("different seeds give equivalent irreducible sets") {
  const FiniteGroup g = group_from_family(GroupFamily::dihedral, 4);
  const auto a = decompose_irreps(g, 1);
  const auto b = decompose_irreps(g, 2);
  REQUIRE(a.size() == b.size());
  // every representation from one run has exactly one equivalent partner
  for (const auto &ra : a) {
    int matches = 0;
    for (const auto &rb : b)
      if (are_equivalent(ra, rb))
        ++matches;
    CHECK(matches == 1);
  }
}

TEST_CASE("commutant dimensions: scalars, regular representation, direct sums") {
  const FiniteGroup s3 = group_from_family(GroupFamily::symmetric, 3);
  const auto irreps = decompose_irreps(s3, 0);

  for (const auto &rep : irreps)
    if (rep.dim == 1)
      CHECK(commutant_dimension(rep) == 1);

  // commutant of the regular representation has dimension sum(mult^2) = |G|
  CHECK(commutant_dimension(regular_representation(s3)) == 6);

  // direct sum of two inequivalent irreducibles has a 2-dimensional commutant
  const GroupLinearRep *one = nullptr, *two = nullptr;
  for (const auto &rep : irreps) {
    if (rep.dim == 1 && !one)
      one = &rep;
    else if (rep.dim == 2)
      two = &rep;
  }
  REQUIRE(one);
  REQUIRE(two);
  std::vector<ComplexMatrix> direct;
  for (int g = 0; g < s3.order; ++g) {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = one->matrices[static_cast<std::size_t>(g)](0, 0);
    m.block(1, 1, 2, 2) = two->matrices[static_cast<std::size_t>(g)];
    direct.push_back(m);
  }
  const GroupLinearRep sum = make_linear_rep(s3, direct);
  CHECK(commutant_dimension(sum) == 2);
}

TEST_CASE("are_equivalent: reflexive, distinguishes characters, conjugation-invariant") {
  const FiniteGroup c3 = group_from_family(GroupFamily::cyclic, 3);
  const auto chars = decompose_irreps(c3, 0);
  REQUIRE(chars.size() == 3);
  CHECK(are_equivalent(chars[0], chars[0]));
  CHECK(!are_equivalent(chars[0], chars[1]));
  CHECK(!are_equivalent(chars[1], chars[2]));

  const FiniteGroup s3 = group_from_family(GroupFamily::symmetric, 3);
  const auto irreps = decompose_irreps(s3, 0);
  const GroupLinearRep &rho = irreps.back();
  SeededRng rng(5);
  const ComplexMatrix t = random_invertible(rho.dim, rng);
  std::vector<ComplexMatrix> conj;
  for (const auto &m : rho.matrices)
    conj.push_back(t * m * t.inverse());
  CHECK(are_equivalent(rho, make_linear_rep(s3, conj, Tolerances{1e-6, 1e-7, 1e-6, 1e-6})));
}

TEST_CASE("unitarize: fixes a skewed representation, keeps characters") {
  const FiniteGroup s3 = group_from_family(GroupFamily::symmetric, 3);
  const auto irreps = decompose_irreps(s3, 0);
  const GroupLinearRep &rho = *std::find_if(irreps.begin(), irreps.end(),
                                            [](const auto &r) { return r.dim == 2; });

  // already unitary: output stays unitary and equivalent
  const GroupLinearRep u0 = unitarize(rho);
  CHECK(is_unitary_family(u0.matrices, 1e-8));
  CHECK(are_equivalent(rho, u0));

  // permutation representation is unchanged up to tolerance
  const GroupLinearRep reg = regular_representation(s3);
  const GroupLinearRep ureg = unitarize(reg);
  for (int g = 0; g < s3.order; ++g)
    CHECK(matrices_close(reg.matrices[static_cast<std::size_t>(g)],
                         ureg.matrices[static_cast<std::size_t>(g)], 1e-8));

  // conjugating by diag(2, 1) breaks unitarity; unitarize restores it
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 0) = 2.0;
  t(1, 1) = 1.0;
  std::vector<ComplexMatrix> skew;
  for (const auto &m : rho.matrices)
    skew.push_back(t * m * t.inverse());
  const GroupLinearRep skewed = make_linear_rep(s3, skew);
  CHECK(!is_unitary_family(skewed.matrices, 1e-8));
  const GroupLinearRep fixed = unitarize(skewed);
  CHECK(is_unitary_family(fixed.matrices, 1e-8));
  CHECK(are_equivalent(skewed, fixed));
}

TEST_CASE("make_linear_rep rejects broken inputs") {
  const FiniteGroup c2 = group_from_family(GroupFamily::cyclic, 2);
  // wrong identity
  std::vector<ComplexMatrix> bad1{2.0 * ComplexMatrix::Identity(1, 1),
                                  ComplexMatrix::Identity(1, 1)};
  CHECK_THROWS_AS(make_linear_rep(c2, bad1), std::invalid_argument);
  // not multiplicative: g^2 = e but M_g^2 != I
  std::vector<ComplexMatrix> bad2{ComplexMatrix::Identity(1, 1),
                                  2.0 * ComplexMatrix::Identity(1, 1)};
  CHECK_THROWS_AS(make_linear_rep(c2, bad2), std::invalid_argument);
  // singular matrix
  std::vector<ComplexMatrix> bad3{ComplexMatrix::Identity(2, 2),
                                  ComplexMatrix::Zero(2, 2)};
  CHECK_THROWS_AS(make_linear_rep(c2, bad3), std::invalid_argument);
}

TEST_CASE("projective reps: scalar defects and determinant normalization") {
  const FiniteGroup k4 = group_from_family(GroupFamily::klein, 1);
  // the genuinely projective 2-dimensional system on the Klein four group
  std::vector<ComplexMatrix> pauli(4, ComplexMatrix::Identity(2, 2));
  pauli[1] << std::complex<double>(0, 0), std::complex<double>(1, 0),
      std::complex<double>(1, 0), std::complex<double>(0, 0); // X
  pauli[2] << std::complex<double>(0, 0), std::complex<double>(0, -1),
      std::complex<double>(0, 1), std::complex<double>(0, 0); // Y
  pauli[3] << std::complex<double>(1, 0), std::complex<double>(0, 0),
      std::complex<double>(0, 0), std::complex<double>(-1, 0); // Z
  for (auto &m : pauli)
    m = determinant_normalize(m);
  const ProjectiveRep p = make_projective_rep(k4, pauli);
  CHECK(p.dim == 2);
  // the normalized X squares to -I while 1 * 1 = 1 in the group, so the
  // defect at (1, 1) is the scalar -1
  const std::complex<double> defect = projective_defect_scalar(p, 1, 1);
  CHECK(std::abs(defect - std::complex<double>(-1.0, 0.0)) < 1e-9);
  CHECK(commutant_dimension(p) == 1);
}

TEST_CASE("snap_root_of_unity") {
  CHECK(snap_root_of_unity({1.0, 0.0}, 4, 1e-6) == 0);
  CHECK(snap_root_of_unity({0.0, 1.0}, 4, 1e-6) == 1);
  CHECK(snap_root_of_unity({-1.0, 0.0}, 4, 1e-6) == 2);
  CHECK(snap_root_of_unity({0.0, -1.0}, 4, 1e-6) == 3);
  CHECK(!snap_root_of_unity({0.9, 0.1}, 4, 1e-6).has_value());
  const std::complex<double> z = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  CHECK(snap_root_of_unity(z, 3, 1e-6) == 1);
}

TEST_CASE("determinant_normalize gives det 1 and keeps the identity fixed") {
  SeededRng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 1 + static_cast<int>(rng.below(3));
    const ComplexMatrix m = random_invertible(dim, rng);
    const ComplexMatrix n = determinant_normalize(m);
    CHECK(std::abs(n.determinant() - std::complex<double>(1.0, 0.0)) < 1e-9);
  }
  CHECK(determinant_normalize(ComplexMatrix::Identity(3, 3)) ==
        ComplexMatrix::Identity(3, 3));
}
