#include "quandlekit/linear_rep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

namespace quandlekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::size_t st(int i) { return static_cast<std::size_t>(i); }

void require_finite(const ComplexMatrix &m) {
  if (!m.allFinite())
    throw std::invalid_argument("matrix has non-finite entries");
}

double scale_floor(const ComplexMatrix &a, const ComplexMatrix &b) {
  return std::max({1.0, max_abs(a), max_abs(b)});
}

} // namespace

double max_abs(const ComplexMatrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool matrices_close(const ComplexMatrix &a, const ComplexMatrix &b,
                    double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  return max_abs(a - b) <= tol * scale_floor(a, b);
}

GroupLinearRep make_linear_rep(FiniteGroup group,
                               std::vector<ComplexMatrix> matrices,
                               const Tolerances &tol) {
  if (static_cast<int>(matrices.size()) != group.order)
    throw std::invalid_argument("expected one matrix per group element");
  if (matrices.empty() || matrices[0].rows() == 0)
    throw std::invalid_argument("representation dimension must be positive");
  const int dim = static_cast<int>(matrices[0].rows());
  for (const auto &m : matrices) {
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("matrices must share a square dimension");
    require_finite(m);
  }
  if (!matrices_close(matrices[st(group.identity)],
                      ComplexMatrix::Identity(dim, dim), tol.rep))
    throw std::invalid_argument("identity element must map to the identity matrix");
  for (const auto &m : matrices) {
    Eigen::FullPivLU<ComplexMatrix> lu(m);
    if (!lu.isInvertible())
      throw std::invalid_argument("representation matrix is singular");
  }
  // multiplicativity against every generator forces it on all pairs
  for (int s : group.generators)
    for (int k = 0; k < group.order; ++k)
      if (!matrices_close(matrices[st(group.op(s, k))],
                          matrices[st(s)] * matrices[st(k)], tol.rep))
        throw std::invalid_argument(
            "matrices are not multiplicative at generator pair (" +
            std::to_string(s) + ", " + std::to_string(k) + ")");
  return GroupLinearRep{std::move(group), dim, std::move(matrices)};
}

std::optional<std::pair<int, int>>
first_homomorphism_defect(const GroupLinearRep &rep, const Tolerances &tol) {
  for (int g = 0; g < rep.group.order; ++g)
    for (int h = 0; h < rep.group.order; ++h)
      if (!matrices_close(rep.matrices[st(rep.group.op(g, h))],
                          rep.matrices[st(g)] * rep.matrices[st(h)], tol.rep))
        return std::make_pair(g, h);
  return std::nullopt;
}

std::complex<double> projective_defect_scalar(const ProjectiveRep &p, int g,
                                              int h, const Tolerances &tol) {
  const ComplexMatrix prod = p.lift[st(g)] * p.lift[st(h)];
  const ComplexMatrix r = p.lift[st(p.group.op(g, h))] * prod.inverse();
  const std::complex<double> lambda = r.trace() / static_cast<double>(p.dim);
  const ComplexMatrix defect =
      r - lambda * ComplexMatrix::Identity(p.dim, p.dim);
  if (max_abs(defect) > tol.rep * std::max(1.0, std::abs(lambda)))
    throw std::invalid_argument("lift defect at pair (" + std::to_string(g) +
                                ", " + std::to_string(h) +
                                ") is not a scalar matrix");
  return lambda;
}

ProjectiveRep make_projective_rep(FiniteGroup group,
                                  std::vector<ComplexMatrix> lift,
                                  const Tolerances &tol) {
  if (static_cast<int>(lift.size()) != group.order)
    throw std::invalid_argument("expected one lift matrix per group element");
  const int dim = static_cast<int>(lift[0].rows());
  for (const auto &m : lift) {
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("lift matrices must share a square dimension");
    require_finite(m);
    if (std::abs(m.determinant() - std::complex<double>(1.0, 0.0)) >
        100 * tol.rep * std::max(1.0, max_abs(m)))
      throw std::invalid_argument("lift matrices must have determinant 1");
  }
  if (!matrices_close(lift[st(group.identity)],
                      ComplexMatrix::Identity(dim, dim), tol.rep))
    throw std::invalid_argument("lift of the identity must be the identity");
  ProjectiveRep p{std::move(group), dim, std::move(lift), true};
  for (int g = 0; g < p.group.order; ++g)
    for (int h = 0; h < p.group.order; ++h)
      projective_defect_scalar(p, g, h, tol); // throws on a non-scalar defect
  return p;
}

GroupLinearRep regular_representation(const FiniteGroup &g) {
  std::vector<ComplexMatrix> mats;
  mats.reserve(st(g.order));
  for (int a = 0; a < g.order; ++a) {
    ComplexMatrix m = ComplexMatrix::Zero(g.order, g.order);
    for (int h = 0; h < g.order; ++h)
      m(g.op(a, h), h) = 1.0;
    mats.push_back(std::move(m));
  }
  return make_linear_rep(g, std::move(mats));
}

std::vector<std::complex<double>> character_vector(const GroupLinearRep &rep) {
  std::vector<std::complex<double>> chi;
  chi.reserve(rep.matrices.size());
  for (const auto &m : rep.matrices)
    chi.push_back(m.trace());
  return chi;
}

std::vector<std::complex<double>> class_character(const GroupLinearRep &rep) {
  std::vector<std::complex<double>> chi;
  for (const auto &cls : conjugacy_classes(rep.group))
    chi.push_back(rep.matrices[st(cls.front())].trace());
  return chi;
}

bool are_equivalent(const GroupLinearRep &a, const GroupLinearRep &b,
                    const Tolerances &tol) {
  if (a.group != b.group)
    throw std::invalid_argument("representations of different groups");
  if (a.dim != b.dim)
    return false;
  const auto ca = class_character(a);
  const auto cb = class_character(b);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (std::abs(ca[i] - cb[i]) > tol.character)
      return false;
  return true;
}

int commutant_dimension(const std::vector<ComplexMatrix> &family,
                        const Tolerances &tol) {
  if (family.empty())
    throw std::invalid_argument("commutant of an empty family");
  const int d = static_cast<int>(family[0].rows());
  const int dd = d * d;
  // rows: vec(X M - M X) = (I (x) M - M^T (x) I) vec(X), column-major vec
  ComplexMatrix stacked(static_cast<int>(family.size()) * dd, dd);
  int row0 = 0;
  for (const auto &m : family) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("family matrices must share a dimension");
    for (int bc = 0; bc < d; ++bc)
      for (int br = 0; br < d; ++br) {
        const int r = row0 + bc * d + br;
        for (int xc = 0; xc < d; ++xc)
          for (int xr = 0; xr < d; ++xr) {
            std::complex<double> v = 0.0;
            if (xc == bc)
              v += m(br, xr);      // (M X)(br, bc)
            if (xr == br)
              v -= m(xc, bc);      // (X M)(br, bc)
            stacked(r, xc * d + xr) = v;
          }
      }
    row0 += dd;
  }
  Eigen::BDCSVD<ComplexMatrix> svd(stacked);
  const auto &sv = svd.singularValues();
  const double cutoff = sv.size() == 0 ? 0.0 : tol.rank_rel * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff)
      ++rank;
  return dd - rank;
}

namespace {

std::vector<ComplexMatrix> generator_matrices(const FiniteGroup &g,
                                              const std::vector<ComplexMatrix> &all) {
  std::vector<ComplexMatrix> gens;
  for (int s : g.generators)
    gens.push_back(all[st(s)]);
  if (gens.empty())
    gens.push_back(all[st(g.identity)]);
  return gens;
}

} // namespace

int commutant_dimension(const GroupLinearRep &rep, const Tolerances &tol) {
  return commutant_dimension(generator_matrices(rep.group, rep.matrices), tol);
}

int commutant_dimension(const ProjectiveRep &rep, const Tolerances &tol) {
  return commutant_dimension(generator_matrices(rep.group, rep.lift), tol);
}

namespace {

ComplexMatrix random_hermitian(int dim, SeededRng &rng) {
  ComplexMatrix a(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r)
      a(r, c) = rng.complex_in_square();
  return 0.5 * (a + a.adjoint());
}

// character norm <chi, chi>; equals the sum of squared multiplicities
double character_self_product(const FiniteGroup &g,
                              const std::vector<ComplexMatrix> &mats) {
  double s = 0.0;
  for (const auto &m : mats)
    s += std::norm(m.trace());
  return s / g.order;
}

} // namespace

std::vector<GroupLinearRep> decompose_irreps(const FiniteGroup &g,
                                             std::uint64_t seed,
                                             const Tolerances &tol) {
  constexpr int kSplitAttempts = 50;
  SeededRng rng(seed);

  std::deque<std::vector<ComplexMatrix>> pending;
  pending.push_back(regular_representation(g).matrices);
  std::vector<std::vector<ComplexMatrix>> irreducible;

  while (!pending.empty()) {
    std::vector<ComplexMatrix> block = std::move(pending.front());
    pending.pop_front();
    const int d = static_cast<int>(block[0].rows());

    // character norm close to 1 flags a candidate; the commutant certifies
    if (std::abs(character_self_product(g, block) - 1.0) < 0.25 &&
        commutant_dimension(generator_matrices(g, block), tol) == 1) {
      irreducible.push_back(std::move(block));
      continue;
    }

    bool split = false;
    for (int attempt = 0; attempt < kSplitAttempts && !split; ++attempt) {
      // average a random Hermitian over the group; blocks stay unitary all
      // the way down from the regular representation, so the adjoint is the
      // inverse here
      ComplexMatrix avg = ComplexMatrix::Zero(d, d);
      const ComplexMatrix h = random_hermitian(d, rng);
      for (const auto &m : block)
        avg += m * h * m.adjoint();
      avg /= static_cast<double>(g.order);
      avg = 0.5 * (avg + avg.adjoint());

      Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(avg);
      if (eig.info() != Eigen::Success)
        continue;
      const auto &vals = eig.eigenvalues();
      const double spread = vals(d - 1) - vals(0);
      const double gap_tol = 1e-6 * std::max(1.0, spread);

      std::vector<int> cluster_start{0};
      for (int i = 1; i < d; ++i)
        if (vals(i) - vals(i - 1) > gap_tol)
          cluster_start.push_back(i);
      if (cluster_start.size() <= 1)
        continue; // operator acted as a scalar; try another
      cluster_start.push_back(d);

      for (std::size_t c = 0; c + 1 < cluster_start.size(); ++c) {
        const int lo = cluster_start[c];
        const int width = cluster_start[c + 1] - lo;
        const ComplexMatrix basis = eig.eigenvectors().middleCols(lo, width);
        std::vector<ComplexMatrix> sub;
        sub.reserve(block.size());
        for (const auto &m : block)
          sub.push_back(basis.adjoint() * m * basis);
        pending.push_back(std::move(sub));
      }
      split = true;
    }
    if (!split)
      throw std::runtime_error(
          "failed to split a reducible block of dimension " +
          std::to_string(d) + " within the attempt budget");
  }

  // deduplicate by character, keeping first appearances
  std::vector<GroupLinearRep> out;
  std::vector<std::vector<std::complex<double>>> seen;
  for (auto &mats : irreducible) {
    std::vector<std::complex<double>> chi;
    chi.reserve(mats.size());
    for (const auto &m : mats)
      chi.push_back(m.trace());
    bool duplicate = false;
    for (const auto &other : seen) {
      double diff = 0.0;
      for (std::size_t i = 0; i < chi.size(); ++i)
        diff = std::max(diff, std::abs(chi[i] - other[i]));
      if (diff <= tol.character) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      seen.push_back(std::move(chi));
      out.push_back(make_linear_rep(g, std::move(mats), tol));
    }
  }

  const std::size_t nclasses = conjugacy_classes(g).size();
  long long dimsq = 0;
  for (const auto &rep : out)
    dimsq += static_cast<long long>(rep.dim) * rep.dim;
  if (out.size() != nclasses || dimsq != g.order)
    throw std::runtime_error(
        "irreducible decomposition is inconsistent: got " +
        std::to_string(out.size()) + " classes and dimension-square sum " +
        std::to_string(dimsq) + " for a group of order " +
        std::to_string(g.order));
  return out;
}

GroupLinearRep unitarize(const GroupLinearRep &rep, const Tolerances &tol) {
  ComplexMatrix s = ComplexMatrix::Zero(rep.dim, rep.dim);
  for (const auto &m : rep.matrices)
    s += m.adjoint() * m;
  s /= static_cast<double>(rep.group.order);
  s = 0.5 * (s + s.adjoint());

  Eigen::LLT<ComplexMatrix> llt(s);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument(
        "group averaging did not produce a positive form; "
        "the input is not a representation");
  const ComplexMatrix a = llt.matrixL().adjoint(); // s = a^H a
  const ComplexMatrix a_inv = a.inverse();

  std::vector<ComplexMatrix> mats;
  mats.reserve(rep.matrices.size());
  for (const auto &m : rep.matrices)
    mats.push_back(a * m * a_inv);
  if (!is_unitary_family(mats, tol.rep))
    throw std::runtime_error("unitarization failed to produce unitary matrices");
  return make_linear_rep(rep.group, std::move(mats), tol);
}

bool is_unitary_family(const std::vector<ComplexMatrix> &matrices, double tol) {
  for (const auto &m : matrices) {
    const ComplexMatrix defect =
        m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols());
    if (max_abs(defect) > tol)
      return false;
  }
  return true;
}

std::optional<long long> snap_root_of_unity(std::complex<double> z,
                                            long long order, double tol) {
  if (order <= 0)
    return std::nullopt;
  const double theta = std::arg(z);
  long long j = std::llround(theta * static_cast<double>(order) / (2.0 * kPi));
  j %= order;
  if (j < 0)
    j += order;
  const std::complex<double> w =
      std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(order));
  if (std::abs(z - w) > tol)
    return std::nullopt;
  return j;
}

ComplexMatrix determinant_normalize(const ComplexMatrix &m) {
  const std::complex<double> det = m.determinant();
  if (det == std::complex<double>(0.0, 0.0))
    throw std::invalid_argument("cannot determinant-normalize a singular matrix");
  const double dim = static_cast<double>(m.rows());
  // principal dim-th root of the determinant
  const std::complex<double> root =
      std::polar(std::pow(std::abs(det), 1.0 / dim), std::arg(det) / dim);
  return m / root;
}

} // namespace quandlekit
