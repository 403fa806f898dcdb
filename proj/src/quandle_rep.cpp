#include "quandlekit/quandle_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace quandlekit {

namespace {

std::size_t st(int i) { return static_cast<std::size_t>(i); }

} // namespace

QuandleRepAxiomError::QuandleRepAxiomError(int x_, int y_)
    : std::runtime_error("representation axiom fails at (x, y) = (" +
                         std::to_string(x_) + ", " + std::to_string(y_) +
                         "): rho(x>y) != rho(x) rho(y) rho(x)^-1"),
      x(x_), y(y_) {}

QuandleRep validate_rep(const FiniteQuandle &q,
                        std::vector<ComplexMatrix> matrices,
                        const Tolerances &tol) {
  if (static_cast<int>(matrices.size()) != q.size)
    throw std::invalid_argument("expected one matrix per quandle element");
  const int dim = static_cast<int>(matrices[0].rows());
  if (dim <= 0)
    throw std::invalid_argument("representation dimension must be positive");
  for (const auto &m : matrices) {
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("matrices must share a square dimension");
    if (!m.allFinite())
      throw std::invalid_argument("matrix has non-finite entries");
    Eigen::FullPivLU<ComplexMatrix> lu(m);
    if (!lu.isInvertible())
      throw std::invalid_argument("representation matrix is singular");
  }
  // rho(x>y) rho(x) = rho(x) rho(y), inverse-free form of the axiom
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y)
      if (!matrices_close(matrices[st(q.op(x, y))] * matrices[st(x)],
                          matrices[st(x)] * matrices[st(y)], tol.rep))
        throw QuandleRepAxiomError(x, y);
  const bool unitary = is_unitary_family(matrices, tol.rep);
  return QuandleRep{q, dim, std::move(matrices), unitary};
}

QuandleRep pull_back(const GroupLinearRep &rep, const InnerGroup &inn,
                     const Tolerances &tol) {
  if (rep.group != inn.group)
    throw std::invalid_argument(
        "representation group does not match the inner automorphism group");
  std::vector<ComplexMatrix> mats;
  mats.reserve(st(inn.quandle.size));
  for (int x = 0; x < inn.quandle.size; ++x)
    mats.push_back(rep.matrices[st(inn.theta[st(x)])]);
  return validate_rep(inn.quandle, std::move(mats), tol);
}

QuandleRep char_twist(const QuandleCharacter &chi, const QuandleRep &rho,
                      const Tolerances &tol) {
  if (chi.quandle != rho.quandle)
    throw std::invalid_argument("character and representation quandles differ");
  std::vector<ComplexMatrix> mats;
  mats.reserve(rho.matrices.size());
  for (int x = 0; x < rho.quandle.size; ++x)
    mats.push_back(chi.value(x) * rho.matrices[st(x)]);
  return validate_rep(rho.quandle, std::move(mats), tol);
}

int commutant_dimension(const QuandleRep &rho, const Tolerances &tol) {
  return commutant_dimension(rho.matrices, tol);
}

int intertwiner_dimension(const QuandleRep &rho, const QuandleRep &rho2,
                          const Tolerances &tol) {
  if (rho.quandle != rho2.quandle)
    throw std::invalid_argument("representations live on different quandles");
  if (rho.dim != rho2.dim)
    return 0;
  const int d = rho.dim;
  const int dd = d * d;
  // vec(rho2(x) T - T rho(x)) row blocks, column-major vec(T)
  ComplexMatrix stacked(rho.quandle.size * dd, dd);
  int row0 = 0;
  for (int x = 0; x < rho.quandle.size; ++x) {
    const ComplexMatrix &a = rho2.matrices[st(x)];
    const ComplexMatrix &b = rho.matrices[st(x)];
    for (int bc = 0; bc < d; ++bc)
      for (int br = 0; br < d; ++br) {
        const int r = row0 + bc * d + br;
        for (int tc = 0; tc < d; ++tc)
          for (int tr = 0; tr < d; ++tr) {
            std::complex<double> v = 0.0;
            if (tc == bc)
              v += a(br, tr);
            if (tr == br)
              v -= b(tc, bc);
            stacked(r, tc * d + tr) = v;
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

ProjectiveRep induced_projective(const QuandleRep &rho, const InnerGroup &inn,
                                 const Tolerances &tol) {
  if (rho.quandle != inn.quandle)
    throw std::invalid_argument("representation quandle does not match Inn(Q)");
  if (commutant_dimension(rho, tol) != 1)
    throw std::invalid_argument(
        "induced projective representation needs an irreducible input");
  std::vector<ComplexMatrix> lifts;
  lifts.reserve(inn.words.size());
  for (const auto &word : inn.words) {
    ComplexMatrix p = ComplexMatrix::Identity(rho.dim, rho.dim);
    for (int x : word)
      p = p * rho.matrices[st(x)];
    lifts.push_back(determinant_normalize(p));
  }
  return make_projective_rep(inn.group, std::move(lifts), tol);
}

ProjectiveRep induced_projective(const QuandleRep &rho, const Tolerances &tol) {
  return induced_projective(rho, inner_group(rho.quandle), tol);
}

std::optional<QuandleCharacter> recover_character(const QuandleRep &rho,
                                                  const QuandleRep &rho2,
                                                  const Tolerances &tol) {
  if (rho.quandle != rho2.quandle)
    throw std::invalid_argument("representations live on different quandles");
  if (rho.dim != rho2.dim)
    throw std::invalid_argument("character recovery needs equal dimensions");
  if (commutant_dimension(rho, tol) != 1 || commutant_dimension(rho2, tol) != 1)
    throw std::invalid_argument("character recovery needs irreducible inputs");

  const int n = rho.quandle.size;
  std::vector<std::complex<double>> scalar(st(n));
  for (int x = 0; x < n; ++x) {
    const ComplexMatrix d =
        rho2.matrices[st(x)] * rho.matrices[st(x)].inverse();
    const std::complex<double> lambda =
        d.trace() / static_cast<double>(rho.dim);
    const ComplexMatrix defect =
        d - lambda * ComplexMatrix::Identity(rho.dim, rho.dim);
    if (max_abs(defect) > tol.rep * std::max(1.0, std::abs(lambda)))
      return std::nullopt; // ratio is not scalar: not a twist
    scalar[st(x)] = lambda;
  }
  const OrbitPartition part = orbits(rho.quandle);
  std::vector<std::complex<double>> values;
  values.reserve(part.blocks.size());
  for (const auto &block : part.blocks) {
    const std::complex<double> v = scalar[st(block.front())];
    for (int x : block)
      if (std::abs(scalar[st(x)] - v) > tol.snap)
        return std::nullopt; // scalars not constant on the orbit
    values.push_back(v);
  }
  return make_character(rho.quandle, std::move(values));
}

bool word_scalar_consistent(const QuandleRep &rho, const InnerGroup &inn,
                            const ProjectiveRep &lift,
                            const std::vector<int> &word,
                            const Tolerances &tol) {
  ComplexMatrix p = ComplexMatrix::Identity(rho.dim, rho.dim);
  int elem = inn.group.identity;
  for (int x : word) {
    p = p * rho.matrices[st(x)];
    elem = inn.group.op(elem, inn.theta[st(x)]);
  }
  p = determinant_normalize(p);
  const ComplexMatrix r = p * lift.lift[st(elem)].inverse();
  const std::complex<double> lambda = r.trace() / static_cast<double>(rho.dim);
  const ComplexMatrix defect =
      r - lambda * ComplexMatrix::Identity(rho.dim, rho.dim);
  return max_abs(defect) <= tol.rep * std::max(1.0, std::abs(lambda));
}

std::string mode_name(ClassificationMode mode) {
  switch (mode) {
  case ClassificationMode::inn_trivial_multiplier:
    return "inn_trivial_multiplier";
  case ClassificationMode::conj_trivial_multiplier:
    return "conj_trivial_multiplier";
  case ClassificationMode::conj_schur_cover:
    return "conj_schur_cover";
  }
  return "unknown";
}

HypothesisError::HypothesisError(const std::string &message,
                                 std::vector<long long> inn_obstruction_,
                                 std::vector<long long> group_obstruction_)
    : std::runtime_error(message), inn_obstruction(std::move(inn_obstruction_)),
      group_obstruction(std::move(group_obstruction_)) {}

namespace {

std::string factor_string(const std::vector<long long> &factors) {
  if (factors.empty())
    return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i)
      out << " x ";
    out << "Z/" << factors[i];
  }
  return out.str();
}

} // namespace

ClassificationReport classify_via_inn(const FiniteQuandle &q,
                                      std::uint64_t seed,
                                      const Tolerances &tol) {
  const InnerGroup inn = inner_group(q);
  const CohomologyGroup h2 = second_cohomology(inn.group);
  if (!h2.cx_factors().empty())
    throw HypothesisError("H^2(Inn(Q), C^x) = " +
                              factor_string(h2.cx_factors()) +
                              " is not trivial; the Inn(Q) classification "
                              "does not apply",
                          h2.cx_factors(), {});

  ClassificationReport report;
  report.quandle = q;
  report.mode = ClassificationMode::inn_trivial_multiplier;
  report.character_rank = static_cast<int>(orbits(q).blocks.size());
  report.h2_inn_cx_factors = {};
  report.seed = seed;
  report.completeness_theorem =
      "every irreducible representation of Q is a character twist of the "
      "pullback of an irreducible linear representation of Inn(Q) "
      "(H^2(Inn(Q), C^x) is trivial)";

  for (const auto &irrep : decompose_irreps(inn.group, seed, tol)) {
    QuandleRep base = pull_back(irrep, inn, tol);
    const ProjectiveRep lift = induced_projective(base, inn, tol);
    const CocycleZn coc = cocycle_of_projective(lift, tol);
    if (!is_coboundary_over_Cx(coc).is_coboundary)
      throw std::logic_error("pullback induced a nontrivial class although "
                             "H^2(Inn(Q), C^x) is trivial");
    report.base_reps.push_back(std::move(base));
    report.realized_classes.push_back({}); // trivial class, no coordinates
  }
  report.m_q_structure = {};
  report.m_q_order = 1;
  return report;
}

namespace {

struct ConjugationData {
  FiniteQuandle quandle;
  InnerGroup inn;
  CohomologyGroup h2_inn;
  std::vector<GroupLinearRep> irreps;
  std::vector<QuandleRep> base_reps;
  std::vector<std::vector<long long>> class_coords;
  std::vector<long long> subgroup_structure;
  long long subgroup_order = 1;
};

ConjugationData conjugation_classes_of_irreps(const FiniteGroup &g,
                                              std::uint64_t seed,
                                              const Tolerances &tol) {
  FiniteQuandle quandle = conj_quandle(g);
  InnerGroup inn = inner_group(quandle);
  CohomologyGroup h2_inn = second_cohomology(inn.group);
  std::vector<GroupLinearRep> irreps = decompose_irreps(g, seed, tol);

  std::vector<QuandleRep> base_reps;
  std::vector<std::vector<long long>> class_coords;
  for (const auto &irrep : irreps) {
    // a group representation is a quandle morphism into Conj(GL), so its
    // matrices form a quandle representation as they stand
    QuandleRep base = validate_rep(quandle, irrep.matrices, tol);
    const ProjectiveRep lift = induced_projective(base, inn, tol);
    const CocycleZn coc = cocycle_of_projective(lift, tol);
    class_coords.push_back(h2_inn.cx_class_coordinates(coc));
    base_reps.push_back(std::move(base));
  }
  std::vector<long long> subgroup_structure =
      subgroup_invariant_factors(class_coords, h2_inn.cx_factors());
  long long subgroup_order = 1;
  for (long long f : subgroup_structure)
    subgroup_order = checked_mul(subgroup_order, f);
  return ConjugationData{std::move(quandle),       std::move(inn),
                         std::move(h2_inn),        std::move(irreps),
                         std::move(base_reps),     std::move(class_coords),
                         std::move(subgroup_structure), subgroup_order};
}

} // namespace

ClassificationReport classify_conj_group(const FiniteGroup &g,
                                         std::uint64_t seed,
                                         const Tolerances &tol) {
  auto [quotient, projection] = quotient_by_central(g, center(g));
  const bool cover = is_schur_cover(g, projection);
  ClassificationMode mode;
  if (cover) {
    mode = ClassificationMode::conj_schur_cover;
  } else {
    const CohomologyGroup h2g = second_cohomology(g);
    if (h2g.cx_factors().empty()) {
      mode = ClassificationMode::conj_trivial_multiplier;
    } else {
      const CohomologyGroup h2q = second_cohomology(quotient);
      throw HypothesisError(
          "neither hypothesis holds for Conj(G): H^2(G, C^x) = " +
              factor_string(h2g.cx_factors()) +
              " is not trivial, and G -> G/Z(G) is not a Schur cover "
              "(kernel order " +
              std::to_string(projection.kernel().size()) +
              ", H^2(G/Z(G), C^x) = " + factor_string(h2q.cx_factors()) + ")",
          h2q.cx_factors(), h2g.cx_factors());
    }
  }

  ConjugationData data = conjugation_classes_of_irreps(g, seed, tol);

  ClassificationReport report;
  report.quandle = std::move(data.quandle);
  report.mode = mode;
  report.base_reps = std::move(data.base_reps);
  report.character_rank = static_cast<int>(orbits(report.quandle).blocks.size());
  report.realized_classes = std::move(data.class_coords);
  report.m_q_structure = std::move(data.subgroup_structure);
  report.m_q_order = data.subgroup_order;
  report.h2_inn_cx_factors = data.h2_inn.cx_factors();
  report.seed = seed;
  if (mode == ClassificationMode::conj_schur_cover) {
    report.completeness_theorem =
        "every irreducible representation of Conj(G) is a character twist of "
        "an irreducible linear representation of G (G is a Schur cover of "
        "G/Z(G)); the realized classes generate all of H^2(Inn(Q), C^x)";
    if (report.m_q_order != data.h2_inn.cx_order())
      throw std::logic_error(
          "Schur-cover branch: realized classes generate a subgroup of order " +
          std::to_string(report.m_q_order) + " instead of the full " +
          std::to_string(data.h2_inn.cx_order()));
  } else {
    report.completeness_theorem =
        "every irreducible representation of Conj(G) is a character twist of "
        "an irreducible linear representation of G (H^2(G, C^x) is trivial)";
  }
  return report;
}

RealizedClassSummary conj_realized_classes(const FiniteGroup &g,
                                           std::uint64_t seed,
                                           const Tolerances &tol) {
  ConjugationData data = conjugation_classes_of_irreps(g, seed, tol);
  RealizedClassSummary summary;
  for (const auto &rep : data.irreps)
    summary.base_dims.push_back(rep.dim);
  summary.class_coords = std::move(data.class_coords);
  summary.subgroup_structure = std::move(data.subgroup_structure);
  summary.subgroup_order = data.subgroup_order;
  summary.h2_inn_cx_factors = data.h2_inn.cx_factors();

  auto [quotient, projection] = quotient_by_central(g, center(g));
  summary.complete = is_schur_cover(g, projection) ||
                     second_cohomology(g).cx_factors().empty();
  return summary;
}

std::vector<FamilyTableRow>
family_classification_table(const std::vector<int> &n_values,
                            std::uint64_t seed, const Tolerances &tol) {
  std::vector<int> ns = n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::vector<FamilyTableRow> rows;
  for (int n : ns) {
    if (n < 2)
      throw std::invalid_argument(
          "table rows need n >= 2 (for n = 1 the inner automorphism group "
          "degenerates)");
    if (4 * n > kMaxCohomologyOrder)
      throw std::invalid_argument("table row group order " +
                                  std::to_string(4 * n) +
                                  " exceeds the cohomology size bound");

    struct Entry {
      std::string name;
      FiniteGroup group;
    };
    std::vector<Entry> entries;
    entries.push_back({"Conj(Q_" + std::to_string(4 * n) + ")",
                       group_from_family(GroupFamily::generalized_quaternion, n)});
    if (n % 2 == 1)
      entries.push_back({"Conj(D_" + std::to_string(2 * n) + ")",
                         group_from_family(GroupFamily::dihedral, n)});
    entries.push_back({"Conj(D_" + std::to_string(4 * n) + ")",
                       group_from_family(GroupFamily::dihedral, 2 * n)});

    for (auto &entry : entries) {
      ClassificationReport report;
      try {
        report = classify_conj_group(entry.group, seed, tol);
      } catch (const HypothesisError &) {
        // the remaining family rows have Inn(Q) with trivial multiplier
        report = classify_via_inn(conj_quandle(entry.group), seed, tol);
      }
      const int inn_order =
          entry.group.order / static_cast<int>(center(entry.group).size());
      if (inn_order != 2 * n)
        throw std::logic_error("family table: |Inn(Q)| is " +
                               std::to_string(inn_order) + ", expected " +
                               std::to_string(2 * n));
      FamilyTableRow row;
      row.n = n;
      row.quandle_name = entry.name;
      row.inn_name = "D_" + std::to_string(inn_order);
      row.h2 = report.h2_inn_cx_factors;
      row.m_q = report.m_q_structure;
      row.tor = report.m_q_structure; // isomorphic to M_Q
      row.mode = mode_name(report.mode);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

} // namespace quandlekit
