#ifndef QUANDLEKIT_LINEAR_REP_HPP
#define QUANDLEKIT_LINEAR_REP_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "quandlekit/finite_group.hpp"
#include "quandlekit/rng.hpp"

namespace quandlekit {

using ComplexMatrix = Eigen::MatrixXcd;

/// Numerical thresholds shared by the representation-theoretic routines.
/// rep bounds matrix identities, rank_rel scales the singular-value cutoff
/// for rank decisions, character bounds character comparisons, and snap
/// bounds the distance to an exact root of unity when scalars are snapped.
struct Tolerances {
  double rep = 1e-8;
  double rank_rel = 1e-7;
  double character = 1e-6;
  double snap = 1e-6;
};

/// Largest entry modulus; the norm used for all matrix-identity checks.
double max_abs(const ComplexMatrix &m);

/// Entrywise comparison relative to the larger operand, floored at 1.
bool matrices_close(const ComplexMatrix &a, const ComplexMatrix &b, double tol);

/// Linear representation of a finite group: one invertible matrix per
/// element, multiplicative within Tolerances::rep.
struct GroupLinearRep {
  FiniteGroup group;
  int dim = 0;
  std::vector<ComplexMatrix> matrices;
};

/// Lift of a projective representation: determinant-normalized matrices,
/// multiplicative up to scalars. Each lift matrix is only meaningful up to a
/// root-of-unity scalar.
struct ProjectiveRep {
  FiniteGroup group;
  int dim = 0;
  std::vector<ComplexMatrix> lift;
  bool scalar_ambiguity = true;
};

/// Validates and wraps a linear representation: identity matrix at the
/// identity, finite entries, invertibility, and the homomorphism property on
/// all pairs (s, k) with s a group generator (which forces it everywhere).
GroupLinearRep make_linear_rep(FiniteGroup group,
                               std::vector<ComplexMatrix> matrices,
                               const Tolerances &tol = {});

/// First pair (g, h) where matrices[g*h] deviates from matrices[g]*matrices[h]
/// beyond tol.rep, or nullopt. Exhaustive over all pairs.
std::optional<std::pair<int, int>>
first_homomorphism_defect(const GroupLinearRep &rep, const Tolerances &tol = {});

/// Validates and wraps a projective lift: lift[identity] = I, det = 1 within
/// tolerance, and lift[g*h]*(lift[g]*lift[h])^-1 scalar for all pairs.
ProjectiveRep make_projective_rep(FiniteGroup group,
                                  std::vector<ComplexMatrix> lift,
                                  const Tolerances &tol = {});

/// The scalar c with lift[g*h] = c * lift[g] * lift[h], within tol.rep.
std::complex<double> projective_defect_scalar(const ProjectiveRep &p, int g,
                                              int h, const Tolerances &tol = {});

/// Left-multiplication permutation matrices; dim = |G|.
GroupLinearRep regular_representation(const FiniteGroup &g);

/// Traces per group element.
std::vector<std::complex<double>> character_vector(const GroupLinearRep &rep);

/// Traces per conjugacy class (at the class minimum), classes as returned by
/// conjugacy_classes.
std::vector<std::complex<double>> class_character(const GroupLinearRep &rep);

/// Character comparison per conjugacy class within tol.character.
/// Valid as an equivalence test for complex representations of finite groups.
bool are_equivalent(const GroupLinearRep &a, const GroupLinearRep &b,
                    const Tolerances &tol = {});

/// Dimension of {X : X M = M X for every M in family}, computed as the
/// nullity of the stacked commutation system (singular values below
/// tol.rank_rel times the largest one count as zero).
int commutant_dimension(const std::vector<ComplexMatrix> &family,
                        const Tolerances &tol = {});

/// Commutant against the generator matrices (equal to the commutant of the
/// whole image). Result 1 means irreducible.
int commutant_dimension(const GroupLinearRep &rep, const Tolerances &tol = {});
int commutant_dimension(const ProjectiveRep &rep, const Tolerances &tol = {});

/// Complete list of pairwise-inequivalent irreducible representations,
/// obtained by splitting the regular representation along eigenspaces of
/// seeded random group-averaged Hermitian operators until every block has
/// commutant dimension 1, then deduplicating by character. Deterministic for
/// a fixed seed. Throws if a block fails to split within the attempt budget
/// or the final counts are inconsistent.
std::vector<GroupLinearRep> decompose_irreps(const FiniteGroup &g,
                                             std::uint64_t seed = 0,
                                             const Tolerances &tol = {});

/// Equivalent representation with unitary matrices, via the group-averaged
/// Hermitian form and its Cholesky factor. Throws if averaging does not
/// produce a positive form (the input was not a representation).
GroupLinearRep unitarize(const GroupLinearRep &rep, const Tolerances &tol = {});

bool is_unitary_family(const std::vector<ComplexMatrix> &matrices, double tol);

/// Exponent j with |z - exp(2*pi*i*j/order)| <= tol, or nullopt.
std::optional<long long> snap_root_of_unity(std::complex<double> z,
                                            long long order, double tol);

/// Scales a matrix by det^(-1/dim) (principal root) so the result has
/// determinant 1.
ComplexMatrix determinant_normalize(const ComplexMatrix &m);

} // namespace quandlekit

#endif
