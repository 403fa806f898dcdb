#ifndef QUANDLEKIT_QUANDLE_REP_HPP
#define QUANDLEKIT_QUANDLE_REP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/cohomology.hpp"
#include "quandlekit/linear_rep.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

/// rho(x > y) = rho(x) rho(y) rho(x)^-1 failed at the witness pair.
class QuandleRepAxiomError : public std::runtime_error {
public:
  QuandleRepAxiomError(int x, int y);
  int x, y;
};

/// Quandle representation: one invertible matrix per element satisfying
/// rho(x > y) = rho(x) rho(y) rho(x)^-1 within Tolerances::rep.
struct QuandleRep {
  FiniteQuandle quandle;
  int dim = 0;
  std::vector<ComplexMatrix> matrices;
  bool unitary = false; // all matrices unitary within tol at validation time
};

/// Validates the axiom on all pairs (witnessed error on failure), checks
/// invertibility, and records whether the matrices are unitary.
QuandleRep validate_rep(const FiniteQuandle &q,
                        std::vector<ComplexMatrix> matrices,
                        const Tolerances &tol = {});

/// Quandle rep x -> rep[theta[x]] from a linear representation of Inn(Q).
/// Irreducible whenever rep is, because the translations generate Inn(Q).
QuandleRep pull_back(const GroupLinearRep &rep, const InnerGroup &inn,
                     const Tolerances &tol = {});

/// Pointwise product chi(x) * rho(x); same commutant as rho.
QuandleRep char_twist(const QuandleCharacter &chi, const QuandleRep &rho,
                      const Tolerances &tol = {});

int commutant_dimension(const QuandleRep &rho, const Tolerances &tol = {});

/// Dimension of {T : rho2(x) T = T rho(x) for all x}. Zero means the two
/// representations are inequivalent; for irreducible pairs one means
/// equivalent.
int intertwiner_dimension(const QuandleRep &rho, const QuandleRep &rho2,
                          const Tolerances &tol = {});

/// Projective representation of Inn(Q) induced by an irreducible quandle
/// representation: each group element is evaluated as the rho-product over
/// its canonical translation word, then determinant-normalized. Products
/// over different words of the same element agree up to scalars, which the
/// ProjectiveRep validation re-checks on all pairs.
ProjectiveRep induced_projective(const QuandleRep &rho, const InnerGroup &inn,
                                 const Tolerances &tol = {});

/// Convenience overload computing Inn(Q) on the fly.
ProjectiveRep induced_projective(const QuandleRep &rho,
                                 const Tolerances &tol = {});

/// If rho2 = chi * rho for a character chi, returns chi; otherwise nullopt
/// (not a twist). Both representations must be irreducible of equal
/// dimension on the same quandle.
std::optional<QuandleCharacter> recover_character(const QuandleRep &rho,
                                                  const QuandleRep &rho2,
                                                  const Tolerances &tol = {});

/// Checks the rho-product over an arbitrary word against the canonical lift
/// of the word's group element; they must agree up to a scalar.
bool word_scalar_consistent(const QuandleRep &rho, const InnerGroup &inn,
                            const ProjectiveRep &lift,
                            const std::vector<int> &word,
                            const Tolerances &tol = {});

enum class ClassificationMode {
  inn_trivial_multiplier,
  conj_trivial_multiplier,
  conj_schur_cover
};

std::string mode_name(ClassificationMode mode);

/// A classification hypothesis failed; carries the computed obstructions.
class HypothesisError : public std::runtime_error {
public:
  HypothesisError(const std::string &message,
                  std::vector<long long> inn_obstruction,
                  std::vector<long long> group_obstruction);
  /// C^x invariant factors of H^2(Inn(Q)) (inn path) and of H^2(G)
  /// (conjugation path); empty when that obstruction was not computed or
  /// vanishes.
  std::vector<long long> inn_obstruction;
  std::vector<long long> group_obstruction;
};

/// Finite description of all irreducible representations of a quandle:
/// finitely many base representations such that every irreducible is a
/// character twist of exactly the listed ones (per completeness_theorem).
/// realized_classes are the induced cocycle classes in H^2(Inn(Q), C^x);
/// m_q is the subgroup they generate.
struct ClassificationReport {
  FiniteQuandle quandle;
  ClassificationMode mode = ClassificationMode::inn_trivial_multiplier;
  std::vector<QuandleRep> base_reps;
  int character_rank = 0; // number of orbits = independent character slots
  std::vector<std::vector<long long>> realized_classes;
  std::vector<long long> m_q_structure; // invariant factors of M_Q
  long long m_q_order = 1;
  std::string completeness_theorem;
  std::vector<long long> h2_inn_cx_factors;
  std::uint64_t seed = 0;
};

/// Classification through Inn(Q): requires H^2(Inn(Q), C^x) trivial. Base
/// representations are the pullbacks of the irreducible representations of
/// Inn(Q); every irreducible representation of Q is a character twist of one
/// of them.
ClassificationReport classify_via_inn(const FiniteQuandle &q,
                                      std::uint64_t seed = 0,
                                      const Tolerances &tol = {});

/// Classification of Conj(G): requires G to be a Schur cover of G/Z(G) or to
/// have trivial Schur multiplier. Base representations are the irreducible
/// representations of G used directly as quandle representations. In the
/// cover branch the realized classes generate all of H^2(Inn(Q), C^x), which
/// is verified.
ClassificationReport classify_conj_group(const FiniteGroup &g,
                                         std::uint64_t seed = 0,
                                         const Tolerances &tol = {});

/// Induced cocycle classes of the irreducible representations of G on
/// Conj(G), with no classification hypothesis. The generated subgroup is all
/// of M_Q exactly when `complete`; otherwise it is a lower bound.
struct RealizedClassSummary {
  std::vector<int> base_dims;
  std::vector<std::vector<long long>> class_coords;
  std::vector<long long> subgroup_structure;
  long long subgroup_order = 1;
  std::vector<long long> h2_inn_cx_factors;
  bool complete = false;
};

RealizedClassSummary conj_realized_classes(const FiniteGroup &g,
                                           std::uint64_t seed = 0,
                                           const Tolerances &tol = {});

/// One row of the classification table for the built-in families.
struct FamilyTableRow {
  int n = 0;
  std::string quandle_name; // e.g. "Conj(Q_8)"
  std::string inn_name;     // e.g. "D_4"
  std::vector<long long> h2;  // C^x factors of H^2(Inn(Q))
  std::vector<long long> m_q; // invariant factors of M_Q
  std::vector<long long> tor; // torsion of the center of the enveloping group
  std::string mode;
};

/// Rows for Conj(Q_{4n}) (all n), Conj(D_{2n}) (odd n) and Conj(D_{4n})
/// (all n) for each requested n >= 2, n ascending. Tor(Z(G(Q))) is reported
/// through its isomorphism with M_Q.
std::vector<FamilyTableRow>
family_classification_table(const std::vector<int> &n_values,
                            std::uint64_t seed = 0, const Tolerances &tol = {});

} // namespace quandlekit

#endif
