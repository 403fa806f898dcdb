#ifndef QUANDLEKIT_COHOMOLOGY_HPP
#define QUANDLEKIT_COHOMOLOGY_HPP

#include <vector>

#include "quandlekit/finite_group.hpp"
#include "quandlekit/integer_matrix.hpp"
#include "quandlekit/linear_rep.hpp"

namespace quandlekit {

/// Order cap for the dense bar-resolution path of second_cohomology
/// ((|G|-1)^3 coboundary rows are generated and reduced).
inline constexpr int kMaxCohomologyOrder = 48;

/// Normalized 2-cocycle on G with values in the m-th roots of unity, stored
/// as exponents: alpha(g,h) = zeta_m^values[g][h] for zeta_m = exp(2*pi*i/m).
/// values[identity][.] = values[.][identity] = 0 and the cocycle identity
/// values[g][h] + values[g*h][k] = values[h][k] + values[g][h*k] (mod m)
/// hold exactly; both are enforced at construction.
struct CocycleZn {
  FiniteGroup group;
  long long modulus = 1;
  std::vector<std::vector<long long>> values;
};

/// Validates (and normalizes, by dividing out the constant coboundary) a
/// cocycle table. Throws std::invalid_argument when the cocycle identity
/// fails mod m.
CocycleZn make_cocycle(FiniteGroup group, long long modulus,
                       std::vector<std::vector<long long>> values);

CocycleZn zero_cocycle(FiniteGroup group, long long modulus);

/// Exponent table of the coboundary delta(f)(g,h) = f(gh) - f(g) - f(h)
/// (mod modulus) for per-element exponents f with f[identity] = 0.
CocycleZn coboundary_of(FiniteGroup group, const std::vector<long long> &f,
                        long long modulus);

/// H^2(G, mu_m) together with the induced part of H^2(G, C^x).
///
/// The mu_m group is computed from the bar resolution: the lattice of
/// normalized cocycle exponent tables modulo the coboundary lattice, both
/// inside Z^((|G|-1)^2), reduced with Smith normal forms. The C^x part
/// quotients further by the classes whose cocycles become coboundaries over
/// C^x; for m = |G| that quotient is the full Schur multiplier.
class CohomologyGroup {
public:
  /// modulus 0 selects the default m = |G|.
  static CohomologyGroup compute(const FiniteGroup &g, long long modulus = 0);

  const FiniteGroup &group() const { return group_; }
  long long modulus() const { return modulus_; }

  /// Invariant factors (> 1, divisibility chain) of H^2(G, mu_m).
  const std::vector<long long> &mu_factors() const { return mu_factors_; }
  /// Invariant factors (> 1) of the image of H^2(G, mu_m) in H^2(G, C^x).
  const std::vector<long long> &cx_factors() const { return cx_factors_; }

  const std::vector<CocycleZn> &mu_basis() const { return mu_basis_; }
  const std::vector<CocycleZn> &cx_basis() const { return cx_basis_; }

  long long mu_order() const;
  long long cx_order() const;

  /// Coordinates of the class of a (modulus must equal modulus()) in the
  /// mu_m basis, entry i reduced mod mu_factors()[i].
  std::vector<long long> mu_class_coordinates(const CocycleZn &a) const;

  /// Coordinates of the class of a in the C^x basis, entry i reduced mod
  /// cx_factors()[i]. Accepts any cocycle modulus; solves the mixed system
  /// a = sum t_i b_i + coboundary over exponents mod lcm(mod_a, m) * exp(G).
  /// Throws if the class lies outside the computed image (cannot happen for
  /// the default modulus m = |G|).
  std::vector<long long> cx_class_coordinates(const CocycleZn &a) const;

private:
  CohomologyGroup() = default;

  std::vector<long long> cocycle_vector(const CocycleZn &a) const;
  /// Coordinates of a cocycle vector in the kernel-module basis
  /// (entry i defined mod hdiag_[i]); throws when x is not a cocycle mod m.
  std::vector<long long> kernel_coordinates(const std::vector<long long> &x) const;
  CocycleZn kernel_vector_to_cocycle(const std::vector<long long> &w) const;

  FiniteGroup group_;
  long long modulus_ = 1;
  long long group_exponent_ = 1;
  int n1_ = 0, n2_ = 0;
  std::vector<int> pair_pos_; // element -> position among non-identity, -1 for id
  std::vector<int> nonid_;
  IntegerMatrix b2_; // n2 x n1 coboundary matrix

  // Cocycle module {x in (Z/m)^n2 : cocycle identity}: isomorphic to
  // (+)_i Z/hdiag_[i] through x = vh * diag(m/hdiag_) * w.
  IntegerMatrix vh_, vh_inv_; // invertible mod m
  std::vector<long long> hdiag_;

  // H^2(G, mu_m): cocycle module / coboundary columns
  IntegerMatrix u_mu_;
  std::vector<long long> mu_factors_;
  std::vector<int> mu_positions_;
  std::vector<CocycleZn> mu_basis_;

  // image in H^2(G, C^x): cocycle module / C^x-trivial cocycles
  IntegerMatrix u_cx_;
  std::vector<long long> cx_factors_;
  std::vector<int> cx_positions_;
  std::vector<CocycleZn> cx_basis_;
};

/// Convenience wrapper, mirroring the operation name used elsewhere.
CohomologyGroup second_cohomology(const FiniteGroup &g, long long modulus = 0);

struct CoboundaryWitness {
  bool is_coboundary = false;
  /// Per-element exponents f (f[identity] = 0) with
  /// (witness_modulus / a.modulus) * a = delta(f) mod witness_modulus.
  std::vector<long long> exponents;
  long long witness_modulus = 1;
};

/// Decides whether alpha is a coboundary over C^x, i.e. whether a linear
/// lift exists. Solves the exponent system modulo a.modulus * exponent(G);
/// any C^x witness can be scaled into those roots of unity, so the system is
/// complete.
CoboundaryWitness is_coboundary_over_Cx(const CocycleZn &a);

/// Pullback of a cocycle on H along theta: G -> H.
CocycleZn inflation(const CocycleZn &a, const GroupHomomorphism &theta);

/// Rescales a lift into a genuine linear representation using a coboundary
/// witness for its defect cocycle: matrices zeta^(-f[g]) * lift[g] with zeta
/// the primitive witness_modulus-th root of unity.
GroupLinearRep linear_lift_from_witness(const ProjectiveRep &p,
                                        const CoboundaryWitness &witness,
                                        const Tolerances &tol = {});

/// Extracts the defect cocycle of a determinant-normalized lift. Scalars are
/// snapped to dim-th roots of unity (det normalization forces them there) and
/// encoded with modulus lcm(dim, |G|); the cocycle identity is re-verified
/// exactly. Throws if a defect is farther than tol.snap from every root.
CocycleZn cocycle_of_projective(const ProjectiveRep &p,
                                const Tolerances &tol = {});

/// True when a is a central subgroup contained in the derived subgroup.
bool is_stem_extension(const FiniteGroup &g, const std::vector<int> &a);

/// True when theta: G ->> H is a stem extension whose kernel has the order
/// of the Schur multiplier of H.
bool is_schur_cover(const FiniteGroup &g, const GroupHomomorphism &theta);

} // namespace quandlekit

#endif
