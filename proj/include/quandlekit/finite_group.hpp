#ifndef QUANDLEKIT_FINITE_GROUP_HPP
#define QUANDLEKIT_FINITE_GROUP_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandlekit/permutation.hpp"

namespace quandlekit {

class GroupValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Default cap on the order of densely encoded groups. Every operation on a
/// FiniteGroup assumes the full multiplication table is in memory.
inline constexpr int kDefaultMaxGroupOrder = 256;

/// Finite group as a dense multiplication table on element indices 0..n-1.
/// Immutable after construction; the constructor checks the group axioms
/// exhaustively.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> mul; // mul[g][h] = g*h
  int identity = 0;
  std::vector<int> inverse;
  std::vector<int> generators;      // sorted, must generate the whole group
  std::vector<std::string> labels;  // one display string per element

  FiniteGroup() = default;
  FiniteGroup(std::vector<std::vector<int>> mul_table, std::vector<int> gens,
              std::vector<std::string> elem_labels = {},
              int max_order = kDefaultMaxGroupOrder);

  int op(int g, int h) const { return mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  int inv(int g) const { return inverse[static_cast<std::size_t>(g)]; }
  int conj(int g, int h) const { return op(op(g, h), inv(g)); } // g h g^-1

  int element_order(int g) const;
  long long exponent() const; // lcm of element orders
  bool is_abelian() const;

  const std::string &label(int g) const { return labels[static_cast<std::size_t>(g)]; }

  /// Structural equality of the dense encoding (not isomorphism).
  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b) {
    return a.order == b.order && a.mul == b.mul && a.identity == b.identity;
  }
  friend bool operator!=(const FiniteGroup &a, const FiniteGroup &b) { return !(a == b); }
};

/// Map of groups given element-wise; the constructor checks it is a
/// homomorphism.
struct GroupHomomorphism {
  FiniteGroup domain;
  FiniteGroup codomain;
  std::vector<int> image; // image[g] in the codomain

  GroupHomomorphism() = default;
  GroupHomomorphism(FiniteGroup dom, FiniteGroup cod, std::vector<int> img);

  int operator()(int g) const { return image[static_cast<std::size_t>(g)]; }
  bool is_surjective() const;
  std::vector<int> kernel() const;
};

enum class GroupFamily { cyclic, dihedral, generalized_quaternion, symmetric, klein };

/// Builds one of the named families with canonical element labels.
/// dihedral(n) has order 2n, generalized_quaternion(n) order 4n,
/// symmetric(n) order n!, klein order 4 (parameter ignored).
FiniteGroup group_from_family(GroupFamily family, int parameter,
                              int max_order = kDefaultMaxGroupOrder);

/// Parses a family spec string: "cyclic:6", "dihedral:3", "quaternion:2",
/// "symmetric:4", "klein".
FiniteGroup group_from_spec(const std::string &spec,
                            int max_order = kDefaultMaxGroupOrder);

/// For symmetric(n) built by group_from_family: the permutation underlying
/// element g (elements are the n! permutations in lexicographic order of
/// their image sequences).
Permutation symmetric_group_permutation(int n, int g);

struct ClosureResult {
  FiniteGroup group;                    // element 0 is the identity
  std::vector<Permutation> elements;    // index-aligned with the group
  std::vector<Permutation> gens;        // deduplicated, sorted by image sequence
  std::vector<std::vector<int>> words;  // words[g]: indices into gens, first word
                                        // reaching g in BFS (shortlex) order
};

/// Closure of a set of permutations on n points under composition,
/// enumerated by breadth-first search from the identity: generators sorted
/// by image sequence, queue FIFO, new elements discovered as
/// current * generator. Throws if the closure exceeds max_size, or if the
/// resulting order exceeds the dense-table cap.
ClosureResult group_closure(int npoints, std::vector<Permutation> gens,
                            std::size_t max_size = 100000,
                            int max_order = kDefaultMaxGroupOrder);

std::vector<int> center(const FiniteGroup &g);
std::vector<int> derived_subgroup(const FiniteGroup &g);

/// Conjugacy classes, each sorted ascending, listed by smallest member.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup &g);

bool is_subgroup(const FiniteGroup &g, const std::vector<int> &elems);

/// Smallest subgroup containing the given elements.
std::vector<int> subgroup_closure(const FiniteGroup &g, std::vector<int> seed);

/// Quotient of g by a central subgroup a. Cosets are indexed in ascending
/// order of their smallest member. Returns the quotient and the projection.
std::pair<FiniteGroup, GroupHomomorphism>
quotient_by_central(const FiniteGroup &g, const std::vector<int> &a);

} // namespace quandlekit

#endif
