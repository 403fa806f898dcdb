#ifndef QUANDLEKIT_QUANDLE_HPP
#define QUANDLEKIT_QUANDLE_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandlekit/finite_group.hpp"
#include "quandlekit/permutation.hpp"

namespace quandlekit {

/// Which quandle axiom a table violates, with a witness.
/// idempotence: table[x][x] != x (witness x).
/// distributivity: x>(y>z) != (x>y)>(x>z) (witness x, y, z).
/// bijectivity: row x is not a permutation (witness x, y, z with
/// table[x][y] == table[x][z], y < z).
class QuandleAxiomError : public std::runtime_error {
public:
  enum class Axiom { idempotence, distributivity, bijectivity };

  QuandleAxiomError(Axiom axiom, int x, int y, int z);

  Axiom axiom;
  int x, y, z;
};

/// Finite quandle on {0..n-1} with table[x][y] = x > y. Construct through
/// validate_quandle; the axioms are checked exhaustively.
struct FiniteQuandle {
  int size = 0;
  std::vector<std::vector<int>> table;

  int op(int x, int y) const {
    return table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }

  friend bool operator==(const FiniteQuandle &a, const FiniteQuandle &b) {
    return a.size == b.size && a.table == b.table;
  }
  friend bool operator!=(const FiniteQuandle &a, const FiniteQuandle &b) {
    return !(a == b);
  }
};

/// Checks all three axioms (O(n^3)) and returns the quandle.
/// Throws QuandleAxiomError with a witness on the first violation found.
FiniteQuandle validate_quandle(int size, std::vector<std::vector<int>> table);

/// Conjugation quandle of a group: x > y = x y x^-1.
FiniteQuandle conj_quandle(const FiniteGroup &g);

/// Quandle with x > y = y for all x (every translation is the identity).
FiniteQuandle trivial_quandle(int n);

/// The translation L_x: y -> x > y. Always a bijective quandle morphism.
Permutation left_translation(const FiniteQuandle &q, int x);

struct OrbitPartition {
  std::vector<std::vector<int>> blocks; // sorted, listed by smallest member
  std::vector<int> orbit_of;            // element -> block index
};

/// Orbits of the Inn(Q) action (connected components under all translations).
OrbitPartition orbits(const FiniteQuandle &q);

/// Inn(Q) with the data needed to move between the quandle and the group:
/// theta[x] is the group element equal to L_x, and words[a] is the canonical
/// product of quandle elements whose translations compose (left to right) to
/// a. words come from the breadth-first closure, so they are reproducible.
struct InnerGroup {
  FiniteQuandle quandle;
  FiniteGroup group;
  std::vector<int> theta;              // quandle element -> group element
  std::vector<std::vector<int>> words; // group element -> quandle elements
  std::vector<Permutation> elements;   // group element -> permutation of Q
};

InnerGroup inner_group(const FiniteQuandle &q, std::size_t max_size = 100000,
                       int max_order = kDefaultMaxGroupOrder);

/// Character of a quandle: one nonzero complex value per orbit. The induced
/// per-element map chi satisfies chi(x > y) = chi(y).
struct QuandleCharacter {
  FiniteQuandle quandle;
  OrbitPartition partition;
  std::vector<std::complex<double>> orbit_values;

  std::complex<double> value(int x) const {
    return orbit_values[static_cast<std::size_t>(
        partition.orbit_of[static_cast<std::size_t>(x)])];
  }
};

/// Builds a character from per-orbit values (canonical orbit order).
/// Throws std::invalid_argument on a zero value or a length mismatch, and
/// re-verifies the character axiom exhaustively.
QuandleCharacter make_character(const FiniteQuandle &q,
                                std::vector<std::complex<double>> values);

QuandleCharacter trivial_character(const FiniteQuandle &q);
QuandleCharacter character_product(const QuandleCharacter &a,
                                   const QuandleCharacter &b);
QuandleCharacter character_inverse(const QuandleCharacter &a);

} // namespace quandlekit

#endif
