#ifndef QUANDLEKIT_INTEGER_MATRIX_HPP
#define QUANDLEKIT_INTEGER_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quandlekit {

class OverflowError : public std::runtime_error {
public:
  OverflowError() : std::runtime_error("64-bit integer overflow") {}
};

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError();
  return r;
}
inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError();
  return r;
}
inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError();
  return r;
}

/// Dense integer matrix, row-major 64-bit entries. All arithmetic on it is
/// exact; overflow raises OverflowError instead of wrapping.
struct IntegerMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> entries; // rows*cols, row-major

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c)
      : rows(r), cols(c),
        entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {
    if (r < 0 || c < 0)
      throw std::invalid_argument("negative matrix dimension");
  }
  IntegerMatrix(int r, int c, std::vector<long long> e)
      : rows(r), cols(c), entries(std::move(e)) {
    if (entries.size() !=
        static_cast<std::size_t>(r) * static_cast<std::size_t>(c))
      throw std::invalid_argument("entry count does not match dimensions");
  }

  long long &at(int r, int c) {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
  long long at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  static IntegerMatrix identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const IntegerMatrix &a, const IntegerMatrix &b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

/// Exact product with overflow checking.
IntegerMatrix mat_mul(const IntegerMatrix &a, const IntegerMatrix &b);

/// Matrix-vector product.
std::vector<long long> mat_vec(const IntegerMatrix &a,
                               const std::vector<long long> &x);

struct SmithNormalForm {
  IntegerMatrix d;     // diagonal, d_i >= 0, d_i | d_{i+1}
  IntegerMatrix u;     // unimodular, rows x rows
  IntegerMatrix u_inv;
  IntegerMatrix v;     // unimodular, cols x cols
  IntegerMatrix v_inv; // u * m * v == d
  int rank = 0;        // number of nonzero diagonal entries

  std::vector<long long> diagonal() const;
  /// Nonzero diagonal entries different from 1 (the nontrivial invariant
  /// factors of the cokernel when the matrix has full row rank).
  std::vector<long long> nontrivial_factors() const;
};

/// Smith normal form over the integers with explicit transforms:
/// u * m * v = d. Exact 64-bit arithmetic; throws OverflowError if any
/// intermediate value leaves the 64-bit range.
SmithNormalForm smith_normal_form(const IntegerMatrix &m);

/// Solves m * x = rhs over the integers given the Smith form of m.
/// Returns std::nullopt when no integral solution exists.
std::optional<std::vector<long long>>
solve_linear(const SmithNormalForm &snf, const std::vector<long long> &rhs);

/// Invariant factors (> 1) of the subgroup of Z/m_1 x ... x Z/m_r generated
/// by the given coordinate vectors. Factors multiply to the subgroup order.
std::vector<long long>
subgroup_invariant_factors(const std::vector<std::vector<long long>> &gens,
                           const std::vector<long long> &moduli);

/// Smith normal form over Z/n. Entries stay in [0, n) throughout, so the
/// arithmetic never leaves 64 bits regardless of the matrix size.
struct SmithModForm {
  long long modulus = 1;
  IntegerMatrix d;     // diagonal; entries are divisors of n with d_i | d_{i+1}
                       // (n itself encodes the zero residue)
  IntegerMatrix u, u_inv; // invertible mod n, u * m * v = d (mod n)
  IntegerMatrix v, v_inv;

  std::vector<long long> diagonal() const;
};

SmithModForm smith_normal_form_mod(IntegerMatrix m, long long n);

/// Solves m * x = rhs (mod n) from the modular Smith form.
std::optional<std::vector<long long>>
solve_linear_mod(const SmithModForm &snf, const std::vector<long long> &rhs);

/// Row-space accumulator for integer row lattices containing m*Z^cols.
/// Rows are inserted one at a time and reduced against pivot rows with
/// extended-gcd combinations; entries stay in [0, m). The final matrix() is
/// upper triangular with a nonzero diagonal and generates the same lattice
/// as the inserted rows together with m*Z^cols.
class ModularRowEchelon {
public:
  ModularRowEchelon(int cols, long long modulus);

  void insert(std::vector<long long> row);

  /// cols x cols upper-triangular basis of the accumulated lattice.
  IntegerMatrix matrix() const;

  long long modulus() const { return modulus_; }
  int cols() const { return cols_; }

private:
  int cols_;
  long long modulus_;
  std::vector<std::vector<long long>> pivot_rows_; // pivot_rows_[c] has pivot at c
};

} // namespace quandlekit

#endif
