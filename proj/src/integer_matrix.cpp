#include "quandlekit/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace quandlekit {

namespace {

// g = gcd(a, b) >= 0 with g = x*a + y*b
long long egcd(long long a, long long b, long long &x, long long &y) {
  x = 1;
  y = 0;
  long long x1 = 0, y1 = 1;
  while (b != 0) {
    long long q = a / b;
    long long t = checked_sub(a, checked_mul(q, b));
    a = b;
    b = t;
    t = checked_sub(x, checked_mul(q, x1));
    x = x1;
    x1 = t;
    t = checked_sub(y, checked_mul(q, y1));
    y = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x = -x;
    y = -y;
  }
  return a;
}

long long mod_reduce(long long v, long long m) {
  v %= m;
  if (v < 0)
    v += m;
  return v;
}

// Working state for the Smith reduction: the matrix plus all four transforms.
struct SmithWork {
  IntegerMatrix m, u, u_inv, v, v_inv;

  explicit SmithWork(const IntegerMatrix &mat)
      : m(mat), u(IntegerMatrix::identity(mat.rows)),
        u_inv(IntegerMatrix::identity(mat.rows)),
        v(IntegerMatrix::identity(mat.cols)),
        v_inv(IntegerMatrix::identity(mat.cols)) {}

  void row_swap(int i, int j) {
    if (i == j)
      return;
    for (int c = 0; c < m.cols; ++c)
      std::swap(m.at(i, c), m.at(j, c));
    for (int c = 0; c < m.rows; ++c) {
      std::swap(u.at(i, c), u.at(j, c));
      std::swap(u_inv.at(c, i), u_inv.at(c, j));
    }
  }
  void col_swap(int i, int j) {
    if (i == j)
      return;
    for (int r = 0; r < m.rows; ++r)
      std::swap(m.at(r, i), m.at(r, j));
    for (int r = 0; r < m.cols; ++r) {
      std::swap(v.at(r, i), v.at(r, j));
      std::swap(v_inv.at(i, r), v_inv.at(j, r));
    }
  }
  void row_negate(int i) {
    for (int c = 0; c < m.cols; ++c)
      m.at(i, c) = checked_sub(0, m.at(i, c));
    for (int c = 0; c < m.rows; ++c) {
      u.at(i, c) = checked_sub(0, u.at(i, c));
      u_inv.at(c, i) = checked_sub(0, u_inv.at(c, i));
    }
  }
  // row i += k * row j
  void row_addmul(int i, int j, long long k) {
    if (k == 0)
      return;
    for (int c = 0; c < m.cols; ++c)
      m.at(i, c) = checked_add(m.at(i, c), checked_mul(k, m.at(j, c)));
    for (int c = 0; c < m.rows; ++c) {
      u.at(i, c) = checked_add(u.at(i, c), checked_mul(k, u.at(j, c)));
      u_inv.at(c, j) = checked_sub(u_inv.at(c, j), checked_mul(k, u_inv.at(c, i)));
    }
  }
  // col j += k * col i
  void col_addmul(int j, int i, long long k) {
    if (k == 0)
      return;
    for (int r = 0; r < m.rows; ++r)
      m.at(r, j) = checked_add(m.at(r, j), checked_mul(k, m.at(r, i)));
    for (int r = 0; r < m.cols; ++r) {
      v.at(r, j) = checked_add(v.at(r, j), checked_mul(k, v.at(r, i)));
      v_inv.at(i, r) = checked_sub(v_inv.at(i, r), checked_mul(k, v_inv.at(j, r)));
    }
  }
};

} // namespace

IntegerMatrix mat_mul(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("matrix product dimension mismatch");
  IntegerMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const long long aik = a.at(i, k);
      if (aik == 0)
        continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, b.at(k, j)));
    }
  return r;
}

std::vector<long long> mat_vec(const IntegerMatrix &a,
                               const std::vector<long long> &x) {
  if (static_cast<int>(x.size()) != a.cols)
    throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<long long> r(static_cast<std::size_t>(a.rows), 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a.at(i, j) != 0)
        r[static_cast<std::size_t>(i)] = checked_add(
            r[static_cast<std::size_t>(i)], checked_mul(a.at(i, j), x[static_cast<std::size_t>(j)]));
  return r;
}

std::vector<long long> SmithNormalForm::diagonal() const {
  std::vector<long long> out;
  const int n = std::min(d.rows, d.cols);
  for (int i = 0; i < n; ++i)
    out.push_back(d.at(i, i));
  return out;
}

std::vector<long long> SmithNormalForm::nontrivial_factors() const {
  std::vector<long long> out;
  for (long long x : diagonal())
    if (x > 1)
      out.push_back(x);
  return out;
}

SmithNormalForm smith_normal_form(const IntegerMatrix &mat) {
  SmithWork w(mat);
  const int n = std::min(mat.rows, mat.cols);

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = t; i < w.m.rows; ++i)
        for (int j = t; j < w.m.cols; ++j) {
          const long long a = std::llabs(w.m.at(i, j));
          if (a != 0 && (pi < 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0)
        goto done; // trailing submatrix is zero
      w.row_swap(t, pi);
      w.col_swap(t, pj);
      if (w.m.at(t, t) < 0)
        w.row_negate(t);
      const long long p = w.m.at(t, t);

      bool dirty = false;
      for (int i = t + 1; i < w.m.rows; ++i) {
        const long long a = w.m.at(i, t);
        if (a == 0)
          continue;
        w.row_addmul(i, t, -(a / p));
        if (w.m.at(i, t) != 0)
          dirty = true;
      }
      for (int j = t + 1; j < w.m.cols; ++j) {
        const long long a = w.m.at(t, j);
        if (a == 0)
          continue;
        w.col_addmul(j, t, -(a / p));
        if (w.m.at(t, j) != 0)
          dirty = true;
      }
      if (dirty)
        continue; // smaller remainders exist, pick a new pivot

      // pivot must divide the rest of the submatrix
      bool must_continue = false;
      for (int i = t + 1; i < w.m.rows && !must_continue; ++i)
        for (int j = t + 1; j < w.m.cols; ++j)
          if (w.m.at(i, j) % p != 0) {
            w.row_addmul(t, i, 1);
            must_continue = true;
            break;
          }
      if (!must_continue)
        break;
    }
  }
done:

  SmithNormalForm out;
  out.rank = 0;
  for (int i = 0; i < n; ++i)
    if (w.m.at(i, i) != 0)
      ++out.rank;
  out.d = std::move(w.m);
  out.u = std::move(w.u);
  out.u_inv = std::move(w.u_inv);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);
  return out;
}

std::optional<std::vector<long long>>
solve_linear(const SmithNormalForm &snf, const std::vector<long long> &rhs) {
  if (static_cast<int>(rhs.size()) != snf.d.rows)
    throw std::invalid_argument("solve_linear right-hand side has wrong length");
  const std::vector<long long> y = mat_vec(snf.u, rhs);
  std::vector<long long> z(static_cast<std::size_t>(snf.d.cols), 0);
  const int n = std::min(snf.d.rows, snf.d.cols);
  for (int i = 0; i < snf.d.rows; ++i) {
    const long long yi = y[static_cast<std::size_t>(i)];
    const long long di = i < n ? snf.d.at(i, i) : 0;
    if (di == 0) {
      if (yi != 0)
        return std::nullopt;
    } else {
      if (yi % di != 0)
        return std::nullopt;
      z[static_cast<std::size_t>(i)] = yi / di;
    }
  }
  return mat_vec(snf.v, z);
}

std::vector<long long>
subgroup_invariant_factors(const std::vector<std::vector<long long>> &gens,
                           const std::vector<long long> &moduli) {
  const int r = static_cast<int>(moduli.size());
  if (r == 0)
    return {};
  for (long long m : moduli)
    if (m < 1)
      throw std::invalid_argument("moduli must be positive");
  const int k = static_cast<int>(gens.size());
  IntegerMatrix m(r, k + r);
  for (int j = 0; j < k; ++j) {
    if (static_cast<int>(gens[static_cast<std::size_t>(j)].size()) != r)
      throw std::invalid_argument("generator vector has wrong length");
    for (int i = 0; i < r; ++i)
      m.at(i, j) = gens[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < r; ++i)
    m.at(i, k + i) = moduli[static_cast<std::size_t>(i)];

  // Column lattice L of m, with basis u_inv * diag(d). The full lattice
  // diag(moduli)*Z^r sits inside L; expressing it in the basis coordinates
  // gives the relation matrix of the generated subgroup.
  const SmithNormalForm snf = smith_normal_form(m);
  if (snf.rank != r)
    throw std::logic_error("subgroup lattice lost full rank");
  IntegerMatrix c(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const long long num = checked_mul(snf.u.at(i, j), moduli[static_cast<std::size_t>(j)]);
      const long long di = snf.d.at(i, i);
      if (num % di != 0)
        throw std::logic_error("modulus lattice not contained in span");
      c.at(i, j) = num / di;
    }
  return smith_normal_form(c).nontrivial_factors();
}

namespace {

// unit u mod n with u * a = gcd(a, n) (mod n); a in [0, n)
long long unit_multiplier(long long a, long long n) {
  const long long g = std::gcd(a, n); // gcd(0, n) = n
  if (a == 0 || g == n)
    return 1;
  const long long ap = a / g, np = n / g;
  long long x, y;
  egcd(ap % np, np, x, y); // x = ap^-1 mod np
  long long u = mod_reduce(x, np);
  if (u == 0)
    u = np; // np = 1 case: any unit works
  while (std::gcd(u, n) != 1)
    u += np;
  return u % n;
}

// modular Smith reduction state, all entries kept in [0, n)
struct SmithModWork {
  long long n;
  IntegerMatrix m, u, u_inv, v, v_inv;

  SmithModWork(IntegerMatrix mat, long long n_)
      : n(n_), m(std::move(mat)), u(IntegerMatrix::identity(m.rows)),
        u_inv(IntegerMatrix::identity(m.rows)),
        v(IntegerMatrix::identity(m.cols)),
        v_inv(IntegerMatrix::identity(m.cols)) {
    for (auto &e : m.entries)
      e = mod_reduce(e, n);
  }

  void row_swap(int i, int j) {
    if (i == j)
      return;
    for (int c = 0; c < m.cols; ++c)
      std::swap(m.at(i, c), m.at(j, c));
    for (int c = 0; c < m.rows; ++c) {
      std::swap(u.at(i, c), u.at(j, c));
      std::swap(u_inv.at(c, i), u_inv.at(c, j));
    }
  }
  void col_swap(int i, int j) {
    if (i == j)
      return;
    for (int r = 0; r < m.rows; ++r)
      std::swap(m.at(r, i), m.at(r, j));
    for (int r = 0; r < m.cols; ++r) {
      std::swap(v.at(r, i), v.at(r, j));
      std::swap(v_inv.at(i, r), v_inv.at(j, r));
    }
  }
  // row i -= q * row t
  void row_submul(int i, int t, long long q) {
    q = mod_reduce(q, n);
    if (q == 0)
      return;
    for (int c = 0; c < m.cols; ++c)
      m.at(i, c) = mod_reduce(m.at(i, c) - q * m.at(t, c), n);
    for (int c = 0; c < m.rows; ++c) {
      u.at(i, c) = mod_reduce(u.at(i, c) - q * u.at(t, c), n);
      u_inv.at(c, t) = mod_reduce(u_inv.at(c, t) + q * u_inv.at(c, i), n);
    }
  }
  void col_submul(int j, int t, long long q) {
    q = mod_reduce(q, n);
    if (q == 0)
      return;
    for (int r = 0; r < m.rows; ++r)
      m.at(r, j) = mod_reduce(m.at(r, j) - q * m.at(r, t), n);
    for (int r = 0; r < m.cols; ++r) {
      v.at(r, j) = mod_reduce(v.at(r, j) - q * v.at(r, t), n);
      v_inv.at(t, r) = mod_reduce(v_inv.at(t, r) + q * v_inv.at(j, r), n);
    }
  }
  // (row_t, row_i) <- (x row_t + y row_i, -(b/g) row_t + (a/g) row_i),
  // the determinant-1 pair combination from g = gcd(a,b) = x a + y b
  void row_pair(int t, int i, long long x, long long y, long long aq,
                long long bq) {
    for (int c = 0; c < m.cols; ++c) {
      const long long mt = m.at(t, c), mi = m.at(i, c);
      m.at(t, c) = mod_reduce(x * mt + y * mi, n);
      m.at(i, c) = mod_reduce(-bq * mt + aq * mi, n);
    }
    for (int c = 0; c < m.rows; ++c) {
      const long long ut = u.at(t, c), ui = u.at(i, c);
      u.at(t, c) = mod_reduce(x * ut + y * ui, n);
      u.at(i, c) = mod_reduce(-bq * ut + aq * ui, n);
      const long long wt = u_inv.at(c, t), wi = u_inv.at(c, i);
      u_inv.at(c, t) = mod_reduce(aq * wt + bq * wi, n);
      u_inv.at(c, i) = mod_reduce(-y * wt + x * wi, n);
    }
  }
  void col_pair(int t, int j, long long x, long long y, long long aq,
                long long bq) {
    for (int r = 0; r < m.rows; ++r) {
      const long long mt = m.at(r, t), mj = m.at(r, j);
      m.at(r, t) = mod_reduce(x * mt + y * mj, n);
      m.at(r, j) = mod_reduce(-bq * mt + aq * mj, n);
    }
    for (int r = 0; r < m.cols; ++r) {
      const long long vt = v.at(r, t), vj = v.at(r, j);
      v.at(r, t) = mod_reduce(x * vt + y * vj, n);
      v.at(r, j) = mod_reduce(-bq * vt + aq * vj, n);
      const long long wt = v_inv.at(t, r), wj = v_inv.at(j, r);
      v_inv.at(t, r) = mod_reduce(aq * wt + bq * wj, n);
      v_inv.at(j, r) = mod_reduce(-y * wt + x * wj, n);
    }
  }
  // row t *= unit w (with w^-1 applied to u_inv)
  void row_scale(int t, long long w) {
    w = mod_reduce(w, n);
    if (w == 1)
      return;
    long long x, y;
    egcd(w, n, x, y); // w x = 1 mod n
    const long long winv = mod_reduce(x, n);
    for (int c = 0; c < m.cols; ++c)
      m.at(t, c) = mod_reduce(m.at(t, c) * w, n);
    for (int c = 0; c < m.rows; ++c) {
      u.at(t, c) = mod_reduce(u.at(t, c) * w, n);
      u_inv.at(c, t) = mod_reduce(u_inv.at(c, t) * winv, n);
    }
  }
};

} // namespace

std::vector<long long> SmithModForm::diagonal() const {
  std::vector<long long> out;
  const int k = std::min(d.rows, d.cols);
  for (int i = 0; i < k; ++i)
    out.push_back(d.at(i, i));
  return out;
}

SmithModForm smith_normal_form_mod(IntegerMatrix mat, long long n) {
  if (n < 1)
    throw std::invalid_argument("modulus must be positive");
  if (n > (1LL << 30))
    throw std::invalid_argument("modular Smith form needs a small modulus");
  SmithModWork w(std::move(mat), n);
  const int k = std::min(w.m.rows, w.m.cols);

  for (int t = 0; t < k; ++t) {
    // pivot: entry whose ideal mod n is largest (smallest gcd with n)
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < w.m.rows; ++i)
      for (int j = t; j < w.m.cols; ++j) {
        const long long a = w.m.at(i, j);
        if (a == 0)
          continue;
        const long long g = std::gcd(a, n);
        if (pi < 0 || g < best) {
          best = g;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0)
      break; // trailing submatrix is zero mod n
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool combined = false;
      for (int i = t + 1; i < w.m.rows; ++i) {
        const long long b = w.m.at(i, t);
        if (b == 0)
          continue;
        const long long a = w.m.at(t, t);
        const long long g = std::gcd(a, n);
        if (b % g == 0) {
          // q a = b (mod n) via the unit that maps a onto g
          const long long q =
              mod_reduce((b / g) % n * unit_multiplier(a, n) % n, n);
          w.row_submul(i, t, q);
        } else {
          long long x, y;
          const long long gg = egcd(a, b, x, y);
          w.row_pair(t, i, mod_reduce(x, n), mod_reduce(y, n),
                     mod_reduce(a / gg, n), mod_reduce(b / gg, n));
          combined = true;
        }
      }
      for (int j = t + 1; j < w.m.cols; ++j) {
        const long long b = w.m.at(t, j);
        if (b == 0)
          continue;
        const long long a = w.m.at(t, t);
        const long long g = std::gcd(a, n);
        if (b % g == 0) {
          const long long q =
              mod_reduce((b / g) % n * unit_multiplier(a, n) % n, n);
          w.col_submul(j, t, q);
        } else {
          long long x, y;
          const long long gg = egcd(a, b, x, y);
          w.col_pair(t, j, mod_reduce(x, n), mod_reduce(y, n),
                     mod_reduce(a / gg, n), mod_reduce(b / gg, n));
          combined = true;
        }
      }
      if (combined)
        continue;
      bool clean = true;
      for (int i = t + 1; i < w.m.rows && clean; ++i)
        if (w.m.at(i, t) != 0)
          clean = false;
      for (int j = t + 1; j < w.m.cols && clean; ++j)
        if (w.m.at(t, j) != 0)
          clean = false;
      if (!clean)
        continue;
      // pivot ideal must contain every remaining entry
      const long long g = std::gcd(w.m.at(t, t), n);
      bool fixed = false;
      for (int i = t + 1; i < w.m.rows && !fixed; ++i)
        for (int j = t + 1; j < w.m.cols; ++j)
          if (w.m.at(i, j) % g != 0) {
            w.row_submul(t, i, n - 1); // row t += row i
            fixed = true;
            break;
          }
      if (!fixed)
        break;
    }
    // normalize the pivot to gcd(pivot, n)
    w.row_scale(t, unit_multiplier(w.m.at(t, t), n));
  }

  // zero residues on the diagonal read as n (the full annihilator)
  for (int i = 0; i < k; ++i)
    if (w.m.at(i, i) == 0)
      w.m.at(i, i) = n;

  SmithModForm out;
  out.modulus = n;
  out.d = std::move(w.m);
  out.u = std::move(w.u);
  out.u_inv = std::move(w.u_inv);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);
  return out;
}

std::optional<std::vector<long long>>
solve_linear_mod(const SmithModForm &snf, const std::vector<long long> &rhs) {
  const long long n = snf.modulus;
  if (static_cast<int>(rhs.size()) != snf.d.rows)
    throw std::invalid_argument("solve_linear_mod rhs has wrong length");
  std::vector<long long> y(static_cast<std::size_t>(snf.d.rows), 0);
  for (int i = 0; i < snf.d.rows; ++i) {
    long long acc = 0;
    for (int j = 0; j < snf.d.rows; ++j)
      acc = mod_reduce(acc + snf.u.at(i, j) * mod_reduce(rhs[static_cast<std::size_t>(j)], n), n);
    y[static_cast<std::size_t>(i)] = acc;
  }
  const int k = std::min(snf.d.rows, snf.d.cols);
  std::vector<long long> z(static_cast<std::size_t>(snf.d.cols), 0);
  for (int i = 0; i < snf.d.rows; ++i) {
    const long long yi = y[static_cast<std::size_t>(i)];
    const long long di = i < k ? snf.d.at(i, i) : n;
    if (yi % di != 0)
      return std::nullopt;
    if (i < k)
      z[static_cast<std::size_t>(i)] = yi / di;
  }
  std::vector<long long> x(static_cast<std::size_t>(snf.d.cols), 0);
  for (int i = 0; i < snf.d.cols; ++i) {
    long long acc = 0;
    for (int j = 0; j < snf.d.cols; ++j)
      acc = mod_reduce(acc + snf.v.at(i, j) * z[static_cast<std::size_t>(j)], n);
    x[static_cast<std::size_t>(i)] = acc;
  }
  return x;
}

ModularRowEchelon::ModularRowEchelon(int cols, long long modulus)
    : cols_(cols), modulus_(modulus) {
  if (cols < 0 || modulus < 1)
    throw std::invalid_argument("bad echelon dimensions");
  pivot_rows_.assign(static_cast<std::size_t>(cols), {});
  for (int c = 0; c < cols; ++c) {
    std::vector<long long> row(static_cast<std::size_t>(cols), 0);
    row[static_cast<std::size_t>(c)] = modulus; // m*Z^cols is always present
    pivot_rows_[static_cast<std::size_t>(c)] = std::move(row);
  }
}

void ModularRowEchelon::insert(std::vector<long long> row) {
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("echelon row has wrong length");
  for (auto &v : row)
    v = mod_reduce(v, modulus_);
  for (int c = 0; c < cols_; ++c) {
    long long a = row[static_cast<std::size_t>(c)];
    if (a == 0)
      continue;
    auto &piv = pivot_rows_[static_cast<std::size_t>(c)];
    const long long p = piv[static_cast<std::size_t>(c)];
    if (a % p == 0) {
      const long long q = a / p;
      for (int j = c; j < cols_; ++j)
        row[static_cast<std::size_t>(j)] =
            mod_reduce(row[static_cast<std::size_t>(j)] -
                           checked_mul(q, piv[static_cast<std::size_t>(j)]),
                       modulus_);
      continue;
    }
    long long x, y;
    const long long g = egcd(p, a, x, y);
    std::vector<long long> new_piv(static_cast<std::size_t>(cols_), 0);
    std::vector<long long> new_row(static_cast<std::size_t>(cols_), 0);
    const long long pq = p / g, aq = a / g;
    for (int j = c; j < cols_; ++j) {
      const long long pv = piv[static_cast<std::size_t>(j)];
      const long long rv = row[static_cast<std::size_t>(j)];
      new_piv[static_cast<std::size_t>(j)] = mod_reduce(
          checked_add(checked_mul(x, pv), checked_mul(y, rv)), modulus_);
      new_row[static_cast<std::size_t>(j)] = mod_reduce(
          checked_sub(checked_mul(pq, rv), checked_mul(aq, pv)), modulus_);
    }
    // x*p + y*a = g with 0 < g < modulus, so the new pivot entry is g
    if (new_piv[static_cast<std::size_t>(c)] != g)
      throw std::logic_error("echelon pivot update lost the gcd");
    piv = std::move(new_piv);
    row = std::move(new_row);
  }
}

IntegerMatrix ModularRowEchelon::matrix() const {
  IntegerMatrix m(cols_, cols_);
  for (int r = 0; r < cols_; ++r)
    for (int c = 0; c < cols_; ++c)
      m.at(r, c) = pivot_rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

} // namespace quandlekit
