#include "quandlekit/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace quandlekit {

namespace {

std::size_t st(int i) { return static_cast<std::size_t>(i); }

long long mod_reduce(long long v, long long m) {
  v %= m;
  if (v < 0)
    v += m;
  return v;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

void check_cocycle_identity(const FiniteGroup &g, long long m,
                            const std::vector<std::vector<long long>> &v) {
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c) {
        const long long lhs = v[st(a)][st(b)] + v[st(g.op(a, b))][st(c)];
        const long long rhs = v[st(b)][st(c)] + v[st(a)][st(g.op(b, c))];
        if (mod_reduce(lhs - rhs, m) != 0)
          throw std::invalid_argument(
              "cocycle identity fails at (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")");
      }
}

} // namespace

CocycleZn make_cocycle(FiniteGroup group, long long modulus,
                       std::vector<std::vector<long long>> values) {
  if (modulus < 1)
    throw std::invalid_argument("cocycle modulus must be positive");
  if (static_cast<int>(values.size()) != group.order)
    throw std::invalid_argument("cocycle table has wrong number of rows");
  for (auto &row : values) {
    if (static_cast<int>(row.size()) != group.order)
      throw std::invalid_argument("cocycle table is not square");
    for (auto &v : row)
      v = mod_reduce(v, modulus);
  }
  check_cocycle_identity(group, modulus, values);
  // the identity rows of a cocycle are the constant values[1][1]; dividing
  // out the constant coboundary zeroes them
  const long long c = values[st(group.identity)][st(group.identity)];
  if (c != 0)
    for (auto &row : values)
      for (auto &v : row)
        v = mod_reduce(v - c, modulus);
  for (int g = 0; g < group.order; ++g)
    if (values[st(group.identity)][st(g)] != 0 ||
        values[st(g)][st(group.identity)] != 0)
      throw std::logic_error("cocycle normalization failed");
  return CocycleZn{std::move(group), modulus, std::move(values)};
}

CocycleZn zero_cocycle(FiniteGroup group, long long modulus) {
  const int n = group.order;
  return make_cocycle(std::move(group), modulus,
                      std::vector<std::vector<long long>>(
                          st(n), std::vector<long long>(st(n), 0)));
}

CocycleZn coboundary_of(FiniteGroup group, const std::vector<long long> &f,
                        long long modulus) {
  if (static_cast<int>(f.size()) != group.order)
    throw std::invalid_argument("expected one exponent per group element");
  if (f[st(group.identity)] % modulus != 0)
    throw std::invalid_argument("coboundary exponents need f[identity] = 0");
  const int n = group.order;
  std::vector<std::vector<long long>> values(st(n),
                                             std::vector<long long>(st(n), 0));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      values[st(g)][st(h)] =
          mod_reduce(f[st(group.op(g, h))] - f[st(g)] - f[st(h)], modulus);
  return make_cocycle(std::move(group), modulus, std::move(values));
}

CohomologyGroup CohomologyGroup::compute(const FiniteGroup &g,
                                         long long modulus) {
  if (g.order > kMaxCohomologyOrder)
    throw std::invalid_argument(
        "second cohomology size bound exceeded: order " +
        std::to_string(g.order) + " > " + std::to_string(kMaxCohomologyOrder));
  CohomologyGroup h;
  h.group_ = g;
  h.modulus_ = modulus == 0 ? g.order : modulus;
  if (h.modulus_ < 1)
    throw std::invalid_argument("cohomology modulus must be positive");
  h.group_exponent_ = g.exponent();
  const long long m = h.modulus_;

  h.pair_pos_.assign(st(g.order), -1);
  for (int x = 0; x < g.order; ++x)
    if (x != g.identity) {
      h.pair_pos_[st(x)] = static_cast<int>(h.nonid_.size());
      h.nonid_.push_back(x);
    }
  h.n1_ = static_cast<int>(h.nonid_.size());
  h.n2_ = h.n1_ * h.n1_;
  const int n1 = h.n1_, n2 = h.n2_;
  auto pair_index = [&h, n1](int a, int b) {
    return h.pair_pos_[st(a)] * n1 + h.pair_pos_[st(b)];
  };

  // coboundary matrix: delta(f)(g,h) = f(gh) - f(g) - f(h), normalized
  h.b2_ = IntegerMatrix(n2, n1);
  for (int a : h.nonid_)
    for (int b : h.nonid_) {
      const int row = pair_index(a, b);
      const int ab = g.op(a, b);
      if (ab != g.identity)
        h.b2_.at(row, h.pair_pos_[st(ab)]) += 1;
      h.b2_.at(row, h.pair_pos_[st(a)]) -= 1;
      h.b2_.at(row, h.pair_pos_[st(b)]) -= 1;
    }

  // Cocycle module {x in (Z/m)^n2 : Hx = 0 mod m}: the cocycle identity
  // rows are streamed through the modular row echelon, and one modular
  // Smith form of the result turns the kernel into (+)_i Z/hdiag_[i].
  {
    ModularRowEchelon ech(n2, m);
    std::vector<long long> row(st(n2), 0);
    for (int a : h.nonid_)
      for (int b : h.nonid_)
        for (int c : h.nonid_) {
          std::fill(row.begin(), row.end(), 0);
          row[st(pair_index(b, c))] += 1;
          const int ab = g.op(a, b);
          if (ab != g.identity)
            row[st(pair_index(ab, c))] -= 1;
          const int bc = g.op(b, c);
          if (bc != g.identity)
            row[st(pair_index(a, bc))] += 1;
          row[st(pair_index(a, b))] -= 1;
          ech.insert(row);
        }
    const SmithModForm snf = smith_normal_form_mod(ech.matrix(), m);
    h.vh_ = snf.v;
    h.vh_inv_ = snf.v_inv;
    h.hdiag_.assign(st(n2), 1);
    for (int i = 0; i < n2; ++i)
      h.hdiag_[st(i)] = snf.d.at(i, i); // a divisor of m
  }

  // relation columns shared by both quotients: the module annihilators
  auto annihilator_columns = [&](IntegerMatrix &rel, int offset) {
    for (int i = 0; i < n2; ++i)
      rel.at(i, offset + i) = h.hdiag_[st(i)];
  };

  // H^2(G, mu_m): kernel module / coboundary columns
  {
    IntegerMatrix rel(n2, n1 + n2);
    std::vector<long long> col(st(n2));
    for (int j = 0; j < n1; ++j) {
      for (int i = 0; i < n2; ++i)
        col[st(i)] = h.b2_.at(i, j);
      const std::vector<long long> w = h.kernel_coordinates(col);
      for (int i = 0; i < n2; ++i)
        rel.at(i, j) = w[st(i)];
    }
    annihilator_columns(rel, n1);
    const SmithModForm snf = smith_normal_form_mod(std::move(rel), m);
    h.u_mu_ = snf.u;
    for (int i = 0; i < n2; ++i) {
      const long long f = snf.d.at(i, i);
      if (f > 1) {
        h.mu_factors_.push_back(f);
        h.mu_positions_.push_back(i);
      }
    }
    for (std::size_t k = 0; k < h.mu_positions_.size(); ++k) {
      std::vector<long long> w(st(n2));
      for (int r = 0; r < n2; ++r)
        w[st(r)] = snf.u_inv.at(r, h.mu_positions_[k]);
      h.mu_basis_.push_back(h.kernel_vector_to_cocycle(w));
    }
  }

  // image in H^2(G, C^x): kernel module / C^x-trivial cocycles.
  // A cocycle x is C^x-trivial iff e*x is a coboundary mod m*e (any C^x
  // witness can be scaled into the (m*e)-th roots of unity), so the trivial
  // module is generated by s_i * u_inv e_i from the Smith form of the
  // coboundary matrix mod m*e.
  {
    const long long e = h.group_exponent_;
    const long long big = checked_mul(m, e);
    const SmithModForm snf = smith_normal_form_mod(h.b2_, big);
    IntegerMatrix rel(n2, n2 + n2);
    std::vector<long long> col(st(n2));
    for (int j = 0; j < n2; ++j) {
      const long long dj = j < std::min(n2, n1) ? snf.d.at(j, j) : big;
      const long long sj = dj / std::gcd(dj, e);
      for (int i = 0; i < n2; ++i)
        col[st(i)] = (snf.u_inv.at(i, j) * (sj % m)) % m;
      const std::vector<long long> w = h.kernel_coordinates(col);
      for (int i = 0; i < n2; ++i)
        rel.at(i, j) = w[st(i)];
    }
    annihilator_columns(rel, n2);
    const SmithModForm q = smith_normal_form_mod(std::move(rel), m);
    h.u_cx_ = q.u;
    for (int i = 0; i < n2; ++i) {
      const long long f = q.d.at(i, i);
      if (f > 1) {
        h.cx_factors_.push_back(f);
        h.cx_positions_.push_back(i);
      }
    }
    for (std::size_t k = 0; k < h.cx_positions_.size(); ++k) {
      std::vector<long long> w(st(n2));
      for (int r = 0; r < n2; ++r)
        w[st(r)] = q.u_inv.at(r, h.cx_positions_[k]);
      h.cx_basis_.push_back(h.kernel_vector_to_cocycle(w));
    }
  }

  return h;
}

std::vector<long long>
CohomologyGroup::cocycle_vector(const CocycleZn &a) const {
  if (a.group != group_)
    throw std::invalid_argument("cocycle belongs to a different group");
  std::vector<long long> x(st(n2_), 0);
  for (int g : nonid_)
    for (int k : nonid_)
      x[st(pair_pos_[st(g)] * n1_ + pair_pos_[st(k)])] = a.values[st(g)][st(k)];
  return x;
}

std::vector<long long>
CohomologyGroup::kernel_coordinates(const std::vector<long long> &x) const {
  const long long m = modulus_;
  std::vector<long long> y(st(n2_), 0);
  for (int i = 0; i < n2_; ++i) {
    long long acc = 0;
    for (int j = 0; j < n2_; ++j)
      acc = mod_reduce(acc + vh_inv_.at(i, j) * mod_reduce(x[st(j)], m), m);
    y[st(i)] = acc;
  }
  for (int i = 0; i < n2_; ++i) {
    const long long scale = m / hdiag_[st(i)];
    if (y[st(i)] % scale != 0)
      throw std::invalid_argument("vector is not in the cocycle module");
    y[st(i)] /= scale;
  }
  return y;
}

CocycleZn
CohomologyGroup::kernel_vector_to_cocycle(const std::vector<long long> &w) const {
  const long long m = modulus_;
  std::vector<long long> x(st(n2_), 0);
  for (int i = 0; i < n2_; ++i) {
    long long acc = 0;
    for (int j = 0; j < n2_; ++j)
      acc = mod_reduce(acc + vh_.at(i, j) * ((m / hdiag_[st(j)]) *
                                             mod_reduce(w[st(j)], m) % m),
                       m);
    x[st(i)] = acc;
  }
  std::vector<std::vector<long long>> values(
      st(group_.order), std::vector<long long>(st(group_.order), 0));
  for (int a : nonid_)
    for (int b : nonid_)
      values[st(a)][st(b)] = x[st(pair_pos_[st(a)] * n1_ + pair_pos_[st(b)])];
  return make_cocycle(group_, m, std::move(values));
}

long long CohomologyGroup::mu_order() const {
  long long o = 1;
  for (long long f : mu_factors_)
    o = checked_mul(o, f);
  return o;
}

long long CohomologyGroup::cx_order() const {
  long long o = 1;
  for (long long f : cx_factors_)
    o = checked_mul(o, f);
  return o;
}

std::vector<long long>
CohomologyGroup::mu_class_coordinates(const CocycleZn &a) const {
  if (a.modulus != modulus_)
    throw std::invalid_argument("cocycle modulus does not match");
  const std::vector<long long> w = kernel_coordinates(cocycle_vector(a));
  std::vector<long long> z(st(n2_), 0);
  for (int i = 0; i < n2_; ++i) {
    long long acc = 0;
    for (int j = 0; j < n2_; ++j)
      acc = mod_reduce(acc + u_mu_.at(i, j) * w[st(j)], modulus_);
    z[st(i)] = acc;
  }
  std::vector<long long> coords;
  for (std::size_t i = 0; i < mu_positions_.size(); ++i)
    coords.push_back(mod_reduce(z[st(mu_positions_[i])], mu_factors_[i]));
  return coords;
}

std::vector<long long>
CohomologyGroup::cx_class_coordinates(const CocycleZn &a) const {
  if (a.group != group_)
    throw std::invalid_argument("cocycle belongs to a different group");
  const int r = static_cast<int>(cx_factors_.size());
  if (n2_ == 0)
    return std::vector<long long>(st(r), 0);
  const long long big = checked_mul(lcm_ll(a.modulus, modulus_), group_exponent_);

  // a = sum_i t_i b_i + delta(f), over exponents mod big; a C^x witness for
  // the difference can always be scaled into the big-th roots of unity
  IntegerMatrix sys(n2_, r + n1_);
  for (int i = 0; i < r; ++i) {
    const std::vector<long long> bi = cocycle_vector(cx_basis_[st(i)]);
    const long long scale = big / modulus_;
    for (int row = 0; row < n2_; ++row)
      sys.at(row, i) = (bi[st(row)] * (scale % big)) % big;
  }
  for (int row = 0; row < n2_; ++row)
    for (int j = 0; j < n1_; ++j)
      sys.at(row, r + j) = b2_.at(row, j);
  std::vector<long long> rhs = cocycle_vector(a);
  const long long scale = big / a.modulus;
  for (auto &v : rhs)
    v = (v * (scale % big)) % big;

  const auto sol = solve_linear_mod(smith_normal_form_mod(std::move(sys), big), rhs);
  if (!sol)
    throw std::invalid_argument(
        "cocycle class lies outside the computed C^x image");
  std::vector<long long> coords;
  for (int i = 0; i < r; ++i)
    coords.push_back(mod_reduce((*sol)[st(i)], cx_factors_[st(i)]));
  return coords;
}

CohomologyGroup second_cohomology(const FiniteGroup &g, long long modulus) {
  return CohomologyGroup::compute(g, modulus);
}

CoboundaryWitness is_coboundary_over_Cx(const CocycleZn &a) {
  const FiniteGroup &g = a.group;
  const int n1 = g.order - 1;
  const int n2 = n1 * n1;
  const long long big = checked_mul(a.modulus, g.exponent());

  CoboundaryWitness w;
  w.witness_modulus = big;
  if (n2 == 0) {
    w.is_coboundary = true;
    w.exponents.assign(st(g.order), 0);
    return w;
  }

  std::vector<int> pos(st(g.order), -1);
  std::vector<int> nonid;
  for (int x = 0; x < g.order; ++x)
    if (x != g.identity) {
      pos[st(x)] = static_cast<int>(nonid.size());
      nonid.push_back(x);
    }

  IntegerMatrix sys(n2, n1);
  std::vector<long long> rhs(st(n2), 0);
  const long long scale = big / a.modulus;
  for (int x : nonid)
    for (int y : nonid) {
      const int row = pos[st(x)] * n1 + pos[st(y)];
      const int xy = g.op(x, y);
      if (xy != g.identity)
        sys.at(row, pos[st(xy)]) += 1;
      sys.at(row, pos[st(x)]) -= 1;
      sys.at(row, pos[st(y)]) -= 1;
      rhs[st(row)] = (a.values[st(x)][st(y)] * (scale % big)) % big;
    }

  const auto sol = solve_linear_mod(smith_normal_form_mod(std::move(sys), big), rhs);
  if (!sol)
    return w;
  w.is_coboundary = true;
  w.exponents.assign(st(g.order), 0);
  for (int x : nonid)
    w.exponents[st(x)] = (*sol)[st(pos[st(x)])];
  return w;
}

CocycleZn inflation(const CocycleZn &a, const GroupHomomorphism &theta) {
  if (a.group != theta.codomain)
    throw std::invalid_argument("cocycle does not live on the morphism codomain");
  const FiniteGroup &g = theta.domain;
  std::vector<std::vector<long long>> values(st(g.order),
                                             std::vector<long long>(st(g.order)));
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      values[st(x)][st(y)] = a.values[st(theta(x))][st(theta(y))];
  return make_cocycle(g, a.modulus, std::move(values));
}

GroupLinearRep linear_lift_from_witness(const ProjectiveRep &p,
                                        const CoboundaryWitness &witness,
                                        const Tolerances &tol) {
  if (!witness.is_coboundary)
    throw std::invalid_argument("witness does not certify a coboundary");
  if (static_cast<int>(witness.exponents.size()) != p.group.order)
    throw std::invalid_argument("witness exponent count mismatch");
  constexpr double kTau = 2.0 * 3.141592653589793238462643383279502884;
  std::vector<ComplexMatrix> mats;
  mats.reserve(p.lift.size());
  for (int g = 0; g < p.group.order; ++g) {
    const double angle = -kTau * static_cast<double>(witness.exponents[st(g)]) /
                         static_cast<double>(witness.witness_modulus);
    mats.push_back(std::polar(1.0, angle) * p.lift[st(g)]);
  }
  return make_linear_rep(p.group, std::move(mats), tol);
}

CocycleZn cocycle_of_projective(const ProjectiveRep &p, const Tolerances &tol) {
  const FiniteGroup &g = p.group;
  const long long dim = p.dim;
  const long long m = lcm_ll(dim, g.order);
  std::vector<std::vector<long long>> values(st(g.order),
                                             std::vector<long long>(st(g.order)));
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      const std::complex<double> lambda = projective_defect_scalar(p, x, y, tol);
      const auto j = snap_root_of_unity(lambda, dim, tol.snap);
      if (!j)
        throw std::invalid_argument(
            "lift defect at (" + std::to_string(x) + ", " + std::to_string(y) +
            ") is not a " + std::to_string(dim) + "-th root of unity");
      values[st(x)][st(y)] = mod_reduce(checked_mul(*j, m / dim), m);
    }
  return make_cocycle(g, m, std::move(values));
}

bool is_stem_extension(const FiniteGroup &g, const std::vector<int> &a) {
  if (!is_subgroup(g, a))
    throw std::invalid_argument("stem-extension kernel must be a subgroup");
  const auto z = center(g);
  const auto d = derived_subgroup(g);
  auto contains = [](const std::vector<int> &sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  };
  for (int x : a)
    if (!contains(z, x) || !contains(d, x))
      return false;
  return true;
}

bool is_schur_cover(const FiniteGroup &g, const GroupHomomorphism &theta) {
  if (theta.domain != g)
    throw std::invalid_argument("morphism domain mismatch");
  if (!theta.is_surjective())
    throw std::invalid_argument("Schur-cover test needs a surjective morphism");
  const std::vector<int> ker = theta.kernel();
  if (!is_stem_extension(g, ker))
    return false;
  const CohomologyGroup h2 = second_cohomology(theta.codomain);
  return static_cast<long long>(ker.size()) == h2.cx_order();
}

} // namespace quandlekit
