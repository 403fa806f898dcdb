#include "quandlekit/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace quandlekit {

namespace {

std::size_t st(int i) { return static_cast<std::size_t>(i); }

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

} // namespace

std::string Permutation::cycle_string() const {
  const int n = degree();
  std::vector<char> done(st(n), 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (done[st(i)] || (*this)(i) == i)
      continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!done[st(j)]) {
      done[st(j)] = 1;
      if (!first)
        out << ' ';
      out << j;
      first = false;
      j = (*this)(j);
    }
    out << ')';
  }
  return any ? out.str() : std::string("e");
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul_table,
                         std::vector<int> gens,
                         std::vector<std::string> elem_labels, int max_order)
    : mul(std::move(mul_table)), generators(std::move(gens)),
      labels(std::move(elem_labels)) {
  order = static_cast<int>(mul.size());
  if (order <= 0)
    throw GroupValidationError("group must have at least one element");
  if (order > max_order)
    throw GroupValidationError("group order " + std::to_string(order) +
                               " exceeds dense-table cap " +
                               std::to_string(max_order));
  for (const auto &row : mul) {
    if (static_cast<int>(row.size()) != order)
      throw GroupValidationError("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= order)
        throw GroupValidationError("multiplication table entry out of range");
  }

  // two-sided identity
  int id = -1;
  for (int e = 0; e < order && id < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < order && ok; ++g)
      ok = op(e, g) == g && op(g, e) == g;
    if (ok)
      id = e;
  }
  if (id < 0)
    throw GroupValidationError("no two-sided identity element");
  identity = id;

  // two-sided inverses
  inverse.assign(st(order), -1);
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      if (op(g, h) == identity && op(h, g) == identity) {
        inverse[st(g)] = h;
        break;
      }
    }
    if (inverse[st(g)] < 0)
      throw GroupValidationError("element " + std::to_string(g) +
                                 " has no two-sided inverse");
  }

  // associativity, exhaustively
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          throw GroupValidationError("multiplication table is not associative");

  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (int g : generators)
    if (g < 0 || g >= order)
      throw GroupValidationError("generator index out of range");
  if (static_cast<int>(subgroup_closure(*this, generators).size()) != order)
    throw GroupValidationError("generators do not generate the group");

  if (labels.empty()) {
    labels.reserve(st(order));
    for (int g = 0; g < order; ++g)
      labels.push_back("g" + std::to_string(g));
  }
  if (static_cast<int>(labels.size()) != order)
    throw GroupValidationError("label count does not match group order");
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  int x = g;
  while (x != identity) {
    x = op(x, g);
    ++k;
  }
  return k;
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (int g = 0; g < order; ++g)
    e = lcm_ll(e, element_order(g));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order; ++g)
    for (int h = g + 1; h < order; ++h)
      if (op(g, h) != op(h, g))
        return false;
  return true;
}

GroupHomomorphism::GroupHomomorphism(FiniteGroup dom, FiniteGroup cod,
                                     std::vector<int> img)
    : domain(std::move(dom)), codomain(std::move(cod)), image(std::move(img)) {
  if (static_cast<int>(image.size()) != domain.order)
    throw GroupValidationError("homomorphism image has wrong length");
  for (int v : image)
    if (v < 0 || v >= codomain.order)
      throw GroupValidationError("homomorphism image out of range");
  if (image[st(domain.identity)] != codomain.identity)
    throw GroupValidationError("homomorphism does not preserve the identity");
  for (int g = 0; g < domain.order; ++g)
    for (int h = 0; h < domain.order; ++h)
      if (image[st(domain.op(g, h))] !=
          codomain.op(image[st(g)], image[st(h)]))
        throw GroupValidationError("map is not a homomorphism");
}

bool GroupHomomorphism::is_surjective() const {
  std::vector<char> hit(st(codomain.order), 0);
  for (int v : image)
    hit[st(v)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<int> GroupHomomorphism::kernel() const {
  std::vector<int> ker;
  for (int g = 0; g < domain.order; ++g)
    if (image[st(g)] == codomain.identity)
      ker.push_back(g);
  return ker;
}

namespace {

FiniteGroup make_cyclic(int n, int max_order) {
  std::vector<std::vector<int>> mul(st(n), std::vector<int>(st(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[st(i)][st(j)] = (i + j) % n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "e" : "a^" + std::to_string(i));
  return FiniteGroup(std::move(mul), {1 % n}, std::move(labels), max_order);
}

// Elements 0..n-1 are r^i, n..2n-1 are s*r^i, with s r s^-1 = r^-1.
FiniteGroup make_dihedral(int n, int max_order) {
  const int m = 2 * n;
  std::vector<std::vector<int>> mul(st(m), std::vector<int>(st(m)));
  auto idx = [n](bool flip, int i) { return (flip ? n : 0) + ((i % n) + n) % n; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mul[st(idx(false, i))][st(idx(false, j))] = idx(false, i + j);
      mul[st(idx(false, i))][st(idx(true, j))] = idx(true, j - i);
      mul[st(idx(true, i))][st(idx(false, j))] = idx(true, i + j);
      mul[st(idx(true, i))][st(idx(true, j))] = idx(false, j - i);
    }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "e" : "r^" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "s" : "s*r^" + std::to_string(i));
  std::vector<int> gens = n >= 2 ? std::vector<int>{1, n} : std::vector<int>{n};
  return FiniteGroup(std::move(mul), std::move(gens), std::move(labels),
                     max_order);
}

// Q_{4n} = <a, b | a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1>.
// Elements 0..2n-1 are a^i, 2n..4n-1 are b*a^i.
FiniteGroup make_generalized_quaternion(int n, int max_order) {
  const int tn = 2 * n;
  const int m = 4 * n;
  std::vector<std::vector<int>> mul(st(m), std::vector<int>(st(m)));
  auto idx = [tn](bool b, int i) { return (b ? tn : 0) + ((i % tn) + tn) % tn; };
  for (int i = 0; i < tn; ++i)
    for (int j = 0; j < tn; ++j) {
      mul[st(idx(false, i))][st(idx(false, j))] = idx(false, i + j);
      mul[st(idx(false, i))][st(idx(true, j))] = idx(true, j - i);
      mul[st(idx(true, i))][st(idx(false, j))] = idx(true, i + j);
      mul[st(idx(true, i))][st(idx(true, j))] = idx(false, n + j - i);
    }
  std::vector<std::string> labels;
  for (int i = 0; i < tn; ++i)
    labels.push_back(i == 0 ? "e" : "a^" + std::to_string(i));
  for (int i = 0; i < tn; ++i)
    labels.push_back(i == 0 ? "b" : "b*a^" + std::to_string(i));
  return FiniteGroup(std::move(mul), {1, tn}, std::move(labels), max_order);
}

std::vector<Permutation> symmetric_group_elements(int n) {
  std::vector<int> img(st(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return elems;
}

FiniteGroup make_symmetric(int n, int max_order) {
  auto elems = symmetric_group_elements(n);
  const int m = static_cast<int>(elems.size());
  if (m > max_order)
    throw GroupValidationError("symmetric(" + std::to_string(n) +
                               ") exceeds the order cap");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i)
    index[elems[st(i)].images()] = i;
  std::vector<std::vector<int>> mul(st(m), std::vector<int>(st(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mul[st(i)][st(j)] = index.at((elems[st(i)] * elems[st(j)]).images());
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i)
    labels.push_back(elems[st(i)].cycle_string());
  std::vector<int> gens;
  if (n >= 2) {
    std::vector<int> t(st(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    gens.push_back(index.at(t)); // (0 1)
    std::vector<int> c(st(n));
    for (int i = 0; i < n; ++i)
      c[st(i)] = (i + 1) % n;
    gens.push_back(index.at(c)); // (0 1 ... n-1)
  } else {
    gens.push_back(0);
  }
  return FiniteGroup(std::move(mul), std::move(gens), std::move(labels),
                     max_order);
}

// Klein four group as (Z/2)^2; indices multiply by xor.
FiniteGroup make_klein(int max_order) {
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      mul[st(i)][st(j)] = i ^ j;
  return FiniteGroup(std::move(mul), {1, 2}, {"e", "a", "b", "ab"}, max_order);
}

} // namespace

FiniteGroup group_from_family(GroupFamily family, int parameter,
                              int max_order) {
  if (parameter <= 0)
    throw GroupValidationError("family parameter must be positive");
  switch (family) {
  case GroupFamily::cyclic:
    if (parameter > max_order)
      throw GroupValidationError("cyclic order exceeds the order cap");
    return make_cyclic(parameter, max_order);
  case GroupFamily::dihedral:
    if (2LL * parameter > max_order)
      throw GroupValidationError("dihedral order exceeds the order cap");
    return make_dihedral(parameter, max_order);
  case GroupFamily::generalized_quaternion:
    if (4LL * parameter > max_order)
      throw GroupValidationError("quaternion order exceeds the order cap");
    return make_generalized_quaternion(parameter, max_order);
  case GroupFamily::symmetric: {
    long long f = 1;
    for (int i = 2; i <= parameter; ++i) {
      f *= i;
      if (f > max_order)
        throw GroupValidationError("symmetric order exceeds the order cap");
    }
    return make_symmetric(parameter, max_order);
  }
  case GroupFamily::klein:
    return make_klein(max_order);
  }
  throw GroupValidationError("unsupported group family");
}

FiniteGroup group_from_spec(const std::string &spec, int max_order) {
  std::string name = spec;
  int param = 0;
  bool has_param = false;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    name = spec.substr(0, pos);
    try {
      param = std::stoi(spec.substr(pos + 1));
    } catch (const std::exception &) {
      throw GroupValidationError("bad family parameter in spec '" + spec + "'");
    }
    has_param = true;
  }
  if (name == "klein")
    return group_from_family(GroupFamily::klein, 1, max_order);
  if (!has_param)
    throw GroupValidationError("family spec '" + spec +
                               "' needs a parameter, e.g. dihedral:3");
  if (name == "cyclic")
    return group_from_family(GroupFamily::cyclic, param, max_order);
  if (name == "dihedral")
    return group_from_family(GroupFamily::dihedral, param, max_order);
  if (name == "quaternion")
    return group_from_family(GroupFamily::generalized_quaternion, param,
                             max_order);
  if (name == "symmetric")
    return group_from_family(GroupFamily::symmetric, param, max_order);
  throw GroupValidationError("unknown group family '" + name + "'");
}

Permutation symmetric_group_permutation(int n, int g) {
  auto elems = symmetric_group_elements(n);
  return elems.at(st(g));
}

ClosureResult group_closure(int npoints, std::vector<Permutation> gens,
                            std::size_t max_size, int max_order) {
  for (const auto &p : gens)
    if (p.degree() != npoints)
      throw GroupValidationError("generator degree mismatch");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  ClosureResult res;
  res.gens = gens;
  std::map<std::vector<int>, int> index;
  std::deque<int> queue;

  const Permutation id = Permutation::identity(npoints);
  res.elements.push_back(id);
  res.words.push_back({});
  index[id.images()] = 0;
  queue.push_back(0);

  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation next = res.elements[st(cur)] * gens[gi];
      auto [it, inserted] = index.emplace(next.images(),
                                          static_cast<int>(res.elements.size()));
      if (!inserted)
        continue;
      if (res.elements.size() >= max_size)
        throw GroupValidationError("closure exceeds size bound " +
                                   std::to_string(max_size));
      res.elements.push_back(std::move(next));
      auto word = res.words[st(cur)];
      word.push_back(static_cast<int>(gi));
      res.words.push_back(std::move(word));
      queue.push_back(it->second);
    }
  }

  const int m = static_cast<int>(res.elements.size());
  if (m > max_order)
    throw GroupValidationError("closure order " + std::to_string(m) +
                               " exceeds dense-table cap " +
                               std::to_string(max_order));
  std::vector<std::vector<int>> mul(st(m), std::vector<int>(st(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mul[st(i)][st(j)] =
          index.at((res.elements[st(i)] * res.elements[st(j)]).images());
  std::vector<int> gen_indices;
  for (const auto &g : gens)
    gen_indices.push_back(index.at(g.images()));
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i)
    labels.push_back(res.elements[st(i)].cycle_string());
  res.group = FiniteGroup(std::move(mul), std::move(gen_indices),
                          std::move(labels), max_order);
  return res;
}

std::vector<int> center(const FiniteGroup &g) {
  std::vector<int> z;
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b)
      central = g.op(a, b) == g.op(b, a);
    if (central)
      z.push_back(a);
  }
  return z;
}

bool is_subgroup(const FiniteGroup &g, const std::vector<int> &elems) {
  std::vector<char> in(st(g.order), 0);
  for (int e : elems) {
    if (e < 0 || e >= g.order)
      return false;
    in[st(e)] = 1;
  }
  if (!in[st(g.identity)])
    return false;
  for (int a : elems) {
    if (!in[st(g.inv(a))])
      return false;
    for (int b : elems)
      if (!in[st(g.op(a, b))])
        return false;
  }
  return true;
}

std::vector<int> subgroup_closure(const FiniteGroup &g, std::vector<int> seed) {
  std::vector<char> in(st(g.order), 0);
  std::deque<int> queue;
  auto add = [&](int x) {
    if (!in[st(x)]) {
      in[st(x)] = 1;
      queue.push_back(x);
    }
  };
  add(g.identity);
  for (int s : seed)
    add(s);
  std::vector<int> members;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    members.push_back(a);
    add(g.inv(a));
    for (int b = 0; b < g.order; ++b)
      if (in[st(b)]) {
        add(g.op(a, b));
        add(g.op(b, a));
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> derived_subgroup(const FiniteGroup &g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      comms.push_back(g.op(g.op(a, b), g.op(g.inv(a), g.inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(g, comms);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup &g) {
  std::vector<char> done(st(g.order), 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < g.order; ++a) {
    if (done[st(a)])
      continue;
    std::set<int> cls;
    for (int h = 0; h < g.order; ++h)
      cls.insert(g.conj(h, a));
    std::vector<int> v(cls.begin(), cls.end());
    for (int x : v)
      done[st(x)] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

std::pair<FiniteGroup, GroupHomomorphism>
quotient_by_central(const FiniteGroup &g, const std::vector<int> &a) {
  if (!is_subgroup(g, a))
    throw GroupValidationError("quotient kernel is not a subgroup");
  {
    auto z = center(g);
    std::vector<char> in_center(st(g.order), 0);
    for (int x : z)
      in_center[st(x)] = 1;
    for (int x : a)
      if (!in_center[st(x)])
        throw GroupValidationError("quotient kernel is not central");
  }

  // coset of x, represented by its smallest member
  std::vector<int> rep(st(g.order), -1);
  for (int x = 0; x < g.order; ++x) {
    int r = g.order;
    for (int k : a)
      r = std::min(r, g.op(x, k));
    rep[st(x)] = r;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x)
    if (rep[st(x)] == x)
      reps.push_back(x);
  std::vector<int> coset_index(st(g.order), -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    coset_index[st(reps[i])] = static_cast<int>(i);

  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> mul(st(m), std::vector<int>(st(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mul[st(i)][st(j)] = coset_index[st(rep[st(g.op(reps[st(i)], reps[st(j)]))])];
  std::vector<int> gens;
  for (int s : g.generators)
    gens.push_back(coset_index[st(rep[st(s)])]);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i)
    labels.push_back("[" + g.label(reps[st(i)]) + "]");
  FiniteGroup q(std::move(mul), std::move(gens), std::move(labels));

  std::vector<int> image(st(g.order));
  for (int x = 0; x < g.order; ++x)
    image[st(x)] = coset_index[st(rep[st(x)])];
  GroupHomomorphism proj(g, q, std::move(image));
  return {std::move(q), std::move(proj)};
}

} // namespace quandlekit
