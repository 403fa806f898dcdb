#include "quandlekit/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace quandlekit {

namespace {

std::size_t st(int i) { return static_cast<std::size_t>(i); }

std::string axiom_message(QuandleAxiomError::Axiom axiom, int x, int y, int z) {
  std::ostringstream out;
  switch (axiom) {
  case QuandleAxiomError::Axiom::idempotence:
    out << "idempotence fails at x=" << x << ": x>x != x";
    break;
  case QuandleAxiomError::Axiom::distributivity:
    out << "left self-distributivity fails at x=" << x << " y=" << y
        << " z=" << z;
    break;
  case QuandleAxiomError::Axiom::bijectivity:
    out << "row " << x << " is not a bijection: " << x << ">" << y << " == "
        << x << ">" << z;
    break;
  }
  return out.str();
}

} // namespace

QuandleAxiomError::QuandleAxiomError(Axiom axiom_, int x_, int y_, int z_)
    : std::runtime_error(axiom_message(axiom_, x_, y_, z_)), axiom(axiom_),
      x(x_), y(y_), z(z_) {}

FiniteQuandle validate_quandle(int size, std::vector<std::vector<int>> table) {
  if (size <= 0)
    throw std::invalid_argument("quandle must have at least one element");
  if (static_cast<int>(table.size()) != size)
    throw std::invalid_argument("quandle table has wrong number of rows");
  for (const auto &row : table) {
    if (static_cast<int>(row.size()) != size)
      throw std::invalid_argument("quandle table is not square");
    for (int v : row)
      if (v < 0 || v >= size)
        throw std::invalid_argument("quandle table entry out of range");
  }

  FiniteQuandle q{size, std::move(table)};

  for (int x = 0; x < size; ++x)
    if (q.op(x, x) != x)
      throw QuandleAxiomError(QuandleAxiomError::Axiom::idempotence, x, x, x);

  for (int x = 0; x < size; ++x) {
    std::vector<int> seen(st(size), -1);
    for (int y = 0; y < size; ++y) {
      const int v = q.op(x, y);
      if (seen[st(v)] >= 0)
        throw QuandleAxiomError(QuandleAxiomError::Axiom::bijectivity, x,
                                seen[st(v)], y);
      seen[st(v)] = y;
    }
  }

  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      for (int z = 0; z < size; ++z)
        if (q.op(x, q.op(y, z)) != q.op(q.op(x, y), q.op(x, z)))
          throw QuandleAxiomError(QuandleAxiomError::Axiom::distributivity, x,
                                  y, z);

  return q;
}

FiniteQuandle conj_quandle(const FiniteGroup &g) {
  std::vector<std::vector<int>> table(st(g.order), std::vector<int>(st(g.order)));
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      table[st(x)][st(y)] = g.conj(x, y);
  return validate_quandle(g.order, std::move(table));
}

FiniteQuandle trivial_quandle(int n) {
  std::vector<std::vector<int>> table(st(n), std::vector<int>(st(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[st(x)][st(y)] = y;
  return validate_quandle(n, std::move(table));
}

Permutation left_translation(const FiniteQuandle &q, int x) {
  if (x < 0 || x >= q.size)
    throw std::invalid_argument("translation element out of range");
  return Permutation(q.table[st(x)]);
}

OrbitPartition orbits(const FiniteQuandle &q) {
  // union-find over the edges y ~ x > y
  std::vector<int> parent(st(q.size));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int a) {
    while (parent[st(a)] != a) {
      parent[st(a)] = parent[st(parent[st(a)])];
      a = parent[st(a)];
    }
    return a;
  };
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y) {
      const int a = find(y), b = find(q.op(x, y));
      if (a != b)
        parent[st(std::max(a, b))] = std::min(a, b);
    }

  OrbitPartition part;
  part.orbit_of.assign(st(q.size), -1);
  std::map<int, int> block_of_root;
  for (int y = 0; y < q.size; ++y) {
    const int r = find(y);
    auto [it, inserted] =
        block_of_root.emplace(r, static_cast<int>(part.blocks.size()));
    if (inserted)
      part.blocks.push_back({});
    part.blocks[st(it->second)].push_back(y);
    part.orbit_of[st(y)] = it->second;
  }
  return part; // roots are block minima, so blocks are already in order
}

InnerGroup inner_group(const FiniteQuandle &q, std::size_t max_size,
                       int max_order) {
  std::vector<Permutation> translations;
  translations.reserve(st(q.size));
  for (int x = 0; x < q.size; ++x)
    translations.push_back(left_translation(q, x));

  ClosureResult closure =
      group_closure(q.size, translations, max_size, max_order);

  InnerGroup inn;
  inn.quandle = q;
  inn.elements = closure.elements;

  // smallest quandle element realizing each distinct generator permutation
  std::map<std::vector<int>, int> gen_source;
  for (int x = q.size - 1; x >= 0; --x)
    gen_source[translations[st(x)].images()] = x;

  std::map<std::vector<int>, int> elem_index;
  for (std::size_t i = 0; i < closure.elements.size(); ++i)
    elem_index[closure.elements[i].images()] = static_cast<int>(i);

  inn.theta.reserve(st(q.size));
  for (int x = 0; x < q.size; ++x)
    inn.theta.push_back(elem_index.at(translations[st(x)].images()));

  inn.words.reserve(closure.words.size());
  for (const auto &word : closure.words) {
    std::vector<int> w;
    w.reserve(word.size());
    for (int gi : word)
      w.push_back(gen_source.at(closure.gens[st(gi)].images()));
    inn.words.push_back(std::move(w));
  }

  // relabel by translation words; closure labels are cycle strings
  std::vector<std::string> labels;
  labels.reserve(inn.words.size());
  for (const auto &w : inn.words) {
    if (w.empty()) {
      labels.push_back("e");
      continue;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i)
        out << '*';
      out << 'L' << w[i];
    }
    labels.push_back(out.str());
  }
  inn.group = FiniteGroup(closure.group.mul, closure.group.generators,
                          std::move(labels), max_order);

  // theta is a quandle morphism into Conj(Inn(Q))
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y)
      if (inn.theta[st(q.op(x, y))] !=
          inn.group.conj(inn.theta[st(x)], inn.theta[st(y)]))
        throw std::logic_error("translation map is not a quandle morphism");

  return inn;
}

QuandleCharacter make_character(const FiniteQuandle &q,
                                std::vector<std::complex<double>> values) {
  OrbitPartition part = orbits(q);
  if (values.size() != part.blocks.size())
    throw std::invalid_argument("expected one character value per orbit, got " +
                                std::to_string(values.size()) + " for " +
                                std::to_string(part.blocks.size()) + " orbits");
  for (const auto &v : values)
    if (v == std::complex<double>(0.0, 0.0))
      throw std::invalid_argument("character values must be nonzero");

  QuandleCharacter chi{q, std::move(part), std::move(values)};
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y)
      if (chi.value(q.op(x, y)) != chi.value(y))
        throw std::logic_error("character is not constant on orbits");
  return chi;
}

QuandleCharacter trivial_character(const FiniteQuandle &q) {
  return make_character(q, std::vector<std::complex<double>>(
                               orbits(q).blocks.size(), {1.0, 0.0}));
}

QuandleCharacter character_product(const QuandleCharacter &a,
                                   const QuandleCharacter &b) {
  if (a.quandle != b.quandle)
    throw std::invalid_argument("character product needs a common quandle");
  std::vector<std::complex<double>> values(a.orbit_values);
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] *= b.orbit_values[i];
  return make_character(a.quandle, std::move(values));
}

QuandleCharacter character_inverse(const QuandleCharacter &a) {
  std::vector<std::complex<double>> values(a.orbit_values);
  for (auto &v : values)
    v = 1.0 / v;
  return make_character(a.quandle, std::move(values));
}

} // namespace quandlekit
