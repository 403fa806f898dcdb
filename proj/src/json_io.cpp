#include "quandlekit/json_io.hpp"

#include <complex>
#include <deque>
#include <fstream>
#include <map>

namespace quandlekit::io {

namespace {

std::size_t st(int i) { return static_cast<std::size_t>(i); }

json complex_to_json(const std::complex<double> &z) {
  return json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix &m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[st(r)].size()) != cols)
      throw std::invalid_argument("matrix rows have inconsistent lengths");
    for (int c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[st(r)][st(c)]);
  }
  return m;
}

json factors_json(const std::vector<long long> &factors) {
  return json(factors);
}

} // namespace

json group_to_json(const FiniteGroup &g) {
  json j;
  j["order"] = g.order;
  j["mul"] = g.mul;
  j["identity"] = g.identity;
  j["generators"] = g.generators;
  j["labels"] = g.labels;
  return j;
}

FiniteGroup group_from_json(const json &j) {
  if (!j.is_object() || !j.contains("mul"))
    throw std::invalid_argument("group JSON needs a \"mul\" table");
  auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
  std::vector<int> gens;
  if (j.contains("generators"))
    gens = j.at("generators").get<std::vector<int>>();
  else
    for (int g = 0; g < static_cast<int>(mul.size()); ++g)
      gens.push_back(g);
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<std::string>>();
  FiniteGroup g(std::move(mul), std::move(gens), std::move(labels));
  if (j.contains("order") && j.at("order").get<int>() != g.order)
    throw std::invalid_argument("group JSON \"order\" does not match the table");
  if (j.contains("identity") && j.at("identity").get<int>() != g.identity)
    throw std::invalid_argument("group JSON \"identity\" is not the identity");
  return g;
}

json quandle_to_json(const FiniteQuandle &q) {
  json j;
  j["size"] = q.size;
  j["table"] = q.table;
  return j;
}

FiniteQuandle quandle_from_json(const json &j) {
  if (!j.is_object() || !j.contains("table"))
    throw std::invalid_argument("quandle JSON needs a \"table\"");
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  const int size = j.contains("size") ? j.at("size").get<int>()
                                      : static_cast<int>(table.size());
  return validate_quandle(size, std::move(table));
}

json character_to_json(const QuandleCharacter &chi) {
  json vals = json::array();
  for (const auto &v : chi.orbit_values)
    vals.push_back(complex_to_json(v));
  json j;
  j["orbit_values"] = std::move(vals);
  return j;
}

QuandleCharacter character_from_json(const FiniteQuandle &q, const json &j) {
  if (!j.is_object() || !j.contains("orbit_values"))
    throw std::invalid_argument("character JSON needs \"orbit_values\"");
  std::vector<std::complex<double>> values;
  for (const auto &v : j.at("orbit_values"))
    values.push_back(complex_from_json(v));
  return make_character(q, std::move(values));
}

json linear_rep_to_json(const GroupLinearRep &rep) {
  json j;
  j["group"] = group_to_json(rep.group);
  j["dim"] = rep.dim;
  json mats;
  for (int g = 0; g < rep.group.order; ++g)
    mats[std::to_string(g)] = matrix_to_json(rep.matrices[st(g)]);
  j["matrices"] = std::move(mats);
  return j;
}

GroupLinearRep linear_rep_from_json(const json &j, const Tolerances &tol) {
  if (!j.is_object() || !j.contains("group") || !j.contains("matrices"))
    throw std::invalid_argument(
        "representation JSON needs \"group\" and \"matrices\"");
  FiniteGroup group = group_from_json(j.at("group"));
  std::map<int, ComplexMatrix> given;
  for (const auto &[key, value] : j.at("matrices").items()) {
    const int g = std::stoi(key);
    if (g < 0 || g >= group.order)
      throw std::invalid_argument("matrix key out of range: " + key);
    given[g] = matrix_from_json(value);
  }
  if (given.empty())
    throw std::invalid_argument("representation JSON has no matrices");
  const int dim = static_cast<int>(given.begin()->second.rows());

  // grow from the identity through the generators; covers the whole group
  // whenever at least the generators are listed
  std::vector<ComplexMatrix> mats(st(group.order));
  std::vector<char> known(st(group.order), 0);
  for (auto &[g, m] : given) {
    mats[st(g)] = std::move(m);
    known[st(g)] = 1;
  }
  if (!known[st(group.identity)]) {
    mats[st(group.identity)] = ComplexMatrix::Identity(dim, dim);
    known[st(group.identity)] = 1;
  }
  for (int s : group.generators)
    if (!known[st(s)])
      throw std::invalid_argument(
          "representation JSON must list every generator matrix (missing " +
          std::to_string(s) + ")");
  std::deque<int> queue;
  for (int g = 0; g < group.order; ++g)
    if (known[st(g)])
      queue.push_back(g);
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (int s : group.generators) {
      const int gs = group.op(g, s);
      if (!known[st(gs)]) {
        mats[st(gs)] = mats[st(g)] * mats[st(s)];
        known[st(gs)] = 1;
        queue.push_back(gs);
      }
    }
  }
  for (int g = 0; g < group.order; ++g)
    if (!known[st(g)])
      throw std::invalid_argument("could not reconstruct every matrix");
  if (j.contains("dim") && j.at("dim").get<int>() != dim)
    throw std::invalid_argument("representation JSON \"dim\" mismatch");
  return make_linear_rep(std::move(group), std::move(mats), tol);
}

json quandle_rep_to_json(const QuandleRep &rep) {
  json j;
  j["quandle"] = quandle_to_json(rep.quandle);
  j["dim"] = rep.dim;
  json mats;
  for (int x = 0; x < rep.quandle.size; ++x)
    mats[std::to_string(x)] = matrix_to_json(rep.matrices[st(x)]);
  j["matrices"] = std::move(mats);
  return j;
}

QuandleRep quandle_rep_from_json(const json &j, const Tolerances &tol) {
  if (!j.is_object() || !j.contains("quandle") || !j.contains("matrices"))
    throw std::invalid_argument(
        "quandle representation JSON needs \"quandle\" and \"matrices\"");
  FiniteQuandle q = quandle_from_json(j.at("quandle"));
  std::vector<ComplexMatrix> mats(st(q.size));
  std::vector<char> seen(st(q.size), 0);
  for (const auto &[key, value] : j.at("matrices").items()) {
    const int x = std::stoi(key);
    if (x < 0 || x >= q.size)
      throw std::invalid_argument("matrix key out of range: " + key);
    mats[st(x)] = matrix_from_json(value);
    seen[st(x)] = 1;
  }
  for (int x = 0; x < q.size; ++x)
    if (!seen[st(x)])
      throw std::invalid_argument(
          "quandle representation JSON must list every element matrix");
  if (j.contains("dim") &&
      j.at("dim").get<int>() != static_cast<int>(mats[0].rows()))
    throw std::invalid_argument("quandle representation JSON \"dim\" mismatch");
  return validate_rep(q, std::move(mats), tol);
}

json cocycle_to_json(const CocycleZn &a) {
  json j;
  j["group"] = group_to_json(a.group);
  j["modulus"] = a.modulus;
  j["values"] = a.values;
  return j;
}

CocycleZn cocycle_from_json(const json &j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("modulus") ||
      !j.contains("values"))
    throw std::invalid_argument(
        "cocycle JSON needs \"group\", \"modulus\" and \"values\"");
  return make_cocycle(group_from_json(j.at("group")),
                      j.at("modulus").get<long long>(),
                      j.at("values").get<std::vector<std::vector<long long>>>());
}

json cohomology_report_json(const CohomologyGroup &h) {
  json j;
  j["invariant_factors_mu_m"] = factors_json(h.mu_factors());
  j["invariant_factors_Cx"] = factors_json(h.cx_factors());
  return j;
}

json classification_to_json(const ClassificationReport &report) {
  json j;
  j["seed"] = report.seed;
  j["mode"] = mode_name(report.mode);
  j["quandle"] = quandle_to_json(report.quandle);
  json base = json::array();
  for (const auto &rep : report.base_reps) {
    json r;
    r["dim"] = rep.dim;
    r["unitary"] = rep.unitary;
    json mats;
    for (int x = 0; x < rep.quandle.size; ++x)
      mats[std::to_string(x)] = matrix_to_json(rep.matrices[st(x)]);
    r["matrices"] = std::move(mats);
    base.push_back(std::move(r));
  }
  j["base_reps"] = std::move(base);
  j["character_rank"] = report.character_rank;
  j["realized_classes"] = report.realized_classes;
  j["m_q_order"] = report.m_q_order;
  j["m_q_structure"] = factors_json(report.m_q_structure);
  j["completeness_theorem"] = report.completeness_theorem;
  j["h2_inn_Cx"] = factors_json(report.h2_inn_cx_factors);
  return j;
}

json table_to_json(const std::vector<FamilyTableRow> &rows) {
  json arr = json::array();
  for (const auto &row : rows) {
    json r;
    r["quandle"] = row.quandle_name;
    r["n"] = row.n;
    r["inn"] = row.inn_name;
    r["h2"] = factors_json(row.h2);
    r["m_q"] = factors_json(row.m_q);
    r["tor"] = factors_json(row.tor);
    r["mode"] = row.mode;
    arr.push_back(std::move(r));
  }
  json j;
  j["rows"] = std::move(arr);
  return j;
}

FiniteGroup load_group_source(const std::string &source) {
  if (source.find(':') != std::string::npos || source == "klein")
    return group_from_spec(source);
  return group_from_json(read_json_file(source));
}

FiniteQuandle load_quandle_file(const std::string &path) {
  return quandle_from_json(read_json_file(path));
}

QuandleRep load_quandle_rep_file(const std::string &path,
                                 const Tolerances &tol) {
  return quandle_rep_from_json(read_json_file(path), tol);
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw JsonError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw JsonError("malformed JSON in " + path + " at byte " +
                    std::to_string(e.byte) + ": " + e.what());
  }
}

} // namespace quandlekit::io
