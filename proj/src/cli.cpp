#include "quandlekit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quandlekit/json_io.hpp"

namespace quandlekit::cli {

namespace {

std::size_t st(int i) { return static_cast<std::size_t>(i); }

std::string factor_string(const std::vector<long long> &factors) {
  if (factors.empty())
    return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i)
      out << " x ";
    out << "Z/" << factors[i];
  }
  return out.str();
}

std::string coord_string(const std::vector<long long> &coords) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i)
      out << ", ";
    out << coords[i];
  }
  out << ']';
  return out.str();
}

std::uint64_t env_seed() {
  if (const char *s = std::getenv("QUANDLEKIT_SEED"))
    return std::strtoull(s, nullptr, 10);
  return 0;
}

std::vector<int> parse_n_list(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty())
    throw UsageError("--n needs a comma-separated list of integers");
  return out;
}

FiniteQuandle quandle_from_command(const Command &cmd) {
  if (cmd.conj)
    return conj_quandle(io::load_group_source(cmd.source));
  return io::load_quandle_file(cmd.source);
}

int run_check(const Command &cmd, std::ostream &out) {
  io::json report;
  report["seed"] = cmd.seed;
  try {
    const FiniteQuandle q = quandle_from_command(cmd);
    report["size"] = q.size;
    report["valid"] = true;
    report["orbits"] = static_cast<int>(orbits(q).blocks.size());
    if (cmd.format == "json") {
      out << report.dump(2) << '\n';
    } else {
      out << "seed: " << cmd.seed << '\n'
          << "quandle: " << q.size << " elements\n"
          << "valid: yes\n"
          << "orbits: " << report["orbits"].get<int>() << '\n';
    }
    return 0;
  } catch (const QuandleAxiomError &e) {
    if (cmd.format == "json") {
      report["valid"] = false;
      report["error"] = e.what();
      report["witness"] = {e.x, e.y, e.z};
      out << report.dump(2) << '\n';
    } else {
      out << "seed: " << cmd.seed << '\n'
          << "valid: no\n"
          << "error: " << e.what() << '\n';
    }
    return 1;
  }
}

int run_info(const Command &cmd, std::ostream &out) {
  const FiniteQuandle q = quandle_from_command(cmd);
  const OrbitPartition part = orbits(q);
  const InnerGroup inn = inner_group(q);
  if (cmd.format == "json") {
    io::json j;
    j["seed"] = cmd.seed;
    j["size"] = q.size;
    io::json sizes = io::json::array();
    for (const auto &b : part.blocks)
      sizes.push_back(b.size());
    j["orbit_sizes"] = std::move(sizes);
    j["inn_order"] = inn.group.order;
    out << j.dump(2) << '\n';
  } else {
    out << "seed: " << cmd.seed << '\n'
        << "quandle: " << q.size << " elements\n"
        << "orbits: " << part.blocks.size() << " (sizes";
    for (const auto &b : part.blocks)
      out << ' ' << b.size();
    out << ")\n"
        << "inn_order: " << inn.group.order << '\n';
  }
  return 0;
}

int run_h2(const Command &cmd, std::ostream &out) {
  const FiniteGroup g = io::load_group_source(cmd.source);
  const CohomologyGroup h = second_cohomology(g, cmd.modulus);
  if (cmd.format == "json") {
    io::json j;
    j["seed"] = cmd.seed;
    j["group_order"] = g.order;
    j["modulus"] = h.modulus();
    j.update(io::cohomology_report_json(h));
    out << j.dump(2) << '\n';
  } else {
    auto or_trivial = [](const std::vector<long long> &f) {
      return f.empty() ? std::string("trivial") : factor_string(f);
    };
    out << "seed: " << cmd.seed << '\n'
        << "group: order " << g.order << '\n'
        << "modulus: " << h.modulus() << '\n'
        << "H2(G, mu_m): " << or_trivial(h.mu_factors()) << '\n'
        << "H2(G, C^x): " << or_trivial(h.cx_factors()) << '\n';
  }
  return 0;
}

int run_irreps(const Command &cmd, std::ostream &out) {
  const FiniteGroup g = io::load_group_source(cmd.source);
  const auto irreps = decompose_irreps(g, cmd.seed, cmd.tol);
  std::vector<int> dims;
  for (const auto &r : irreps)
    dims.push_back(r.dim);
  std::sort(dims.begin(), dims.end());
  long long dimsq = 0;
  for (int d : dims)
    dimsq += static_cast<long long>(d) * d;
  if (cmd.format == "json") {
    io::json j;
    j["seed"] = cmd.seed;
    j["group_order"] = g.order;
    j["classes"] = static_cast<int>(conjugacy_classes(g).size());
    j["dims"] = dims;
    j["sum_dim_sq"] = dimsq;
    out << j.dump(2) << '\n';
  } else {
    out << "seed: " << cmd.seed << '\n'
        << "group: order " << g.order << '\n'
        << "classes: " << conjugacy_classes(g).size() << '\n'
        << "dims:";
    for (int d : dims)
      out << ' ' << d;
    out << '\n' << "sum_dim_sq: " << dimsq << '\n';
  }
  return 0;
}

void print_classification(const ClassificationReport &report,
                          const Command &cmd, std::ostream &out) {
  if (cmd.format == "json") {
    out << io::classification_to_json(report).dump(2) << '\n';
    return;
  }
  out << "seed: " << report.seed << '\n'
      << "mode: " << mode_name(report.mode) << '\n'
      << "quandle: " << report.quandle.size << " elements\n"
      << "character_rank: " << report.character_rank << '\n'
      << "base_reps: " << report.base_reps.size() << " of dims";
  for (const auto &rep : report.base_reps)
    out << ' ' << rep.dim;
  out << '\n' << "realized_classes:";
  for (const auto &coords : report.realized_classes)
    out << ' ' << coord_string(coords);
  out << '\n'
      << "H2(Inn(Q), C^x): " << factor_string(report.h2_inn_cx_factors) << '\n'
      << "M_Q: " << factor_string(report.m_q_structure)
      << " (order " << report.m_q_order << ")\n"
      << "completeness: " << report.completeness_theorem << '\n';
}

int run_classify(const Command &cmd, std::ostream &out) {
  try {
    const ClassificationReport report =
        cmd.conj
            ? classify_conj_group(io::load_group_source(cmd.source), cmd.seed,
                                  cmd.tol)
            : classify_via_inn(io::load_quandle_file(cmd.source), cmd.seed,
                               cmd.tol);
    print_classification(report, cmd, out);
    return 0;
  } catch (const HypothesisError &e) {
    if (cmd.format == "json") {
      io::json j;
      j["seed"] = cmd.seed;
      j["error"] = e.what();
      j["inn_obstruction"] = e.inn_obstruction;
      j["group_obstruction"] = e.group_obstruction;
      out << j.dump(2) << '\n';
    } else {
      out << "seed: " << cmd.seed << '\n'
          << "error: " << e.what() << '\n';
    }
    return 1;
  }
}

int run_cocycle_class(const Command &cmd, std::ostream &out) {
  const QuandleRep rep = io::load_quandle_rep_file(cmd.source, cmd.tol);
  const InnerGroup inn = inner_group(rep.quandle);
  const ProjectiveRep lift = induced_projective(rep, inn, cmd.tol);
  const CocycleZn coc = cocycle_of_projective(lift, cmd.tol);
  const CohomologyGroup h2 = second_cohomology(inn.group);
  const auto coords = h2.cx_class_coordinates(coc);
  const auto witness = is_coboundary_over_Cx(coc);
  if (cmd.format == "json") {
    io::json j;
    j["seed"] = cmd.seed;
    j["dim"] = rep.dim;
    j["inn_order"] = inn.group.order;
    j["h2_inn_Cx"] = h2.cx_factors();
    j["class_coordinates"] = coords;
    j["cx_trivial"] = witness.is_coboundary;
    out << j.dump(2) << '\n';
  } else {
    out << "seed: " << cmd.seed << '\n'
        << "quandle: " << rep.quandle.size << " elements\n"
        << "rep_dim: " << rep.dim << '\n'
        << "inn_order: " << inn.group.order << '\n'
        << "H2(Inn(Q), C^x): " << factor_string(h2.cx_factors()) << '\n'
        << "class_coordinates: " << coord_string(coords) << '\n'
        << "cx_trivial: " << (witness.is_coboundary ? "yes" : "no") << '\n';
  }
  return 0;
}

int run_table(const Command &cmd, std::ostream &out) {
  const auto rows = family_classification_table(cmd.table_n, cmd.seed, cmd.tol);
  if (cmd.format == "json") {
    io::json j;
    j["seed"] = cmd.seed;
    j.update(io::table_to_json(rows));
    out << j.dump(2) << '\n';
  } else {
    out << "seed: " << cmd.seed << '\n';
    auto pad = [](const std::string &s, std::size_t w) {
      return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
    };
    out << pad("quandle", 14) << pad("Inn(Q)", 8) << pad("H2(Inn(Q),C^x)", 16)
        << pad("M_Q", 6) << "Tor(Z(G(Q)))" << '\n';
    for (const auto &row : rows)
      out << pad(row.quandle_name, 14) << pad(row.inn_name, 8)
          << pad(factor_string(row.h2), 16) << pad(factor_string(row.m_q), 6)
          << factor_string(row.tor) << '\n';
  }
  return 0;
}

} // namespace

namespace {
/// Raised after help text has been written; signals a clean exit.
struct HelpRequested {};
} // namespace

static Command parse_impl(const std::vector<std::string> &args,
                          std::ostream *help_out) {
  Command cmd;
  cmd.seed = env_seed();

  CLI::App app{"finite quandle representation toolkit"};
  app.name("quandlekit");
  app.require_subcommand(1);

  std::string n_list;
  const std::uint64_t default_seed = cmd.seed;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--seed", cmd.seed, "seed for the numerical decomposition")
        ->default_val(default_seed);
    sub->add_option("--format", cmd.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    sub->add_option("--tol-rep", cmd.tol.rep, "matrix identity tolerance");
    sub->add_option("--tol-rank", cmd.tol.rank_rel,
                    "relative singular-value cutoff");
    sub->add_option("--tol-char", cmd.tol.character,
                    "character comparison tolerance");
  };

  auto *check = app.add_subcommand("check", "validate a quandle");
  check->add_option("source", cmd.source, "quandle JSON file")->required();
  check->add_flag("--conj", cmd.conj, "treat source as a group; use Conj(G)");
  add_common(check);

  auto *info = app.add_subcommand("info", "size, orbits and |Inn(Q)|");
  info->add_option("source", cmd.source, "quandle JSON file")->required();
  info->add_flag("--conj", cmd.conj, "treat source as a group; use Conj(G)");
  add_common(info);

  auto *h2 = app.add_subcommand("h2", "Schur multiplier of a group");
  h2->add_option("source", cmd.source, "group family spec or JSON file")
      ->required();
  h2->add_option("--modulus", cmd.modulus, "coefficient modulus (default |G|)");
  add_common(h2);

  auto *irreps =
      app.add_subcommand("irreps", "irreducible representation dimensions");
  irreps->add_option("source", cmd.source, "group family spec or JSON file")
      ->required();
  add_common(irreps);

  auto *classify =
      app.add_subcommand("classify", "classify irreducible representations");
  classify->add_option("source", cmd.source,
                       "quandle JSON file, or a group with --conj");
  classify->add_flag("--conj", cmd.conj,
                     "source is a group; classify Conj(G) through it");
  add_common(classify);

  auto *cocycle = app.add_subcommand(
      "cocycle-class", "induced cocycle class of a quandle representation");
  cocycle->add_option("source", cmd.source, "quandle representation JSON file")
      ->required();
  add_common(cocycle);

  auto *table =
      app.add_subcommand("table", "classification table for the built-in families");
  table->add_option("--n", n_list, "comma-separated n values, e.g. 2,3")
      ->required();
  add_common(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed)); // may throw CLI::ParseError
  } catch (const CLI::CallForHelp &) {
    if (help_out)
      *help_out << app.help();
    throw HelpRequested{};
  }

  for (auto *sub : {check, info, h2, irreps, classify, cocycle, table})
    if (sub->parsed())
      cmd.verb = sub->get_name();
  if (cmd.verb == "table")
    cmd.table_n = parse_n_list(n_list);
  if (cmd.verb == "classify" && cmd.source.empty())
    throw UsageError("classify needs a quandle file or --conj with a group");
  return cmd;
}

Command parse(const std::vector<std::string> &args) {
  return parse_impl(args, nullptr);
}

int run(const Command &cmd, std::ostream &out, std::ostream &err) {
  try {
    if (cmd.verb == "check")
      return run_check(cmd, out);
    if (cmd.verb == "info")
      return run_info(cmd, out);
    if (cmd.verb == "h2")
      return run_h2(cmd, out);
    if (cmd.verb == "irreps")
      return run_irreps(cmd, out);
    if (cmd.verb == "classify")
      return run_classify(cmd, out);
    if (cmd.verb == "cocycle-class")
      return run_cocycle_class(cmd, out);
    if (cmd.verb == "table")
      return run_table(cmd, out);
    err << "unknown verb: " << cmd.verb << '\n';
    return 2;
  } catch (const io::JsonError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
  try {
    const Command cmd = parse_impl(args, &out);
    return run(cmd, out, err);
  } catch (const HelpRequested &) {
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

} // namespace quandlekit::cli
