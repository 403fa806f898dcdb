#ifndef QUANDLEKIT_JSON_IO_HPP
#define QUANDLEKIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "quandlekit/cohomology.hpp"
#include "quandlekit/quandle_rep.hpp"

namespace quandlekit::io {

/// Insertion-ordered JSON so emitted reports are byte-stable.
using json = nlohmann::ordered_json;

/// File-level failure: unreadable path or malformed JSON (with location).
class JsonError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json group_to_json(const FiniteGroup &g);
FiniteGroup group_from_json(const json &j);

json quandle_to_json(const FiniteQuandle &q);
FiniteQuandle quandle_from_json(const json &j);

json character_to_json(const QuandleCharacter &chi);
QuandleCharacter character_from_json(const FiniteQuandle &q, const json &j);

/// {"group": ..., "dim": d, "matrices": {"<element>": [[[re,im],..],..]}}.
/// Matrices may be listed for the generators only; the loader rebuilds the
/// rest through the group's multiplication table.
json linear_rep_to_json(const GroupLinearRep &rep);
GroupLinearRep linear_rep_from_json(const json &j, const Tolerances &tol = {});

json quandle_rep_to_json(const QuandleRep &rep);
QuandleRep quandle_rep_from_json(const json &j, const Tolerances &tol = {});

json cocycle_to_json(const CocycleZn &a);
CocycleZn cocycle_from_json(const json &j);

/// {"invariant_factors_mu_m": [...], "invariant_factors_Cx": [...]}.
json cohomology_report_json(const CohomologyGroup &h);

json classification_to_json(const ClassificationReport &report);

json table_to_json(const std::vector<FamilyTableRow> &rows);

/// Loads a group from a family spec string ("dihedral:3") or a JSON file
/// path; anything containing ':' or equal to "klein" is treated as a spec.
FiniteGroup load_group_source(const std::string &source);

FiniteQuandle load_quandle_file(const std::string &path);
QuandleRep load_quandle_rep_file(const std::string &path,
                                 const Tolerances &tol = {});

/// Reads and parses a JSON file; errors mention the path and byte offset.
json read_json_file(const std::string &path);

} // namespace quandlekit::io

#endif
