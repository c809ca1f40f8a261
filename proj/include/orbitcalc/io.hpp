#ifndef ORBITCALC_IO_HPP
#define ORBITCALC_IO_HPP

#include <string>

#include <orbitcalc/classes.hpp>
#include <orbitcalc/profile.hpp>
#include <orbitcalc/schubert.hpp>
#include <orbitcalc/series.hpp>
#include <orbitcalc/special.hpp>

namespace orbitcalc
{

// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string &path);

// { "r": int, "d": int, "basis": [["1", "0", "-2/3"], ...] }
// Entry i of each row is the coefficient of v1^(d-i) v2^i.
LinearSeries parse_series_json(const std::string &text);
std::string series_to_json(const LinearSeries &s);

// { "r": int, "d": int, "points": [[a0, ..., ar], ...] }
RamificationProfile parse_profile_json(const std::string &text);
std::string profile_to_json(const RamificationProfile &p);

// { "r", "d", "vertices": [names],
//   "edges": [{ "u", "v", "label_u": [seq], "label_v": [seq] (optional) }],
//   "dangling": [{ "vertex", "label": [seq] }] }
// A missing label_v is the complement of label_u. A given one is kept as
// is, so validate_tree reports a mismatch.
LabelledTree parse_tree_json(const std::string &text);
std::string tree_to_json(const LabelledTree &t);

// [{ "partition": [3], "coef": 24 }, ...] sorted lexicographically by
// partition.
std::string schubert_to_json(const SchubertClass &c);
SchubertClass parse_schubert_json(int r, int d, const std::string &text);

// Relation together with the outcome of the polynomial check.
std::string certificate_json(const Relation &rel, const RelationCheck &check);

} // namespace orbitcalc

#endif
