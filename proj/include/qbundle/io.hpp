#pragma once

#include <string>

#include "qbundle/examples.hpp"

namespace qb {

// JSON documents carry "schema": 1. Parse errors throw std::invalid_argument
// naming the offending field.
inline constexpr int kSchema = 1;

// { "elements": [...], "table": [[...]], "identity": idx }, entries as indices or names
Group group_from_json(const std::string& text);
std::string group_to_json(const Group& g);
// { "sets": [...] or n, "pairs": [[i,j],...], "triples": [[i,j,k],...] }
CoverDescription cover_from_json(const std::string& text);
// { "schema", "dimension", "labels", "unit", "product", "coproduct", "counit", "antipode" } sparse with Scalar strings
std::string hopf_to_json(const FinHopf& h);
std::string complex_to_json(const DiscreteComplex& k);

// Report as JSON ("schema", "title", "ok", "facts", "checks") or plain text.
std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);
// Several reports under one document.
std::string reports_to_json(const std::string& command, const std::vector<Report>& rs);

std::string read_file(const std::string& path);
// write to path.tmp then rename
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace qb
