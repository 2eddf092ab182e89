#include "qbundle/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qb {

using json = nlohmann::ordered_json;

namespace {

json parse_doc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

void check_schema(const json& j) {
  if (j.contains("schema") && j.at("schema") != kSchema)
    throw std::invalid_argument("unsupported schema " + j.at("schema").dump());
}

// entry given as an index or an element name
int element(const json& v, const std::vector<std::string>& names, const std::string& where) {
  if (v.is_number_integer()) {
    int i = v.get<int>();
    if (i < 0 || i >= int(names.size())) throw std::invalid_argument(where + ": index out of range");
    return i;
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    for (int i = 0; i < int(names.size()); ++i)
      if (names[i] == s) return i;
    throw std::invalid_argument(where + ": unknown element \"" + s + "\"");
  }
  throw std::invalid_argument(where + ": expected index or name");
}

json sparse_map(const LinMap& f) {
  json out = json::array();
  for (int c = 0; c < f.cols(); ++c)
    for (const auto& [r, v] : f.column(c)) out.push_back({r, c, v.str()});
  return out;
}

json sparse_vec(const Vec& v) {
  json out = json::array();
  for (const auto& [i, x] : sparse(v)) out.push_back({i, x.str()});
  return out;
}

json report_json(const Report& r) {
  json j;
  j["title"] = r.title;
  j["ok"] = r.ok();
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  j["facts"] = facts;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json x{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(x);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace

Group group_from_json(const std::string& text) {
  json j = parse_doc(text);
  check_schema(j);
  Group g;
  for (const auto& e : field(j, "elements")) {
    if (!e.is_string()) throw std::invalid_argument("elements: expected strings");
    g.names.push_back(e.get<std::string>());
  }
  const json& t = field(j, "table");
  if (!t.is_array() || t.size() != g.names.size()) throw std::invalid_argument("table: expected one row per element");
  for (size_t r = 0; r < t.size(); ++r) {
    if (!t[r].is_array() || t[r].size() != g.names.size())
      throw std::invalid_argument("table[" + std::to_string(r) + "]: wrong length");
    std::vector<int> row;
    for (size_t c = 0; c < t[r].size(); ++c)
      row.push_back(element(t[r][c], g.names, "table[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    g.table.push_back(row);
  }
  g.e = element(field(j, "identity"), g.names, "identity");
  g.validate();
  return g;
}

std::string group_to_json(const Group& g) {
  json j{{"schema", kSchema}, {"elements", g.names}, {"table", g.table}, {"identity", g.e}};
  return j.dump(2);
}

CoverDescription cover_from_json(const std::string& text) {
  json j = parse_doc(text);
  check_schema(j);
  CoverDescription c;
  const json& s = field(j, "sets");
  c.sets = s.is_array() ? int(s.size()) : s.get<int>();
  auto idx = [&](const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= c.sets)
      throw std::invalid_argument(where + ": set index out of range");
    return v.get<int>();
  };
  if (j.contains("pairs"))
    for (size_t k = 0; k < j["pairs"].size(); ++k) {
      const json& p = j["pairs"][k];
      std::string w = "pairs[" + std::to_string(k) + "]";
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument(w + ": expected [i,j]");
      int a = idx(p[0], w), b = idx(p[1], w);
      if (a == b) throw std::invalid_argument(w + ": repeated set");
      c.pairs.push_back({std::min(a, b), std::max(a, b)});
    }
  if (j.contains("triples"))
    for (size_t k = 0; k < j["triples"].size(); ++k) {
      const json& p = j["triples"][k];
      std::string w = "triples[" + std::to_string(k) + "]";
      if (!p.is_array() || p.size() != 3) throw std::invalid_argument(w + ": expected [i,j,k]");
      Face f{idx(p[0], w), idx(p[1], w), idx(p[2], w)};
      std::sort(f.begin(), f.end());
      if (f[0] == f[1] || f[1] == f[2]) throw std::invalid_argument(w + ": repeated set");
      c.triples.push_back(f);
    }
  return c;
}

std::string hopf_to_json(const FinHopf& h) {
  json j{{"schema", kSchema}, {"dimension", h.n}, {"labels", h.labels}};
  j["unit"] = sparse_vec(h.unit);
  j["product"] = sparse_map(h.mu);
  j["coproduct"] = sparse_map(h.delta);
  j["counit"] = sparse_vec(h.eps);
  j["antipode"] = sparse_map(h.S);
  return j.dump(2);
}

std::string complex_to_json(const DiscreteComplex& k) {
  json j{{"schema", kSchema}, {"vertices", k.labels}};
  j["edges"] = json::array();
  for (auto [a, b] : k.E) j["edges"].push_back({a, b});
  j["F0"] = json::array();
  for (auto [a, b] : k.F0) j["F0"].push_back({a, b});
  j["F"] = json::array();
  for (const auto& f : k.F) j["F"].push_back({f[0], f[1], f[2]});
  return j.dump(2);
}

std::string report_to_json(const Report& r) {
  json j{{"schema", kSchema}};
  j.update(report_json(r));
  return j.dump(2);
}

std::string reports_to_json(const std::string& command, const std::vector<Report>& rs) {
  json j{{"schema", kSchema}, {"command", command}};
  bool ok = true;
  json arr = json::array();
  for (const auto& r : rs) {
    ok = ok && r.ok();
    arr.push_back(report_json(r));
  }
  j["ok"] = ok;
  j["reports"] = arr;
  return j.dump(2);
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "== " << r.title << "\n";
  for (const auto& [k, v] : r.facts) os << "  " << k << ": " << v << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.ok ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace qb
