// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// File ingestion and report emission.
//
// Instance files are JSON:
//
//   {
//     "lattice": {"kind": "lukasiewicz"},            // or product/godel,
//                                                    // {"kind":"finite_chain","n":3},
//                                                    // {"kind":"table","carrier":[...],
//                                                    //  "tnorm":[[...]],"implication":[[...]]}
//     "beta": 0.6,                                   // carrier name string for finite lattices
//     "universe": ["x1", "x2", ...],
//     "covering": {"C1": [0.7, ...], "C2": [...], ...},
//     "targets": {"X": [0.4, ...], ...}              // optional
//   }
//
// or CSV carrying just the covering (header row = member names, first
// column = universe labels); lattice and beta then come from flags.
// Unit-interval values are JSON numbers; finite-lattice values are carrier
// names.  Emission uses a deterministic serializer printing doubles with a
// fixed number of decimals (9 for json/csv, 4 for tables).

#ifndef LROUGH_IO_HPP
#define LROUGH_IO_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lrough/axioms.hpp"
#include "lrough/covering.hpp"
#include "lrough/error.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/lattice.hpp"
#include "lrough/lmatrix.hpp"

namespace lrough {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

/// Fixed-decimals rendering of a double (e.g. 0.4 -> "0.400000000" at 9).
inline std::string format_double(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

template <residuated_lattice L>
std::string format_value(const L& l, value_t<L> v, int decimals) {
  if constexpr (std::is_same_v<value_t<L>, double>) {
    (void)l;
    return format_double(v, decimals);
  } else {
    (void)decimals;
    return l.name_of(v);
  }
}

/// Parse one value from JSON: a number for unit-interval lattices, a
/// carrier-name string for finite ones.
template <residuated_lattice L>
value_t<L> value_from_json(const L& l, const ordered_json& j) {
  if constexpr (std::is_same_v<value_t<L>, double>) {
    (void)l;
    if (!j.is_number()) fail_parse("bad_input", "expected a numeric value, got " + j.dump());
    return j.get<double>();
  } else {
    // Carrier names are the contract, but CSV columns holding names spelled
    // like integers ("0", "1") arrive as numbers; read integers as the
    // same-spelled name.  Fractional numbers stay errors.
    if (j.is_number_integer()) return l.index_of(std::to_string(j.get<long long>()));
    if (!j.is_string())
      fail_parse("bad_input", "expected a carrier element name, got " + j.dump());
    return l.index_of(j.get<std::string>());
  }
}

template <residuated_lattice L>
ordered_json value_to_json(const L& l, value_t<L> v) {
  if constexpr (std::is_same_v<value_t<L>, double>) {
    (void)l;
    return v;
  } else {
    return l.name_of(v);
  }
}

/// Parse one value from CSV text.
template <residuated_lattice L>
value_t<L> value_from_text(const L& l, const std::string& s) {
  if constexpr (std::is_same_v<value_t<L>, double>) {
    (void)l;
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      fail_parse("bad_input", "expected a numeric value, got '" + s + "'");
    }
    if (pos != s.size()) fail_parse("bad_input", "expected a numeric value, got '" + s + "'");
    return v;
  } else {
    return l.index_of(s);
  }
}

// ---------------------------------------------------------------------------
// Deterministic JSON emission
// ---------------------------------------------------------------------------

namespace detail {
inline bool scalar_only(const ordered_json& j) {
  for (const auto& e : j)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

inline void dump_json_value(const ordered_json& j, std::ostream& os, int decimals, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << pad_in << ordered_json(it.key()).dump() << ": ";
      dump_json_value(it.value(), os, decimals, indent + 1);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    if (scalar_only(j)) {
      os << "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << ", ";
        first = false;
        dump_json_value(e, os, decimals, indent);
      }
      os << "]";
    } else {
      os << "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad_in;
        dump_json_value(e, os, decimals, indent + 1);
      }
      os << "\n" << pad << "]";
    }
  } else if (j.is_number_float()) {
    os << format_double(j.get<double>(), decimals);
  } else {
    os << j.dump();  // strings (escaped), integers, booleans, null
  }
}
}  // namespace detail

/// Pretty-print JSON with doubles at fixed decimals; byte-deterministic.
inline void dump_json(const ordered_json& j, std::ostream& os, int decimals) {
  detail::dump_json_value(j, os, decimals, 0);
  os << "\n";
}

// ---------------------------------------------------------------------------
// CSV helpers
// ---------------------------------------------------------------------------

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

/// Split one CSV line (supports quoted fields).
inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------
// Instance files
// ---------------------------------------------------------------------------

/// A parsed instance before lattice-specific value conversion.
struct instance_data {
  lattice_descriptor lattice;
  ordered_json beta;  // number or carrier name; null when absent
  std::vector<std::string> universe_labels;
  std::vector<std::string> member_names;
  std::vector<ordered_json> member_rows;  // arrays of values
  std::vector<std::pair<std::string, ordered_json>> targets;
};

inline lattice_descriptor descriptor_from_json(const ordered_json& j) {
  if (!j.is_object()) fail_parse("bad_input", "'lattice' must be an object");
  lattice_descriptor d;
  if (!j.contains("kind") || !j.at("kind").is_string())
    fail_parse("bad_input", "'lattice.kind' must be a string");
  d.kind = j.at("kind").get<std::string>();
  if (j.contains("tolerance")) {
    if (!j.at("tolerance").is_number()) fail_parse("bad_input", "'lattice.tolerance' must be a number");
    d.tolerance = j.at("tolerance").get<double>();
  }
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer()) fail_parse("bad_input", "'lattice.n' must be an integer");
    d.n = j.at("n").get<int>();
  }
  auto read_names = [&](const char* key) {
    std::vector<std::string> out;
    for (const auto& e : j.at(key)) {
      if (!e.is_string()) fail_parse("bad_input", std::string("'lattice.") + key + "' must hold strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  };
  auto read_table = [&](const char* key) {
    std::vector<std::vector<std::string>> out;
    if (!j.contains(key) || !j.at(key).is_array())
      fail_parse("bad_input", std::string("table lattices require a '") + key + "' array");
    for (const auto& row : j.at(key)) {
      std::vector<std::string> r;
      for (const auto& e : row) {
        if (!e.is_string()) fail_parse("bad_input", std::string("'lattice.") + key + "' must hold carrier names");
        r.push_back(e.get<std::string>());
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  if (d.kind == "table") {
    if (!j.contains("carrier") || !j.at("carrier").is_array())
      fail_parse("bad_input", "table lattices require a 'carrier' array");
    d.carrier = read_names("carrier");
    d.tnorm = read_table("tnorm");
    d.implication = read_table("implication");
  }
  return d;
}

inline ordered_json descriptor_to_json(const lattice_descriptor& d) {
  ordered_json j;
  j["kind"] = d.kind;
  if (d.kind == "godel" || d.kind == "lukasiewicz" || d.kind == "product") j["tolerance"] = d.tolerance;
  if (d.kind == "finite_chain") j["n"] = d.n;
  if (d.kind == "table") {
    j["carrier"] = d.carrier;
    j["tnorm"] = d.tnorm;
    j["implication"] = d.implication;
  }
  return j;
}

/// Parse a JSON instance file's text.
inline instance_data parse_instance_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail_parse("bad_input", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail_parse("bad_input", "instance file must be a JSON object");
  instance_data d;
  if (!j.contains("lattice")) fail_parse("bad_input", "instance file is missing 'lattice'");
  d.lattice = descriptor_from_json(j.at("lattice"));
  if (!j.contains("beta")) fail_parse("bad_input", "instance file is missing 'beta'");
  d.beta = j.at("beta");
  if (!j.contains("universe") || !j.at("universe").is_array())
    fail_parse("bad_input", "instance file is missing a 'universe' array");
  for (const auto& e : j.at("universe")) {
    if (!e.is_string()) fail_parse("bad_input", "'universe' must hold strings");
    d.universe_labels.push_back(e.get<std::string>());
  }
  if (!j.contains("covering") || !j.at("covering").is_object())
    fail_parse("bad_input", "instance file is missing a 'covering' object");
  for (auto it = j.at("covering").begin(); it != j.at("covering").end(); ++it) {
    if (!it.value().is_array()) fail_parse("bad_input", "covering members must be arrays");
    d.member_names.push_back(it.key());
    d.member_rows.push_back(it.value());
  }
  if (j.contains("targets")) {
    if (!j.at("targets").is_object()) fail_parse("bad_input", "'targets' must be an object");
    for (auto it = j.at("targets").begin(); it != j.at("targets").end(); ++it) {
      if (!it.value().is_array()) fail_parse("bad_input", "targets must be arrays");
      d.targets.emplace_back(it.key(), it.value());
    }
  }
  return d;
}

/// Parse a CSV covering (header row = member names, first column =
/// universe labels).  Lattice and beta must be supplied by the caller.
inline instance_data parse_covering_csv(const std::string& text) {
  instance_data d;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  std::vector<std::vector<std::string>> cells;  // per label row
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> fields = csv_split(line);
    if (header) {
      if (fields.size() < 2) fail_parse("bad_input", "CSV header needs at least one member column");
      for (std::size_t i = 1; i < fields.size(); ++i) d.member_names.push_back(fields[i]);
      header = false;
      continue;
    }
    if (fields.size() != d.member_names.size() + 1)
      fail_parse("dimension_mismatch", "CSV row for '" + (fields.empty() ? "" : fields[0]) +
                                           "' has the wrong number of fields");
    d.universe_labels.push_back(fields[0]);
    cells.emplace_back(fields.begin() + 1, fields.end());
  }
  if (header) fail_parse("bad_input", "CSV input is empty");
  if (d.universe_labels.empty()) fail_parse("bad_input", "CSV input has no universe rows");
  // transpose: rows are labels, columns are members
  for (std::size_t m = 0; m < d.member_names.size(); ++m) {
    ordered_json row = ordered_json::array();
    for (std::size_t x = 0; x < d.universe_labels.size(); ++x) {
      const std::string& s = cells[x][m];
      // numbers stay numbers (integral ones as integers, so finite-lattice
      // carriers with names spelled like integers survive); anything else
      // is a carrier name
      try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos == s.size()) {
          double ip = 0;
          if (std::modf(v, &ip) == 0.0 && std::abs(v) < 1e15)
            row.push_back(static_cast<long long>(v));
          else
            row.push_back(v);
          continue;
        }
      } catch (const std::exception&) {
      }
      row.push_back(s);
    }
    d.member_rows.push_back(std::move(row));
  }
  return d;
}

/// Read a whole file; raises "bad_input" when unreadable.
inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_parse("bad_input", "cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Materialization
// ---------------------------------------------------------------------------

/// A lattice-typed instance: validated covering plus named targets.
template <residuated_lattice L>
struct instance {
  L lat;
  universe_ptr u;
  beta_covering<L> covering;
  std::vector<std::pair<std::string, fuzzy_set<L>>> targets;

  const fuzzy_set<L>& target(const std::string& name) const {
    for (const auto& [nm, fs] : targets)
      if (nm == name) return fs;
    fail_parse("unknown_target", "unknown target '" + name + "'");
  }
};

template <residuated_lattice L>
instance<L> materialize(const L& l, const instance_data& d) {
  universe_ptr u = make_universe(d.universe_labels);
  auto to_values = [&](const ordered_json& row) {
    std::vector<value_t<L>> out;
    for (const auto& e : row) out.push_back(value_from_json(l, e));
    return out;
  };
  std::vector<std::vector<value_t<L>>> members;
  members.reserve(d.member_rows.size());
  for (const auto& row : d.member_rows) members.push_back(to_values(row));
  if (d.beta.is_null()) fail_parse("bad_input", "beta is required");
  value_t<L> beta = value_from_json(l, d.beta);
  beta_covering<L> cov(l, u, d.member_names, std::move(members), beta);
  std::vector<std::pair<std::string, fuzzy_set<L>>> targets;
  for (const auto& [name, row] : d.targets)
    targets.emplace_back(name, make_set(l, u, to_values(row)));
  return instance<L>{l, u, std::move(cov), std::move(targets)};
}

// ---------------------------------------------------------------------------
// Emission helpers
// ---------------------------------------------------------------------------

template <residuated_lattice L>
ordered_json set_to_json(const L& l, const std::vector<value_t<L>>& values) {
  ordered_json a = ordered_json::array();
  for (auto v : values) a.push_back(value_to_json(l, v));
  return a;
}

/// Instance JSON for a covering (re-ingestable; used by `matrix dump`).
template <residuated_lattice L>
ordered_json covering_to_json(const L& l, const lattice_descriptor& d, const beta_covering<L>& c) {
  ordered_json j;
  j["lattice"] = descriptor_to_json(d);
  j["beta"] = value_to_json(l, c.beta());
  j["universe"] = c.univ()->labels();
  ordered_json cov;
  for (int i = 0; i < c.size(); ++i) cov[c.name(i)] = set_to_json(l, c.member(i));
  j["covering"] = cov;
  return j;
}

/// Covering as CSV (the accepted input format).
template <residuated_lattice L>
std::string covering_to_csv(const L& l, const beta_covering<L>& c, int decimals) {
  std::ostringstream os;
  for (int i = 0; i < c.size(); ++i) os << "," << csv_quote(c.name(i));
  os << "\n";
  for (int x = 0; x < c.points(); ++x) {
    os << csv_quote(c.univ()->label(x));
    for (int i = 0; i < c.size(); ++i)
      os << "," << format_value(l, c.member(i)[static_cast<std::size_t>(x)], decimals);
    os << "\n";
  }
  return os.str();
}

template <residuated_lattice L>
ordered_json witness_to_json(const L& l, const universe& u, const axiom_witness<L>& w) {
  ordered_json j;
  for (const auto& [name, part] : w.parts) {
    if (std::holds_alternative<value_t<L>>(part)) {
      j[name] = value_to_json(l, std::get<value_t<L>>(part));
    } else if (std::holds_alternative<std::vector<value_t<L>>>(part)) {
      j[name] = set_to_json(l, std::get<std::vector<value_t<L>>>(part));
    } else if (std::holds_alternative<point_ref>(part)) {
      j[name] = u.label(std::get<point_ref>(part).p);
    } else {
      j[name] = std::get<std::string>(part);
    }
  }
  return j;
}

template <residuated_lattice L>
ordered_json verdict_to_json(const L& l, const universe& u, const axiom_verdict<L>& v) {
  ordered_json j;
  j["axiom"] = v.axiom;
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = witness_to_json(l, u, *v.witness);
  return j;
}

}  // namespace lrough

#endif  // LROUGH_IO_HPP
