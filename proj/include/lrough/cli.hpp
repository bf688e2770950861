// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Command-line interface.  `run` is an in-process entry point: it parses
// arguments, executes one subcommand against an instance file, writes the
// report to `out`, diagnostics to `err`, and returns the process exit code
// (0 success, 2 parse error, 3 domain error, 4 internal invariant
// violation).  Output is byte-deterministic for a given input.
//
// Subcommands: validate | approx | reduct | core | relation {arrow|sym} |
// matrix dump | axioms check | duality.  Global flags: --input, --format
// {json|table|csv}, --tolerance (also via LROUGH_TOLERANCE), and, for CSV
// inputs that carry no lattice or threshold, --lattice, --chain-n, --beta.

#ifndef LROUGH_CLI_HPP
#define LROUGH_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "lrough/approx.hpp"
#include "lrough/axioms.hpp"
#include "lrough/covering.hpp"
#include "lrough/error.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/io.hpp"
#include "lrough/lattice.hpp"
#include "lrough/lmatrix.hpp"
#include "lrough/reduction.hpp"

namespace lrough {

/// "not_a_covering" -> "NotACovering"; used for diagnostic tags.
inline std::string error_tag(const std::string& code) {
  std::string out;
  bool up = true;
  for (char c : code) {
    if (c == '_') {
      up = true;
    } else {
      out += up ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
      up = false;
    }
  }
  return out;
}

namespace cli_detail {

constexpr int json_decimals = 9;
constexpr int table_decimals = 4;
constexpr int csv_decimals = 9;

struct options {
  std::string input;
  std::string format = "json";
  std::string lattice_kind;  // CSV inputs only
  int chain_n = 0;
  std::string beta_text;  // overrides the instance threshold when set
  double tolerance = -1;  // <0 means unset
  // approx
  int pair = 0;
  std::string dir;
  std::string target;
  std::string via = "direct";
  // relation / matrix / axioms positionals
  std::string relation_kind;
  std::string matrix_action;
  std::string axioms_action;
  std::string counterexample_id;
  // duality
  std::string duality_target;
};

inline int decimals_for(const std::string& format) {
  return format == "table" ? table_decimals : json_decimals;
}

/// Column-aligned table with a header row; cells joined by two spaces.
inline std::string layout_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.resize(i + 1, 0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

inline std::string csv_rows(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << csv_quote(row[i]);
    }
    os << "\n";
  }
  return os.str();
}

/// A labelled vector of lattice values (approximation results).
template <residuated_lattice L>
void emit_vector(const L& l, const options& o, const ordered_json& header,
                 const std::vector<std::string>& labels, const std::vector<value_t<L>>& values,
                 std::ostream& out) {
  if (o.format == "json") {
    ordered_json j = header;
    j["universe"] = labels;
    j["result"] = set_to_json(l, values);
    dump_json(j, out, json_decimals);
    return;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"point", "value"});
  for (std::size_t i = 0; i < labels.size(); ++i)
    rows.push_back({labels[i], format_value(l, values[i], decimals_for(o.format))});
  out << (o.format == "table" ? layout_table(rows) : csv_rows(rows));
}

/// A labelled square matrix (relations).
template <residuated_lattice L>
void emit_relation(const L& l, const options& o, const std::string& which,
                   const std::vector<std::string>& labels, const relation_table<L>& r,
                   std::ostream& out) {
  if (o.format == "json") {
    ordered_json j;
    j["relation"] = which;
    j["universe"] = labels;
    ordered_json rows = ordered_json::array();
    for (int x = 0; x < r.n; ++x) {
      ordered_json row = ordered_json::array();
      for (int y = 0; y < r.n; ++y) row.push_back(value_to_json(l, r.at(x, y)));
      rows.push_back(row);
    }
    j["rows"] = rows;
    dump_json(j, out, json_decimals);
    return;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{""};
  head.insert(head.end(), labels.begin(), labels.end());
  rows.push_back(head);
  for (int x = 0; x < r.n; ++x) {
    std::vector<std::string> row{labels[static_cast<std::size_t>(x)]};
    for (int y = 0; y < r.n; ++y) row.push_back(format_value(l, r.at(x, y), decimals_for(o.format)));
    rows.push_back(row);
  }
  out << (o.format == "table" ? layout_table(rows) : csv_rows(rows));
}

template <residuated_lattice L>
int cmd_validate(const L& l, const instance<L>& inst, const lattice_descriptor& d,
                 const options& o, std::ostream& out) {
  const beta_covering<L>& c = inst.covering;
  value_t<L> mb = max_beta(l, c);
  if (o.format == "json") {
    ordered_json j;
    j["valid"] = true;
    j["lattice"] = d.kind;
    j["points"] = c.points();
    j["members"] = c.size();
    j["beta"] = value_to_json(l, c.beta());
    j["max_beta"] = value_to_json(l, mb);
    dump_json(j, out, json_decimals);
    return 0;
  }
  int dec = decimals_for(o.format);
  std::vector<std::vector<std::string>> rows{
      {"valid", "true"},
      {"lattice", d.kind},
      {"points", std::to_string(c.points())},
      {"members", std::to_string(c.size())},
      {"beta", format_value(l, c.beta(), dec)},
      {"max_beta", format_value(l, mb, dec)},
  };
  out << (o.format == "table" ? layout_table(rows) : csv_rows(rows));
  return 0;
}

template <residuated_lattice L>
int cmd_approx(const L& l, const instance<L>& inst, const options& o, std::ostream& out) {
  direction dir = parse_direction(o.dir);
  route via = parse_route(o.via);
  require_pair(o.pair);
  const fuzzy_set<L>& x = inst.target(o.target);
  fuzzy_set<L> res = approximate(l, inst.covering, x, o.pair, dir, via);
  ordered_json header;
  header["pair"] = o.pair;
  header["direction"] = o.dir;
  header["via"] = o.via;
  header["target"] = o.target;
  emit_vector(l, o, header, inst.u->labels(), res.a, out);
  return 0;
}

template <residuated_lattice L>
int cmd_reduction(const L& l, const instance<L>& inst, const options& o, bool core_cmd,
                  std::ostream& out) {
  reduction_report<L> rep = core_cmd ? core(l, inst.covering) : reduct(l, inst.covering);
  if (o.format == "json") {
    ordered_json j;
    j["kind"] = core_cmd ? "core" : "reduct";
    j["kept"] = rep.kept;
    ordered_json removed = ordered_json::array();
    for (const auto& [name, wit] : rep.removed) {
      ordered_json e;
      e["member"] = name;
      e["witnesses"] = wit;
      removed.push_back(e);
    }
    j["removed"] = removed;
    ordered_json cov;
    for (int i = 0; i < rep.covering.size(); ++i)
      cov[rep.covering.name(i)] = set_to_json(l, rep.covering.member(i));
    j["covering"] = cov;
    dump_json(j, out, json_decimals);
    return 0;
  }
  if (o.format == "csv") {
    out << covering_to_csv(l, rep.covering, csv_decimals);
    return 0;
  }
  std::ostringstream os;
  os << (core_cmd ? "core" : "reduct") << ":";
  for (const auto& n : rep.kept) os << " " << n;
  os << "\n";
  for (const auto& [name, wit] : rep.removed) {
    os << "removed " << name << " ->";
    for (const auto& w : wit) os << " " << w;
    os << "\n";
  }
  out << os.str();
  return 0;
}

template <residuated_lattice L>
int cmd_relation(const L& l, const instance<L>& inst, const options& o, std::ostream& out) {
  if (o.relation_kind != "arrow" && o.relation_kind != "sym")
    fail_parse("bad_input", "relation kind must be 'arrow' or 'sym'");
  if (o.relation_kind == "arrow") {
    emit_relation(l, o, "arrow", inst.u->labels(), relation_arrow(inst.covering), out);
  } else {
    relation_table<L> r = relation_sym(l, inst.covering);
    emit_relation(l, o, "sym", inst.u->labels(), r, out);
  }
  return 0;
}

template <residuated_lattice L>
int cmd_matrix(const L& l, const instance<L>& inst, const lattice_descriptor& d, const options& o,
               std::ostream& out) {
  if (o.matrix_action != "dump") fail_parse("bad_input", "matrix supports the 'dump' action");
  if (o.format == "json") {
    dump_json(covering_to_json(l, d, inst.covering), out, json_decimals);
    return 0;
  }
  if (o.format == "csv") {
    out << covering_to_csv(l, inst.covering, csv_decimals);
    return 0;
  }
  const beta_covering<L>& c = inst.covering;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{""};
  for (int i = 0; i < c.size(); ++i) head.push_back(c.name(i));
  rows.push_back(head);
  for (int x = 0; x < c.points(); ++x) {
    std::vector<std::string> row{c.univ()->label(x)};
    for (int i = 0; i < c.size(); ++i)
      row.push_back(format_value(l, c.member(i)[static_cast<std::size_t>(x)], table_decimals));
    rows.push_back(row);
  }
  out << layout_table(rows);
  return 0;
}

template <residuated_lattice L>
void emit_verdicts(const L& l, const universe& u, const options& o, ordered_json header,
                   const std::vector<axiom_verdict<L>>& verdicts, std::ostream& out) {
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& v : verdicts) arr.push_back(verdict_to_json(l, u, v));
    header["verdicts"] = arr;
    dump_json(header, out, json_decimals);
    return;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"axiom", "holds"});
  for (const auto& v : verdicts) rows.push_back({v.axiom, v.holds ? "yes" : "no"});
  out << (o.format == "table" ? layout_table(rows) : csv_rows(rows));
}

template <residuated_lattice L>
int cmd_axioms(const L& l, const instance<L>& inst, const options& o, std::ostream& out) {
  if (o.axioms_action != "check") fail_parse("bad_input", "axioms supports the 'check' action");
  if constexpr (!finite_residuated_lattice<L>) {
    (void)inst;
    (void)out;
    fail_domain("size_cap", "axiom checking enumerates all maps and needs a finite lattice");
  } else {
    direction dir = parse_direction(o.dir);
    require_pair(o.pair);
    operator_table<L> table = table_from_covering(l, inst.covering, o.pair, dir);
    std::vector<axiom_verdict<L>> verdicts = classify_operator(l, table, inst.covering.beta());
    std::vector<std::string> required = required_axioms(o.pair, dir);
    lattice_requirement need = required_lattice(o.pair, dir);
    bool lattice_ok = (!need.needs_regular || regular(l)) && (!need.needs_heyting || heyting(l));
    bool required_hold = true;
    for (const auto& v : verdicts)
      if (!v.holds && std::find(required.begin(), required.end(), v.axiom) != required.end())
        required_hold = false;
    ordered_json header;
    header["pair"] = o.pair;
    header["direction"] = o.dir;
    header["lattice_regular"] = regular(l);
    header["lattice_heyting"] = heyting(l);
    header["lattice_requirement_met"] = lattice_ok;
    header["required"] = required;
    header["required_hold"] = required_hold;
    emit_verdicts(l, *inst.u, o, header, verdicts, out);
    return 0;
  }
}

inline int cmd_axioms_counterexample(const options& o, std::ostream& out) {
  if (o.axioms_action != "check") fail_parse("bad_input", "axioms supports the 'check' action");
  counterexample_case ce = counterexample(o.counterexample_id);
  std::vector<axiom_verdict<finite_lattice>> verdicts =
      classify_operator(ce.lat, ce.table, ce.beta);
  ordered_json header;
  header["counterexample"] = ce.id;
  header["universe"] = ce.u->labels();
  header["beta"] = ce.lat.name_of(ce.beta);
  emit_verdicts(ce.lat, *ce.u, o, header, verdicts, out);
  return 0;
}

template <residuated_lattice L>
int cmd_duality(const L& l, const instance<L>& inst, const options& o, std::ostream& out) {
  require_pair(o.pair);
  std::vector<std::pair<std::string, const fuzzy_set<L>*>> picked;
  if (!o.duality_target.empty()) {
    picked.emplace_back(o.duality_target, &inst.target(o.duality_target));
  } else {
    if (inst.targets.empty()) fail_parse("bad_input", "duality needs at least one target");
    for (const auto& [name, fs] : inst.targets) picked.emplace_back(name, &fs);
  }
  std::vector<std::pair<std::string, axiom_verdict<L>>> results;
  results.reserve(picked.size());
  for (const auto& [name, fs] : picked) results.emplace_back(name, check_duality(l, inst.covering, *fs, o.pair));
  if (o.format == "json") {
    ordered_json j;
    j["pair"] = o.pair;
    ordered_json arr = ordered_json::array();
    for (const auto& [name, v] : results) {
      ordered_json e;
      e["target"] = name;
      e["holds"] = v.holds;
      if (v.witness) e["witness"] = witness_to_json(l, *inst.u, *v.witness);
      arr.push_back(e);
    }
    j["results"] = arr;
    dump_json(j, out, json_decimals);
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"target", "holds"});
  for (const auto& [name, v] : results) rows.push_back({name, v.holds ? "yes" : "no"});
  out << (o.format == "table" ? layout_table(rows) : csv_rows(rows));
  return 0;
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Load the instance file, applying --lattice/--chain-n/--beta/--tolerance.
inline instance_data load_data(const options& o) {
  if (o.input.empty()) fail_parse("bad_input", "an --input file is required");
  std::string text = read_file(o.input);
  instance_data d;
  if (ends_with(o.input, ".csv")) {
    d = parse_covering_csv(text);
    d.lattice.kind = o.lattice_kind.empty() ? "lukasiewicz" : o.lattice_kind;
    if (o.chain_n > 0) d.lattice.n = o.chain_n;
    if (o.beta_text.empty())
      fail_parse("bad_input", "CSV input carries no threshold; pass --beta");
  } else {
    d = parse_instance_json(text);
    if (!o.lattice_kind.empty()) fail_parse("bad_input", "--lattice applies to CSV inputs only");
  }
  if (!o.beta_text.empty()) d.beta = ordered_json();  // replaced during materialization
  if (o.tolerance >= 0) d.lattice.tolerance = o.tolerance;
  return d;
}

template <residuated_lattice L>
instance<L> materialize_with_beta(const L& l, instance_data d, const options& o) {
  if (!o.beta_text.empty()) d.beta = value_to_json(l, value_from_text(l, o.beta_text));
  return materialize(l, d);
}

}  // namespace cli_detail

/// Execute one CLI invocation in-process.  `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  options o;
  CLI::App app{"L-fuzzy beta-covering rough approximation toolkit"};
  app.require_subcommand(1);
  app.add_option("--input", o.input, "instance file (.json, or .csv covering)");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--tolerance", o.tolerance, "comparison tolerance for unit-interval lattices");
  app.add_option("--lattice", o.lattice_kind,
                 "lattice kind for CSV inputs (godel|lukasiewicz|product|finite_chain)");
  app.add_option("--chain-n", o.chain_n, "chain size for --lattice finite_chain");
  app.add_option("--beta", o.beta_text, "threshold override (number, or carrier name)");

  CLI::App* c_validate = app.add_subcommand("validate", "check that the input is a beta-covering");
  CLI::App* c_approx = app.add_subcommand("approx", "compute one approximation of a target");
  c_approx->add_option("--pair", o.pair, "operator pair (1|2|3)")->required();
  c_approx->add_option("--dir", o.dir, "lower or upper")->required();
  c_approx->add_option("--target", o.target, "target set name")->required();
  c_approx->add_option("--via", o.via, "evaluation route (direct|matrix|both)");
  CLI::App* c_reduct = app.add_subcommand("reduct", "drop join-decomposable members");
  CLI::App* c_core = app.add_subcommand("core", "drop meet-decomposable members");
  CLI::App* c_relation = app.add_subcommand("relation", "print an induced relation");
  c_relation->add_option("kind", o.relation_kind, "arrow or sym")->required();
  CLI::App* c_matrix = app.add_subcommand("matrix", "dump the membership matrix");
  c_matrix->add_option("action", o.matrix_action, "dump")->required();
  CLI::App* c_axioms = app.add_subcommand("axioms", "evaluate the axiom battery");
  c_axioms->add_option("action", o.axioms_action, "check")->required();
  c_axioms->add_option("--pair", o.pair, "operator pair (1|2|3)");
  c_axioms->add_option("--dir", o.dir, "lower or upper");
  c_axioms->add_option("--counterexample", o.counterexample_id, "built-in operator id");
  CLI::App* c_duality = app.add_subcommand("duality", "test derivability from the opposite operator");
  c_duality->add_option("--pair", o.pair, "operator pair (1|2|3)")->required();
  c_duality->add_option("--target", o.duality_target, "restrict to one target");
  for (CLI::App* sub : {c_validate, c_approx, c_reduct, c_core, c_relation, c_matrix, c_axioms, c_duality})
    sub->fallthrough();

  std::vector<std::string> argv_store{"lrough"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (const char* env = std::getenv("LROUGH_TOLERANCE"); env && o.tolerance < 0) {
      std::string s(env);
      std::size_t pos = 0;
      double v = 0;
      try {
        v = std::stod(s, &pos);
      } catch (const std::exception&) {
        fail_parse("bad_input", "LROUGH_TOLERANCE is not a number");
      }
      if (pos != s.size() || v < 0) fail_parse("bad_input", "LROUGH_TOLERANCE is not a valid tolerance");
      o.tolerance = v;
    }
    if (c_axioms->parsed() && !o.counterexample_id.empty()) return cmd_axioms_counterexample(o, out);
    instance_data data = load_data(o);
    lattice lat = build_lattice(data.lattice);
    return std::visit(
        [&](const auto& l) -> int {
          auto inst = materialize_with_beta(l, data, o);
          if (c_validate->parsed()) return cmd_validate(l, inst, data.lattice, o, out);
          if (c_approx->parsed()) return cmd_approx(l, inst, o, out);
          if (c_reduct->parsed()) return cmd_reduction(l, inst, o, false, out);
          if (c_core->parsed()) return cmd_reduction(l, inst, o, true, out);
          if (c_relation->parsed()) return cmd_relation(l, inst, o, out);
          if (c_matrix->parsed()) return cmd_matrix(l, inst, data.lattice, o, out);
          if (c_axioms->parsed()) return cmd_axioms(l, inst, o, out);
          if (c_duality->parsed()) return cmd_duality(l, inst, o, out);
          fail_internal("unreachable", "no subcommand dispatched");
        },
        lat);
  } catch (const error& e) {
    err << "error: " << error_tag(e.code()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case errc::parse:
        return 2;
      case errc::domain:
        return 3;
      case errc::internal:
        return 4;
    }
    return 4;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace lrough

#endif  // LROUGH_CLI_HPP
