#pragma once

#include <pqsurf/report.hpp>
#include <pqsurf/tables.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace pqsurf::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kValidation = 3,
  kNoWitness = 4,
  kTableMismatch = 5,
  kSearchTooLarge = 6,
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kParse;
    case ErrorKind::NoWitness: return kNoWitness;
    case ErrorKind::SearchSpaceTooLarge: return kSearchTooLarge;
    default: return kValidation;
  }
}

namespace detail {

// Computed factors labelled by reference number where the alias match found
// one ("?r" for rational character r otherwise), in reference order.
inline std::string factor_list(const std::vector<ComputedFactor>& fs, const std::map<std::size_t, std::size_t>* ks) {
  std::vector<std::pair<std::string, std::string>> items;
  for (const auto& f : fs) {
    std::string k = "?" + std::to_string(f.rational);
    if (ks)
      for (const auto& [ref, r] : *ks)
        if (r == f.rational) k = std::to_string(ref);
    items.emplace_back(k, "[" + std::to_string(f.d) + "," + std::to_string(f.n) + "," + k + "]");
  }
  std::sort(items.begin(), items.end());
  std::string out;
  for (const auto& [k, text] : items) out += (out.empty() ? "" : " ") + text;
  return out.empty() ? "-" : out;
}

inline std::string factor_list(const std::vector<ReferenceFactor>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += " ";
    out += "[" + std::to_string(f.d) + "," + std::to_string(f.n) + "," + std::to_string(f.k) + "]";
  }
  return out.empty() ? "-" : out;
}

inline std::string cell(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

inline void print_rows_text(const std::vector<RowResult>& results, std::ostream& out) {
  out << cell("row", 6) << cell("", 10) << cell("g1", 4) << cell("g2", 4) << cell("K2", 4) << cell("sing", 22)
      << cell("eta", 5) << cell("dim", 5) << cell("C1 [d,n,k]", 18) << cell("C2 [d,n,k]", 26) << "paired k\n";
  for (const auto& r : results) {
    const auto& e = r.expected;
    const auto* ks = r.alias_assignment ? &*r.alias_assignment : nullptr;
    std::string paired = "-";
    if (r.witness_found && r.report.pairing.status == PairingStatus::Unique) {
      const auto rational = r.report.pairing.matches.front().rational1;
      paired = "?" + std::to_string(rational);
      if (ks)
        for (const auto& [ref, idx] : *ks)
          if (idx == rational) paired = std::to_string(ref);
    }
    if (r.witness_found) {
      const auto& s = r.report;
      out << cell(e.name, 6) << cell("computed", 10) << cell(std::to_string(s.genus1), 4) << cell(std::to_string(s.genus2), 4)
          << cell(std::to_string(s.K2), 4) << cell(singularity_summary(s.singularities), 22) << cell(std::to_string(s.eta), 5)
          << cell(std::to_string(s.family_dim), 5) << cell(factor_list(r.factors1, ks), 18)
          << cell(factor_list(r.factors2, ks), 26) << paired << '\n';
    } else {
      out << cell(e.name, 6) << cell("computed", 10) << "(no witness)\n";
    }
    out << cell("", 6) << cell("expected", 10) << cell(std::to_string(e.genus1), 4) << cell(std::to_string(e.genus2), 4)
        << cell(std::to_string(e.K2), 4) << cell(e.singularities, 22) << cell(std::to_string(e.eta), 5)
        << cell(std::to_string(e.family_dim), 5) << cell(factor_list(e.factors1), 18) << cell(factor_list(e.factors2), 26)
        << e.paired_k << '\n';
    if (r.witness_found && r.report.pairing.quaternionic)
      out << cell("", 6) << "quaternionic: Schur index 2, partner " << r.report.pairing.partner_label << "; "
          << r.report.pairing.note << '\n';
    if (r.supergroup && r.supergroup->found)
      out << cell("", 6) << "order-16 group (0; 2,2,2,4): genus " << r.supergroup->genus << ", C/Q8 genus "
          << r.supergroup->quotient_genus_by_q8 << ", [" << r.supergroup->d << "," << r.supergroup->n
          << "] at the non-self-dual degree-2 character"
          << (r.supergroup->schur_index_unverified ? " (schur_index_unverified)" : "") << '\n';
    for (const auto& m : r.mismatches) out << cell("", 6) << "MISMATCH " << m << '\n';
  }
}

inline Json rows_json(const std::vector<RowResult>& results) {
  Json rows = Json::array();
  for (const auto& r : results) {
    const auto& e = r.expected;
    auto ref = [](const std::vector<ReferenceFactor>& fs) {
      Json a = Json::array();
      for (const auto& f : fs) a.push_back({f.d, f.n, f.k});
      return a;
    };
    Json row{{"name", e.name}, {"group", e.group}};
    row["expected"] = {{"g1", e.genus1},     {"g2", e.genus2},         {"K2", e.K2},
                       {"sing", e.singularities}, {"eta", e.eta},      {"dim", e.family_dim},
                       {"C1", ref(e.factors1)}, {"C2", ref(e.factors2)}, {"paired_k", e.paired_k}};
    if (r.witness_found) {
      const auto& s = r.report;
      auto got = [](const std::vector<ComputedFactor>& fs) {
        Json a = Json::array();
        for (const auto& f : fs) a.push_back({f.d, f.n, f.rational});
        return a;
      };
      row["computed"] = {{"g1", s.genus1},
                         {"g2", s.genus2},
                         {"K2", s.K2},
                         {"sing", singularity_summary(s.singularities)},
                         {"eta", s.eta},
                         {"dim", s.family_dim},
                         {"C1", got(r.factors1)},
                         {"C2", got(r.factors2)},
                         {"rank_new", s.rank_new},
                         {"quaternionic", s.pairing.quaternionic},
                         {"partner", s.pairing.partner_label}};
      Json alias = Json::object();
      if (r.alias_assignment)
        for (const auto& [k, idx] : *r.alias_assignment) alias[std::to_string(k)] = idx;
      row["alias"] = alias;
    }
    if (r.supergroup && r.supergroup->found)
      row["order16_check"] = {{"genus", r.supergroup->genus},
                              {"dn", {r.supergroup->d, r.supergroup->n}},
                              {"schur_index_unverified", r.supergroup->schur_index_unverified}};
    row["mismatches"] = r.mismatches;
    rows.push_back(row);
  }
  return rows;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace detail

/// reproduce-tables on an explicit list of rows; exit 5 on any mismatch.
inline int reproduce_tables_command(const std::vector<TableRow>& rows, const std::string& filter, unsigned parallel,
                                    const std::string& format, std::ostream& out) {
  const auto results = reproduce_tables(rows, filter, parallel);
  std::size_t matched = 0;
  for (const auto& r : results) matched += r.matched() ? 1 : 0;
  if (format == "json") {
    Json doc{{"tool", {{"name", "pqsurf"}, {"version", kVersion}}},
             {"rows", detail::rows_json(results)},
             {"matched", matched},
             {"total", results.size()},
             {"rank_new_note", kRankNewNote}};
    out << doc.dump(2) << '\n';
  } else {
    detail::print_rows_text(results, out);
    out << "note: " << kRankNewNote << '\n';
    out << matched << "/" << results.size() << " rows matched\n";
  }
  return matched == results.size() ? kOk : kTableMismatch;
}

inline int search_command(const std::string& group, std::int64_t g0, const std::string& orders_text,
                          const std::string& format, std::ostream& out) {
  const auto G = catalog_group(group);
  const auto orders = orders_text == "-" ? std::vector<std::int64_t>{} : pqsurf::detail::parse_int_list(orders_text);
  const auto found = search_generating_vectors(G, g0, orders);
  auto entries = [&](const GeneratingVector& gv) {
    Json j = Json::object();
    for (std::size_t i = 0; i < gv.handles.size(); ++i) {
      j["a" + std::to_string(i + 1)] = G.element(gv.handles[i].first).to_cycles();
      j["b" + std::to_string(i + 1)] = G.element(gv.handles[i].second).to_cycles();
    }
    for (std::size_t i = 0; i < gv.monodromies.size(); ++i)
      j["c" + std::to_string(i + 1)] = G.element(gv.monodromies[i]).to_cycles();
    return j;
  };
  if (format == "json") {
    Json list = Json::array();
    for (const auto& gv : found) list.push_back(entries(gv));
    Json doc{{"group", group}, {"g0", g0}, {"orders", orders}, {"count", found.size()}, {"vectors", list}};
    out << doc.dump(2) << '\n';
  } else {
    out << "group: " << group << "\ng0: " << g0 << "\norders:";
    for (auto m : orders) out << ' ' << m;
    out << "\ncount: " << found.size() << '\n';
    for (const auto& gv : found) {
      std::string line;
      const auto j = entries(gv);
      for (const auto& [key, value] : j.items())
        line += (line.empty() ? "" : ", ") + key + " = " + value.get<std::string>();
      out << "- " << line << '\n';
    }
  }
  return kOk;
}

inline int analyze_command(const std::string& path, const std::string& format_flag, std::ostream& out) {
  const auto desc = parse_description(detail::read_file(path));
  const auto format = format_flag.empty() ? desc.format : format_flag;
  const auto doc = report_json(analyze(desc));
  if (format == "json") out << doc.dump(2) << '\n';
  else out << render_text(doc);
  return kOk;
}

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of product-quotient surfaces with p_g = q = 2", "pqsurf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string format;
  std::string path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a surface description file");
  analyze_cmd->add_option("file", path, "Description file (sectioned text or JSON)")->required();
  analyze_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string row;
  unsigned parallel = 1;
  std::string table_format = "text";
  auto* tables_cmd = app.add_subcommand("reproduce-tables", "Recompute the built-in table rows and compare");
  tables_cmd->add_option("--row", row, "Only the row with this name (or group)");
  tables_cmd->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1u, 64u));
  tables_cmd->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string group, orders;
  std::int64_t g0 = 0;
  std::string search_format = "text";
  auto* search_cmd = app.add_subcommand("search", "List generating vectors up to simultaneous conjugation");
  search_cmd->add_option("group", group, "Catalog group name")->required();
  search_cmd->add_option("g0", g0, "Genus of the quotient curve")->required();
  search_cmd->add_option("orders", orders, "Branch orders, comma separated ('-' for none)")->required();
  search_cmd->add_option("--format", search_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  try {
    if (*analyze_cmd) return analyze_command(path, format, out);
    if (*tables_cmd) return reproduce_tables_command(catalog_rows(), row, parallel, table_format, out);
    return search_command(group, g0, orders, search_format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace pqsurf::cli
