#pragma once

#include <pqsurf/catalog.hpp>
#include <pqsurf/covering.hpp>

#include <nlohmann/json.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pqsurf {

// One curve of a surface description: either an explicit generating vector
// (permutations in cycle notation) or a search directive.
struct CurveSpec {
  std::int64_t g0 = 0;
  std::vector<std::string> handles;  // a_1, b_1, ..., a_g0, b_g0
  std::vector<std::string> monodromies;
  std::optional<std::vector<std::int64_t>> orders;
  std::optional<std::vector<std::int64_t>> search;

  bool is_search() const { return search.has_value(); }
};

// A generating vector over a second group acting on one of the curves (e.g. a
// larger automorphism group), reported on its own.
struct SupergroupSpec {
  std::string group_name;
  std::vector<std::string> generators;
  CurveSpec curve;
};

struct SurfaceDescription {
  std::string group_name;               // catalog name, or a label for explicit generators
  std::vector<std::string> generators;  // empty for catalog groups
  CurveSpec curve1, curve2;
  std::optional<SupergroupSpec> supergroup;
  std::string format = "text";
};

namespace detail {

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// Splits on commas outside parentheses and brackets: "(1,2), ()" -> {"(1,2)", "()"}.
inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      auto item = trim(s.substr(start, i - start));
      if (!item.empty()) out.push_back(std::move(item));
      else if (i < s.size() || !out.empty()) throw Error(ErrorKind::Parse, "empty list item in \"" + std::string(s) + "\"");
      start = i + 1;
    } else if (s[i] == '(' || s[i] == '[') {
      ++depth;
    } else if (s[i] == ')' || s[i] == ']') {
      if (--depth < 0) throw Error(ErrorKind::Parse, "unbalanced brackets in \"" + std::string(s) + "\"");
    }
  }
  if (depth != 0) throw Error(ErrorKind::Parse, "unbalanced brackets in \"" + std::string(s) + "\"");
  return out;
}

inline std::int64_t parse_int(std::string_view s) {
  const auto t = trim(s);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) throw Error(ErrorKind::Parse, "expected an integer, got \"" + t + "\"");
  return v;
}

inline std::vector<std::int64_t> parse_int_list(std::string_view s) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(s)) out.push_back(parse_int(item));
  return out;
}

inline void check_curve(const CurveSpec& c, const std::string& section) {
  if (c.g0 < 0) throw Error(ErrorKind::Parse, section + ": g0 must be nonnegative");
  const bool explicit_vector = !c.monodromies.empty() || !c.handles.empty() || c.orders.has_value();
  if (explicit_vector == c.is_search())
    throw Error(ErrorKind::Parse, section + ": give exactly one of an explicit vector or 'search'");
  if (c.handles.size() != static_cast<std::size_t>(2 * c.g0) && explicit_vector)
    throw Error(ErrorKind::Parse, section + ": expected " + std::to_string(2 * c.g0) + " handle entries");
}

inline void check_description(const SurfaceDescription& d) {
  if (d.group_name.empty() && d.generators.empty()) throw Error(ErrorKind::Parse, "[group] needs 'name' or 'generators'");
  check_curve(d.curve1, "curve1");
  check_curve(d.curve2, "curve2");
  if (d.supergroup) {
    if (d.supergroup->group_name.empty() && d.supergroup->generators.empty())
      throw Error(ErrorKind::Parse, "[supergroup] needs 'name' or 'generators'");
    check_curve(d.supergroup->curve, "supergroup");
  }
  if (d.format != "text" && d.format != "json") throw Error(ErrorKind::Parse, "format must be text or json");
}

}  // namespace detail

/// Sectioned key = value text:
///
///   [group]    name = V4            (or generators = (1,2)(3,4), (1,3)(2,4))
///   [curve1]   g0 = 1
///              handles = (1,3)(2,4), ()
///              monodromies = (1,2)(3,4), (1,2)(3,4)
///              orders = 2, 2        (optional)
///   [curve2]   g0 = 1
///              search = 2, 2
///   [supergroup]  name = C4xC2semiC2   (optional: one curve over a second group)
///                 g0 = 0
///                 search = 2, 2, 2, 4
///   [options]  format = json
///
/// '#' starts a comment. Lists split on commas outside brackets; a
/// permutation is cycle notation or a 1-based image array such as [2,1,4,3].
inline SurfaceDescription parse_description_text(std::string_view text) {
  SurfaceDescription d;
  std::string section;
  bool seen_curve1 = false, seen_curve2 = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw Error(ErrorKind::Parse, where + "unterminated section header");
      section = detail::trim(std::string_view(line).substr(1, line.size() - 2));
      if (section != "group" && section != "curve1" && section != "curve2" && section != "supergroup" &&
          section != "options")
        throw Error(ErrorKind::Parse, where + "unknown section [" + section + "]");
      seen_curve1 = seen_curve1 || section == "curve1";
      seen_curve2 = seen_curve2 || section == "curve2";
      if (section == "supergroup" && !d.supergroup) d.supergroup.emplace();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, where + "expected key = value");
    const auto key = detail::trim(std::string_view(line).substr(0, eq));
    const auto value = detail::trim(std::string_view(line).substr(eq + 1));
    try {
      if (section == "group") {
        if (key == "name") d.group_name = value;
        else if (key == "generators") d.generators = detail::split_list(value);
        else throw Error(ErrorKind::Parse, "unknown key '" + key + "'");
      } else if (section == "supergroup" && (key == "name" || key == "generators")) {
        if (key == "name") d.supergroup->group_name = value;
        else d.supergroup->generators = detail::split_list(value);
      } else if (section == "curve1" || section == "curve2" || section == "supergroup") {
        auto& c = section == "curve1" ? d.curve1 : section == "curve2" ? d.curve2 : d.supergroup->curve;
        if (key == "g0") c.g0 = detail::parse_int(value);
        else if (key == "handles") c.handles = detail::split_list(value);
        else if (key == "monodromies") c.monodromies = detail::split_list(value);
        else if (key == "orders") c.orders = detail::parse_int_list(value);
        else if (key == "search") c.search = detail::parse_int_list(value);
        else throw Error(ErrorKind::Parse, "unknown key '" + key + "'");
      } else if (section == "options") {
        if (key == "format") d.format = value;
        else throw Error(ErrorKind::Parse, "unknown key '" + key + "'");
      } else {
        throw Error(ErrorKind::Parse, "key outside of a section");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Parse) throw;
      throw Error(ErrorKind::Parse, where + std::string(e.what()).substr(std::string(to_string(ErrorKind::Parse)).size() + 2));
    }
  }
  if (!seen_curve1 || !seen_curve2) throw Error(ErrorKind::Parse, "both [curve1] and [curve2] are required");
  detail::check_description(d);
  return d;
}

/// The same content as a JSON object with keys group, curve1, curve2, options.
inline SurfaceDescription parse_description_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  SurfaceDescription d;
  try {
    if (!doc.is_object()) throw Error(ErrorKind::Parse, "top level must be an object");
    for (const auto& [key, _] : doc.items())
      if (key != "group" && key != "curve1" && key != "curve2" && key != "supergroup" && key != "options")
        throw Error(ErrorKind::Parse, "unknown key '" + key + "'");
    const auto& g = doc.at("group");
    if (g.contains("name")) d.group_name = g.at("name").get<std::string>();
    if (g.contains("generators")) d.generators = g.at("generators").get<std::vector<std::string>>();
    auto curve = [&](const char* name) {
      const auto& j = doc.at(name);
      CurveSpec c;
      for (const auto& [key, _] : j.items())
        if (key != "g0" && key != "handles" && key != "monodromies" && key != "orders" && key != "search" &&
            !(std::string_view(name) == "supergroup" && (key == "name" || key == "generators")))
          throw Error(ErrorKind::Parse, std::string(name) + ": unknown key '" + key + "'");
      c.g0 = j.at("g0").get<std::int64_t>();
      if (j.contains("handles")) c.handles = j.at("handles").get<std::vector<std::string>>();
      if (j.contains("monodromies")) c.monodromies = j.at("monodromies").get<std::vector<std::string>>();
      if (j.contains("orders")) c.orders = j.at("orders").get<std::vector<std::int64_t>>();
      if (j.contains("search")) c.search = j.at("search").get<std::vector<std::int64_t>>();
      return c;
    };
    d.curve1 = curve("curve1");
    d.curve2 = curve("curve2");
    if (doc.contains("supergroup")) {
      const auto& j = doc.at("supergroup");
      SupergroupSpec sg;
      if (j.contains("name")) sg.group_name = j.at("name").get<std::string>();
      if (j.contains("generators")) sg.generators = j.at("generators").get<std::vector<std::string>>();
      sg.curve = curve("supergroup");
      d.supergroup = std::move(sg);
    }
    if (doc.contains("options") && doc.at("options").contains("format"))
      d.format = doc.at("options").at("format").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  detail::check_description(d);
  return d;
}

inline SurfaceDescription parse_description(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_description_json(text);
  return parse_description_text(text);
}

// Largest point mentioned in a cycle-notation string.
inline std::size_t max_point(std::string_view cycles) {
  std::size_t best = 0, cur = 0;
  bool in_number = false;
  for (char ch : cycles) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur = cur * 10 + static_cast<std::size_t>(ch - '0');
      in_number = true;
    } else {
      if (in_number) best = std::max(best, cur);
      cur = 0;
      in_number = false;
    }
  }
  return in_number ? std::max(best, cur) : best;
}

/// Cycle notation "(1,2)(3,4)" or a 1-based image array "[2,1,4,3]".
inline Permutation parse_permutation(std::string_view text, std::size_t degree) {
  const auto t = detail::trim(text);
  if (t.empty() || t.front() != '[') return Permutation::from_cycles(t, degree);
  if (t.back() != ']') throw Error(ErrorKind::Parse, "unterminated image array \"" + t + "\"");
  std::vector<int> images;
  for (const auto& item : detail::split_list(std::string_view(t).substr(1, t.size() - 2)))
    images.push_back(static_cast<int>(detail::parse_int(item)));
  if (images.size() != degree)
    throw Error(ErrorKind::NonPermutation, "image array \"" + t + "\" has length " + std::to_string(images.size()) +
                                               ", expected " + std::to_string(degree));
  return Permutation::from_images(images);
}

inline std::size_t permutation_degree(std::string_view text) {
  const auto t = detail::trim(text);
  if (!t.empty() && t.front() == '[') return detail::split_list(std::string_view(t).substr(1, t.size() - 2)).size();
  return max_point(t);
}

inline Group resolve_group(const std::string& name, const std::vector<std::string>& generators) {
  if (generators.empty()) return catalog_group(name);
  std::size_t degree = 1;
  for (const auto& g : generators) degree = std::max(degree, permutation_degree(g));
  std::vector<Permutation> gens;
  for (const auto& g : generators) gens.push_back(parse_permutation(g, degree));
  return group_from_generators(gens, kDefaultOrderCap, name.empty() ? "custom" : name);
}

inline Group resolve_group(const SurfaceDescription& d) { return resolve_group(d.group_name, d.generators); }

/// The explicit generating vector of a curve; orders default to the element
/// orders when not declared. Not validated here.
inline GeneratingVector explicit_vector(const Group& G, const CurveSpec& c) {
  auto element = [&](const std::string& s) {
    const auto p = parse_permutation(s, G.degree());
    return G.index_of(p);
  };
  GeneratingVector gv{G, c.g0, {}, {}, {}};
  for (std::size_t i = 0; i + 1 < c.handles.size(); i += 2)
    gv.handles.emplace_back(element(c.handles[i]), element(c.handles[i + 1]));
  for (const auto& m : c.monodromies) gv.monodromies.push_back(element(m));
  if (c.orders) {
    gv.orders = *c.orders;
  } else {
    for (auto m : gv.monodromies) gv.orders.push_back(static_cast<std::int64_t>(G.element_order(m)));
  }
  return gv;
}

}  // namespace pqsurf
