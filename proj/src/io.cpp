#include "actkit/io.hpp"

#include <fmt/format.h>

#include <fstream>

#include "actkit/error.hpp"

namespace actkit {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& why) {
  throw Error(errc::invalid_input, why);
}

void require_kind(const json& j, const char* kind) {
  if (!j.is_object() || j.value("kind", "") != kind)
    bad(fmt::format("expected an object with kind '{}'", kind));
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) bad(fmt::format("{} must be an array", what));
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad(fmt::format("{} must hold integers", what));
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<int> flat_table(const json& j, const char* what) {
  if (!j.is_array()) bad(fmt::format("{} must be an array of rows", what));
  std::vector<int> flat;
  for (const auto& row : j) {
    std::vector<int> r = int_list(row, what);
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

// A string where an object is expected names a file (relative to base) or,
// failing that, a builder.
json deref(const json& j, std::filesystem::path& base, bool allow_builder) {
  if (!j.is_string()) return j;
  std::filesystem::path p = base / j.get<std::string>();
  if (std::filesystem::exists(p)) {
    base = p.parent_path();
    return load_json_file(p);
  }
  if (allow_builder) return json{{"builder", j.get<std::string>()}};
  bad(fmt::format("no such file: {}", p.string()));
}

}  // namespace

json load_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) bad(fmt::format("cannot open {}", p.string()));
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    bad(fmt::format("{}: {}", p.string(), e.what()));
  }
  return j;
}

json monoid_to_json(const FiniteMonoid& m) {
  json table = json::array();
  for (int a = 0; a < m.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < m.size(); ++b) row.push_back(m.mul(a, b));
    table.push_back(std::move(row));
  }
  return {{"kind", "monoid"},
          {"size", m.size()},
          {"identity", m.identity()},
          {"table", std::move(table)}};
}

json act_to_json(const FiniteAct& a) {
  json action = json::array();
  for (int x = 0; x < a.size(); ++x) {
    json row = json::array();
    for (int s = 0; s < a.monoid()->size(); ++s) row.push_back(a.act(x, s));
    action.push_back(std::move(row));
  }
  return {{"kind", "act"},
          {"monoid", monoid_to_json(*a.monoid())},
          {"size", a.size()},
          {"action", std::move(action)}};
}

json map_to_json(const ActMap& f) {
  return {{"kind", "map"},
          {"domain", act_to_json(*f.domain)},
          {"codomain", act_to_json(*f.codomain)},
          {"values", f.values}};
}

json congruence_to_json(const Congruence& r) {
  return {{"kind", "congruence"},
          {"act", act_to_json(*r.act())},
          {"classes", r.classes()}};
}

json system_to_json(const DirectSystem& d) {
  json leq = json::array();
  for (const auto& row : d.leq) {
    json r = json::array();
    for (char c : row) r.push_back(static_cast<bool>(c));
    leq.push_back(std::move(r));
  }
  json acts = json::array();
  for (const ActPtr& a : d.acts) acts.push_back(act_to_json(*a));
  json transitions = json::object();
  for (const auto& [key, map] : d.transitions)
    transitions[fmt::format("{},{}", key.first, key.second)] = map.values;
  return {{"kind", "system"},
          {"indices", static_cast<int>(d.acts.size())},
          {"leq", std::move(leq)},
          {"acts", std::move(acts)},
          {"transitions", std::move(transitions)}};
}

MonoidPtr monoid_from_json(const json& jin, const std::filesystem::path& b) {
  std::filesystem::path base = b;
  json j = deref(jin, base, true);
  if (j.is_object() && j.contains("builder")) {
    try {
      return standard_monoid(j["builder"].get<std::string>());
    } catch (const Error& e) {
      bad(fmt::format("bad monoid reference: {}", e.what()));
    }
  }
  require_kind(j, "monoid");
  if (!j.contains("table") || !j.contains("identity"))
    bad("monoid needs 'table' and 'identity'");
  std::vector<int> flat = flat_table(j["table"], "monoid table");
  int n = j.value("size", -1);
  if (n < 1 || static_cast<int>(flat.size()) != n * n)
    bad("monoid table does not match its size");
  try {
    return std::make_shared<const FiniteMonoid>(
        std::move(flat), n, j["identity"].get<int>());
  } catch (const Error& e) {
    bad(e.what());
  }
}

ActPtr act_from_json(const json& jin, const std::filesystem::path& b) {
  std::filesystem::path base = b;
  json j = deref(jin, base, false);
  require_kind(j, "act");
  if (!j.contains("monoid") || !j.contains("action"))
    bad("act needs 'monoid' and 'action'");
  MonoidPtr m = monoid_from_json(j["monoid"], base);
  std::vector<int> flat = flat_table(j["action"], "action table");
  int size = j.value("size", -1);
  if (size < 1 || static_cast<int>(flat.size()) != size * m->size())
    bad("action table does not match size x monoid order");
  try {
    return std::make_shared<const FiniteAct>(m, std::move(flat), size);
  } catch (const Error& e) {
    bad(e.what());
  }
}

ActMap map_from_json(const json& jin, const std::filesystem::path& b) {
  std::filesystem::path base = b;
  json j = deref(jin, base, false);
  require_kind(j, "map");
  if (!j.contains("domain") || !j.contains("codomain") ||
      !j.contains("values"))
    bad("map needs 'domain', 'codomain' and 'values'");
  ActPtr dom = act_from_json(j["domain"], base);
  ActPtr cod = act_from_json(j["codomain"], base);
  try {
    return ActMap(dom, cod, int_list(j["values"], "map values"));
  } catch (const Error& e) {
    bad(e.what());
  }
}

Congruence congruence_from_json(const json& jin,
                                const std::filesystem::path& b) {
  std::filesystem::path base = b;
  json j = deref(jin, base, false);
  require_kind(j, "congruence");
  if (!j.contains("act") || !j.contains("classes"))
    bad("congruence needs 'act' and 'classes'");
  ActPtr act = act_from_json(j["act"], base);
  try {
    return Congruence(act, int_list(j["classes"], "congruence classes"));
  } catch (const Error& e) {
    bad(e.what());
  }
}

DirectSystem system_from_json(const json& jin,
                              const std::filesystem::path& b) {
  std::filesystem::path base = b;
  json j = deref(jin, base, false);
  require_kind(j, "system");
  if (!j.contains("indices") || !j.contains("leq") || !j.contains("acts") ||
      !j.contains("transitions"))
    bad("system needs 'indices', 'leq', 'acts' and 'transitions'");
  int n = j["indices"].get<int>();
  if (!j["acts"].is_array() || static_cast<int>(j["acts"].size()) != n)
    bad("system 'acts' must list one act per index");
  std::vector<ActPtr> acts;
  for (const auto& a : j["acts"]) acts.push_back(act_from_json(a, base));
  if (!j["leq"].is_array() || static_cast<int>(j["leq"].size()) != n)
    bad("system 'leq' must be an n x n matrix");
  std::vector<std::vector<char>> leq;
  for (const auto& row : j["leq"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad("system 'leq' must be an n x n matrix");
    std::vector<char> r;
    for (const auto& v : row) {
      if (v.is_boolean())
        r.push_back(v.get<bool>());
      else if (v.is_number_integer())
        r.push_back(v.get<int>() != 0);
      else
        bad("leq entries must be booleans");
    }
    leq.push_back(std::move(r));
  }
  std::map<std::pair<int, int>, ActMap> transitions;
  if (!j["transitions"].is_object()) bad("'transitions' must be an object");
  for (const auto& [key, val] : j["transitions"].items()) {
    int i = -1, k = -1;
    if (std::sscanf(key.c_str(), "%d,%d", &i, &k) != 2)
      bad(fmt::format("bad transition key '{}'", key));
    if (i < 0 || k < 0 || i >= n || k >= n)
      bad(fmt::format("transition key '{}' out of range", key));
    try {
      transitions.emplace(std::pair<int, int>(i, k),
                          ActMap(acts[i], acts[k],
                                 int_list(val, "transition values")));
    } catch (const Error& e) {
      bad(fmt::format("transition {}: {}", key, e.what()));
    }
  }
  try {
    return make_system(std::move(acts), std::move(leq),
                       std::move(transitions));
  } catch (const Error& e) {
    bad(fmt::format("invalid system: {}", e.what()));
  }
}

}  // namespace actkit
