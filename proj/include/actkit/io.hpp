#pragma once

#include <filesystem>

#include <json.hpp>

#include "actkit/act.hpp"
#include "actkit/colimit.hpp"
#include "actkit/congruence.hpp"
#include "actkit/monoid.hpp"

namespace actkit {

// JSON forms.  Every reader throws InvalidInput with a reason on malformed
// data.  Where a monoid or act is expected, a string is accepted instead of
// the inline object: it is read as a file path relative to `base` unless no
// such file exists, in which case it must be a standard_monoid builder text
// (monoids only).
//
//   monoid      {"kind":"monoid","size":N,"identity":i,"table":[[..]..]}
//   act         {"kind":"act","monoid":M,"size":k,"action":[[..]..]}
//   map         {"kind":"map","domain":A,"codomain":B,"values":[..]}
//   congruence  {"kind":"congruence","act":A,"classes":[..]}
//   system      {"kind":"system","indices":N,"leq":[[bool]..],
//                "acts":[..],"transitions":{"i,j":[..]}}

nlohmann::json load_json_file(const std::filesystem::path& p);

nlohmann::json monoid_to_json(const FiniteMonoid& m);
nlohmann::json act_to_json(const FiniteAct& a);
nlohmann::json map_to_json(const ActMap& f);
nlohmann::json congruence_to_json(const Congruence& r);
nlohmann::json system_to_json(const DirectSystem& d);

MonoidPtr monoid_from_json(const nlohmann::json& j,
                           const std::filesystem::path& base = {});
ActPtr act_from_json(const nlohmann::json& j,
                     const std::filesystem::path& base = {});
ActMap map_from_json(const nlohmann::json& j,
                     const std::filesystem::path& base = {});
Congruence congruence_from_json(const nlohmann::json& j,
                                const std::filesystem::path& base = {});
DirectSystem system_from_json(const nlohmann::json& j,
                              const std::filesystem::path& base = {});

}  // namespace actkit
