#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "vcfam/set_family.hpp"

namespace vcfam {

// Canonical text format:
//
//   vcfam 1
//   n=<n> s=<s|mixed>
//   <one member per line, ascending elements, "-" for the empty set>
//
// Member lines must be in canonical mask order without repeats.
SetFamily read_family(std::string_view text);
std::string write_family(const SetFamily& f);

SetFamily load_family(const std::filesystem::path& path);
void save_family(const std::filesystem::path& path, const SetFamily& f);

// {"n": int, "members": [[int, ...], ...]}, same ordering rules as the text form.
nlohmann::json family_to_json(const SetFamily& f);
SetFamily family_from_json(const nlohmann::json& j);

}  // namespace vcfam
