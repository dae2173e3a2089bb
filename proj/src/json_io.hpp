#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

#include "pregroup/metarule.hpp"

namespace pregroup::detail {

/// Reads a metarule object; on failure appends to `problems` and returns false.
bool parse_metarule(const nlohmann::json& j, const AtomTable& table, Metarule& out,
                    std::vector<std::string>& problems, const std::string& where);
nlohmann::json metarule_to_json(const Metarule& m);

std::string read_file(const std::filesystem::path& path);

}  // namespace pregroup::detail
