#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "frdt/series.hpp"

namespace frdt {

// x,t,re_u,im_u,abs_u[,re_v,im_v,abs_v]; %.17g, LF line endings.
std::string format_csv(const SolutionTable& table);
SolutionTable parse_csv(std::istream& in);

// {"meta": meta, "rows": [{"x":..,"t":..,"re_u":..,...}, ...]}
nlohmann::json table_to_json(const SolutionTable& table, const nlohmann::json& meta);

// Re u and Im u (and v, when present) against x, one polyline per t.
std::string format_svg(const SolutionTable& table, const std::string& title);

// File writers. Throw UsageError for an empty table, IoError on write failure.
void emit_csv(const SolutionTable& table, const std::filesystem::path& path);
void emit_json(const SolutionTable& table, const nlohmann::json& meta,
               const std::filesystem::path& path);
void emit_svg(const SolutionTable& table, const std::filesystem::path& path,
              const std::string& title = "");

}  // namespace frdt
