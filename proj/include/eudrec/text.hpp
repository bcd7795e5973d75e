#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>

namespace eudrec {

std::string_view trim(std::string_view text);
bool is_blank(std::string_view text);

/// Lower-cases ASCII letters and folds runs of spaces, hyphens, dots and
/// underscores into a single '_', trimming leading and trailing separators.
/// "Weather Station" -> "weather_station".
std::string normalize_category(std::string_view text);
bool is_normalized_category(std::string_view text);

/// Percent-encodes every byte outside [A-Za-z0-9._-]. A key made only of
/// dots is fully encoded so it can never name "." or "..".
std::string escape_key(std::string_view key);
std::string unescape_key(std::string_view escaped);

using Timestamp = std::chrono::system_clock::time_point;

/// ISO-8601 UTC with milliseconds: 2026-10-16T09:30:00.125Z
std::string format_timestamp(Timestamp t);
Timestamp parse_timestamp(std::string_view text);
/// Compact sortable form used in document keys: 20261016T093000125Z
std::string compact_timestamp(Timestamp t);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace eudrec
