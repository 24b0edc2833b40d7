#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mirrorbench/graph.hpp"

namespace mirrorbench {

/// Whitespace-separated integer pairs, one edge per line; '#' lines and
/// blank lines are skipped. Ids are compacted in order of first appearance.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

/// Each edge once as "u v" with u < v, sorted. Isolated nodes are not
/// representable; a header comment records the node count.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Lower-case hex SHA-256 of the file bytes.
std::string file_sha256(const std::filesystem::path& path);

// RFC 4180 helpers.
std::string csv_escape(const std::string& field);
/// Splits one record; throws ErrorCode::parse on malformed quoting. Records
/// spanning several physical lines are joined by read_csv_record.
std::vector<std::string> parse_csv_line(const std::string& line);
bool read_csv_record(std::istream& in, std::vector<std::string>& fields);

/// Shortest decimal text that round-trips the double.
std::string format_double(double value);

}  // namespace mirrorbench
