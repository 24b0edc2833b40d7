#include "mirrorbench/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "mirrorbench/error.hpp"

namespace mirrorbench {

namespace {

constexpr std::string_view kNodeHeader = "# nodes:";

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::optional<std::uint64_t> declared_nodes;
  std::uint64_t max_id = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (line.compare(first, kNodeHeader.size(), kNodeHeader) == 0) {
        std::istringstream header(line.substr(first + kNodeHeader.size()));
        std::uint64_t nodes = 0;
        if (header >> nodes) declared_nodes = nodes;
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || u < 0 || v < 0 || (fields >> rest)) {
      throw Error(ErrorCode::parse, "edge list line " + std::to_string(line_no) +
                                        ": expected two non-negative integers");
    }
    pairs.emplace_back(static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v));
    max_id = std::max({max_id, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)});
  }
  if (in.bad()) throw Error(ErrorCode::io, "error while reading edge list");

  // A node-count header written by write_edge_list keeps ids and isolated
  // nodes as they were.
  if (declared_nodes && (pairs.empty() || max_id < *declared_nodes)) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    return Graph::from_dense_edges(*declared_nodes, edges);
  }
  return from_edge_list(pairs);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << kNodeHeader << ' ' << g.node_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) throw Error(ErrorCode::io, "error while writing " + path.string());
}

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::io, "SHA-256 initialization failed");
  }
  std::array<char, 1 << 16> buffer{};
  while (in) {
    in.read(buffer.data(), buffer.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == ',') {
      fields.emplace_back();
      was_quoted = false;
    } else if (c == '"') {
      if (!fields.back().empty() || was_quoted) throw Error(ErrorCode::parse, "stray quote in CSV field");
      quoted = true;
      was_quoted = true;
    } else {
      if (was_quoted) throw Error(ErrorCode::parse, "text after closing quote in CSV field");
      fields.back() += c;
    }
  }
  if (quoted) throw Error(ErrorCode::parse, "unterminated quoted CSV field");
  return fields;
}

bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
  std::string record, line;
  while (std::getline(in, line)) {
    if (!record.empty()) record += '\n';
    record += line;
    std::size_t quotes = 0;
    for (char c : record) quotes += c == '"';
    if (quotes % 2 == 0) {
      if (!record.empty() && record.back() == '\r') record.pop_back();
      if (record.empty()) continue;
      fields = parse_csv_line(record);
      return true;
    }
  }
  if (!record.empty()) throw Error(ErrorCode::parse, "unterminated quoted CSV field");
  return false;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return std::to_string(value);
  return std::string(buf.data(), end);
}

}  // namespace mirrorbench
