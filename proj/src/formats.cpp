#include "srgpaths/formats.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace srgpaths {

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6Max = 126;

void append_g6_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Offset + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kG6Offset + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kG6Offset + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kG6Offset + (n & 63)));
  }
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.size();
  std::string out;
  append_g6_size(out, n);
  int bit = 5;
  int cur = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.adjacent(u, v)) cur |= 1 << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(kG6Offset + cur));
        cur = 0;
        bit = 5;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(kG6Offset + cur));
  return out;
}

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw MalformedGraph6("unexpected end of line", pos);
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < kG6Offset || c > kG6Max)
      throw MalformedGraph6("byte outside the graph6 alphabet", pos);
    ++pos;
    return c - kG6Offset;
  };

  long long n = 0;
  const int first = next();
  if (first != '~' - kG6Offset) {
    n = first;
  } else {
    const int second = next();
    if (second == '~' - kG6Offset) {
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = second;
      for (int i = 0; i < 2; ++i) n = (n << 6) | next();
    }
  }
  if (n > Graph::kMaxVertices)
    throw TooLarge("graph6 line encodes order " + std::to_string(n) + ", cap is " +
                   std::to_string(Graph::kMaxVertices));

  const long long bits_needed = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int have = 0;
  int cur = 0;
  long long bit_index = 0;
  int col = 1, row = 0;  // upper triangle, column-major
  while (bit_index < bits_needed) {
    if (have == 0) {
      cur = next();
      have = 6;
    }
    const bool set = (cur >> (have - 1)) & 1;
    --have;
    ++bit_index;
    if (set) edges.emplace_back(row, col);
    if (++row == col) {
      row = 0;
      ++col;
    }
  }
  if (have > 0 && (cur & ((1 << have) - 1)) != 0)
    throw MalformedGraph6("nonzero padding bits", pos - 1);
  if (pos != line.size()) throw MalformedGraph6("trailing bytes after the bit field", pos);
  return Graph(static_cast<int>(n), edges);
}

std::string write_latin(const LatinSquare& square) {
  std::string out;
  const int m = square.order();
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      if (c) out.push_back(' ');
      out += std::to_string(square.at(r, c));
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<int> parse_int_row(const std::string& line, int lineno, const char* what) {
  std::vector<int> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Ragged(std::string(what) + " line " + std::to_string(lineno) + ": token '" + tok +
                   "' is not an integer");
    out.push_back(value);
  }
  return out;
}

}  // namespace

LatinSquare parse_latin(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw Ragged("latin square text is empty");
  std::vector<int> cells;
  const int m = static_cast<int>(parse_int_row(lines[0], 1, "latin").size());
  if (static_cast<int>(lines.size()) != m)
    throw Ragged("latin square of order " + std::to_string(m) + " needs " + std::to_string(m) +
                 " rows, got " + std::to_string(lines.size()));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto row = parse_int_row(lines[i], static_cast<int>(i + 1), "latin");
    if (static_cast<int>(row.size()) != m)
      throw Ragged("latin row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                   " cells, expected " + std::to_string(m));
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return LatinSquare(m, std::move(cells));
}

std::string write_sts(const SteinerTripleSystem& system) {
  std::string out = std::to_string(system.points()) + "\n";
  for (const Block& b : system.blocks())
    out += std::to_string(b[0]) + " " + std::to_string(b[1]) + " " + std::to_string(b[2]) + "\n";
  return out;
}

SteinerTripleSystem parse_sts(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw NotSts("triple system text is empty");
  const auto header = parse_int_row(lines[0], 1, "sts");
  if (header.size() != 1)
    throw NotSts("header must be a single point count, got " + std::to_string(header.size()) +
                 " tokens");
  std::vector<Block> blocks;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = parse_int_row(lines[i], static_cast<int>(i + 1), "sts");
    if (row.size() != 3)
      throw NotSts("block line " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                   " points, expected 3");
    blocks.push_back({row[0], row[1], row[2]});
  }
  return SteinerTripleSystem(header[0], std::move(blocks));
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out.push_back('|');
    out += labels[i];
  }
  return out;
}

}  // namespace

std::string emit_report(std::span<const ReportRow> rows, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "name,n,k,lambda,mu,primitive,pattern,found,witness,elapsed_ms,note\n";
    for (const ReportRow& row : rows) {
      std::string prefix = csv_escape(row.name) + ",";
      if (row.params)
        prefix += std::to_string(row.params->n) + "," + std::to_string(row.params->k) + "," +
                  std::to_string(row.params->lambda) + "," + std::to_string(row.params->mu);
      else
        prefix += ",,,";
      prefix += ",";
      if (row.primitive) prefix += *row.primitive ? "true" : "false";
      const std::string suffix = "," + (row.elapsed_ms ? format_ms(*row.elapsed_ms) : "") + "," +
                                 csv_escape(row.note) + "\n";
      if (row.findings.empty()) {
        out += prefix + ",,," + suffix;
        continue;
      }
      for (const PatternFinding& f : row.findings) {
        out += prefix + "," + std::string(pattern_name(f.pattern)) + "," +
               (f.found ? "true" : "false") + "," + csv_escape(join_labels(f.witness_labels)) +
               suffix;
      }
    }
    return out;
  }

  std::string out;
  for (const ReportRow& row : rows) {
    nlohmann::json obj;
    obj["name"] = row.name;
    if (row.params) {
      obj["params"] = {{"n", row.params->n},
                       {"k", row.params->k},
                       {"lambda", row.params->lambda},
                       {"mu", row.params->mu}};
    } else {
      obj["params"] = nullptr;
    }
    obj["primitive"] = row.primitive ? nlohmann::json(*row.primitive) : nlohmann::json(nullptr);
    nlohmann::json findings = nlohmann::json::array();
    for (const PatternFinding& f : row.findings) {
      findings.push_back({{"pattern", std::string(pattern_name(f.pattern))},
                          {"found", f.found},
                          {"witness", f.witness_labels}});
    }
    obj["findings"] = findings;
    obj["elapsed_ms"] = row.elapsed_ms ? nlohmann::json(*row.elapsed_ms) : nlohmann::json(nullptr);
    obj["note"] = row.note;
    out += obj.dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace srgpaths
