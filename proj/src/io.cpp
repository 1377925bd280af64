// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "basis_relabel/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "basis_relabel/errors.hpp"
#include "json.hpp"

namespace basis_relabel {
namespace {

using Json = nlohmann::json;

constexpr std::string_view kInstanceHeader = "basis-relabel instance v1";
constexpr std::string_view kSequenceHeader = "basis-relabel sequence v1";

struct Token {
  std::string text;
  int column = 1;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Splits into non-empty lines of whitespace-separated tokens; '#' starts a
// comment.
std::vector<Line> tokenize(std::string_view text, int& last_line) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
      }
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
      }
      if (i > start) {
        line.tokens.push_back(
            {std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
      }
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  last_line = number;
  return out;
}

[[noreturn]] void fail(const std::string& message, const Line& line,
                       std::size_t token) {
  const int column = token < line.tokens.size() ? line.tokens[token].column
                     : line.tokens.empty()      ? 1
                                                : line.tokens.back().column +
                                                 static_cast<int>(
                                                     line.tokens.back().text.size());
  throw ParseError(message, line.number, column);
}

long long to_integer(const Line& line, std::size_t token, long long lo,
                     long long hi) {
  if (token >= line.tokens.size()) fail("missing integer", line, token);
  const std::string& s = line.tokens[token].text;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail("expected an integer, found '" + s + "'", line, token);
  }
  if (value < lo || value > hi) {
    fail("value " + s + " out of range [" + std::to_string(lo) + ", " +
             std::to_string(hi) + "]",
         line, token);
  }
  return value;
}

void expect_count(const Line& line, std::size_t count) {
  if (line.tokens.size() < count) fail("too few fields", line, line.tokens.size());
  if (line.tokens.size() > count) fail("unexpected extra field", line, count);
}

bool is_rational_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  const std::size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  const std::size_t den = ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i > den && i == s.size();
}

// Returns an empty string when valid, otherwise the reason.
std::string parse_entry(Field field, const std::string& s, mpq_class& out) {
  if (field == Field::kGf2) {
    if (s != "0" && s != "1") return "GF(2) entries must be 0 or 1";
    out = s == "1" ? 1 : 0;
    return {};
  }
  if (!is_rational_literal(s)) return "expected a rational like -3/4";
  std::string digits = s[0] == '+' ? s.substr(1) : s;
  if (auto slash = digits.find('/'); slash != std::string::npos) {
    const std::string den = digits.substr(slash + 1);
    if (den.find_first_not_of('0') == std::string::npos) {
      return "zero denominator";
    }
  }
  out.set_str(digits, 10);
  out.canonicalize();
  return {};
}

MatroidKind kind_from_name(std::string_view name, bool& ok) {
  ok = true;
  for (MatroidKind k : {MatroidKind::kGraph, MatroidKind::kMatrixGf2,
                        MatroidKind::kMatrixRational, MatroidKind::kUniform}) {
    if (kind_name(k) == name) return k;
  }
  ok = false;
  return MatroidKind::kGraph;
}

constexpr long long kMaxCount = 1'000'000;

InstanceFile parse_instance_text(std::string_view text) {
  int last_line = 0;
  const std::vector<Line> lines = tokenize(text, last_line);
  const Line eof{last_line + 1, {}};
  if (lines.empty()) throw ParseError("empty instance file", 1, 1);
  {
    const Line& head = lines.front();
    std::string joined;
    for (const Token& t : head.tokens) joined += (joined.empty() ? "" : " ") + t.text;
    if (joined != kInstanceHeader) {
      fail("expected header '" + std::string(kInstanceHeader) + "'", head, 0);
    }
  }
  InstanceFile inst;
  bool have_kind = false, have_vertices = false, have_size = false;
  bool have_rank = false, have_elements = false;
  int rows_seen = 0;
  const Line* start_line = nullptr;
  const Line* target_line = nullptr;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& key = line.tokens[0].text;
    if (!have_kind) {
      if (key != "kind") fail("expected 'kind' after the header", line, 0);
      expect_count(line, 2);
      bool ok = false;
      inst.kind = kind_from_name(line.tokens[1].text, ok);
      if (!ok) fail("unknown kind '" + line.tokens[1].text + "'", line, 1);
      have_kind = true;
      continue;
    }
    if (key == "start" || key == "target") {
      auto& slot = key == "start" ? inst.start : inst.target;
      if (slot) fail("duplicate '" + key + "' line", line, 0);
      std::vector<Element> labels;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        labels.push_back(static_cast<Element>(to_integer(line, t, 0, kMaxCount)));
      }
      slot = std::move(labels);
      (key == "start" ? start_line : target_line) = &line;
      continue;
    }
    switch (inst.kind) {
      case MatroidKind::kGraph:
        if (key == "vertices") {
          if (have_vertices) fail("duplicate 'vertices' line", line, 0);
          expect_count(line, 2);
          inst.graph = Graph(static_cast<int>(to_integer(line, 1, 0, kMaxCount)));
          have_vertices = true;
        } else if (key == "edge") {
          if (!have_vertices) fail("'edge' before 'vertices'", line, 0);
          expect_count(line, 3);
          const long long hi = inst.graph.vertex_count - 1;
          const int u = static_cast<int>(to_integer(line, 1, 0, hi));
          const int v = static_cast<int>(to_integer(line, 2, 0, hi));
          inst.graph.add_edge(u, v);
        } else {
          fail("unknown keyword '" + key + "' for kind graph", line, 0);
        }
        break;
      case MatroidKind::kMatrixGf2:
      case MatroidKind::kMatrixRational:
        if (key == "size") {
          if (have_size) fail("duplicate 'size' line", line, 0);
          expect_count(line, 3);
          const int r = static_cast<int>(to_integer(line, 1, 0, 4096));
          const int c = static_cast<int>(to_integer(line, 2, 0, 4096));
          inst.matrix = Matrix(inst.kind == MatroidKind::kMatrixGf2
                                   ? Field::kGf2
                                   : Field::kRational,
                               r, c);
          have_size = true;
        } else if (key == "row") {
          if (!have_size) fail("'row' before 'size'", line, 0);
          if (rows_seen >= inst.matrix.rows) fail("too many rows", line, 0);
          expect_count(line, static_cast<std::size_t>(inst.matrix.cols) + 1);
          for (int c = 0; c < inst.matrix.cols; ++c) {
            const std::string reason =
                parse_entry(inst.matrix.field, line.tokens[c + 1].text,
                            inst.matrix.at(rows_seen, c));
            if (!reason.empty()) fail(reason, line, c + 1);
          }
          ++rows_seen;
        } else {
          fail("unknown keyword '" + key + "' for a matrix", line, 0);
        }
        break;
      case MatroidKind::kUniform:
        if (key == "rank") {
          if (have_rank) fail("duplicate 'rank' line", line, 0);
          expect_count(line, 2);
          inst.uniform_rank = static_cast<int>(to_integer(line, 1, 0, kMaxCount));
          have_rank = true;
        } else if (key == "elements") {
          if (have_elements) fail("duplicate 'elements' line", line, 0);
          expect_count(line, 2);
          inst.uniform_size = static_cast<int>(to_integer(line, 1, 0, kMaxCount));
          have_elements = true;
        } else {
          fail("unknown keyword '" + key + "' for kind uniform", line, 0);
        }
        break;
    }
  }
  if (!have_kind) fail("missing 'kind' line", eof, 0);
  switch (inst.kind) {
    case MatroidKind::kGraph:
      if (!have_vertices) fail("missing 'vertices' line", eof, 0);
      break;
    case MatroidKind::kMatrixGf2:
    case MatroidKind::kMatrixRational:
      if (!have_size) fail("missing 'size' line", eof, 0);
      if (rows_seen != inst.matrix.rows) {
        fail("expected " + std::to_string(inst.matrix.rows) + " rows, found " +
                 std::to_string(rows_seen),
             eof, 0);
      }
      break;
    case MatroidKind::kUniform:
      if (!have_rank || !have_elements) {
        fail("uniform instances need 'rank' and 'elements'", eof, 0);
      }
      if (inst.uniform_rank > inst.uniform_size) {
        fail("rank exceeds the number of elements", eof, 0);
      }
      break;
  }
  const int count = inst.element_count();
  for (auto [labels, where] : {std::pair{&inst.start, start_line},
                               std::pair{&inst.target, target_line}}) {
    if (!*labels) continue;
    for (std::size_t i = 0; i < (*labels)->size(); ++i) {
      if ((**labels)[i] >= count) {
        fail("element " + std::to_string((**labels)[i]) + " does not exist",
             *where, i + 1);
      }
    }
  }
  return inst;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    auto [line, column] = line_column(text, err.byte == 0 ? 0 : err.byte - 1);
    throw ParseError("invalid JSON", line, column);
  }
}

template <typename T>
T json_get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'", 1, 1);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("bad value for key '") + key + "'", 1, 1);
  }
}

InstanceFile parse_instance_json(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object() || json_get<std::string>(j, "format") != kInstanceHeader) {
    throw ParseError("expected format '" + std::string(kInstanceHeader) + "'", 1, 1);
  }
  InstanceFile inst;
  bool ok = false;
  inst.kind = kind_from_name(json_get<std::string>(j, "kind"), ok);
  if (!ok) throw ParseError("unknown kind", 1, 1);
  switch (inst.kind) {
    case MatroidKind::kGraph: {
      const int n = json_get<int>(j, "vertices");
      if (n < 0) throw ParseError("negative vertex count", 1, 1);
      inst.graph = Graph(n);
      for (const auto& e : json_get<std::vector<std::vector<int>>>(j, "edges")) {
        if (e.size() != 2 || e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n) {
          throw ParseError("bad edge", 1, 1);
        }
        inst.graph.add_edge(e[0], e[1]);
      }
      break;
    }
    case MatroidKind::kMatrixGf2:
    case MatroidKind::kMatrixRational: {
      const int rows = json_get<int>(j, "rows");
      const int cols = json_get<int>(j, "cols");
      if (rows < 0 || cols < 0) throw ParseError("negative matrix size", 1, 1);
      const Field field =
          inst.kind == MatroidKind::kMatrixGf2 ? Field::kGf2 : Field::kRational;
      inst.matrix = Matrix(field, rows, cols);
      const auto entries =
          json_get<std::vector<std::vector<std::string>>>(j, "matrix");
      if (static_cast<int>(entries.size()) != rows) {
        throw ParseError("matrix row count mismatch", 1, 1);
      }
      for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(entries[r].size()) != cols) {
          throw ParseError("matrix column count mismatch", 1, 1);
        }
        for (int c = 0; c < cols; ++c) {
          const std::string reason =
              parse_entry(field, entries[r][c], inst.matrix.at(r, c));
          if (!reason.empty()) throw ParseError(reason, 1, 1);
        }
      }
      break;
    }
    case MatroidKind::kUniform:
      inst.uniform_rank = json_get<int>(j, "rank");
      inst.uniform_size = json_get<int>(j, "elements");
      if (inst.uniform_rank < 0 || inst.uniform_rank > inst.uniform_size) {
        throw ParseError("bad uniform parameters", 1, 1);
      }
      break;
  }
  for (const char* key : {"start", "target"}) {
    if (!j.contains(key)) continue;
    auto labels = json_get<std::vector<int>>(j, key);
    for (int e : labels) {
      if (e < 0 || e >= inst.element_count()) {
        throw ParseError("element " + std::to_string(e) + " does not exist", 1, 1);
      }
    }
    (std::string_view(key) == "start" ? inst.start : inst.target) = labels;
  }
  return inst;
}

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  }
  return false;
}

std::string join(const std::vector<Element>& xs) {
  std::string out;
  for (Element x : xs) out += " " + std::to_string(x);
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  throw UsageError("unknown format '" + std::string(name) + "'");
}

std::string_view kind_name(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kGraph:
      return "graph";
    case MatroidKind::kMatrixGf2:
      return "matrix-gf2";
    case MatroidKind::kMatrixRational:
      return "matrix-rational";
    case MatroidKind::kUniform:
      return "uniform";
  }
  return "unknown";
}

int InstanceFile::element_count() const {
  switch (kind) {
    case MatroidKind::kGraph:
      return graph.edge_count();
    case MatroidKind::kMatrixGf2:
    case MatroidKind::kMatrixRational:
      return matrix.cols;
    case MatroidKind::kUniform:
      return uniform_size;
  }
  return 0;
}

MatroidHandle InstanceFile::matroid() const {
  switch (kind) {
    case MatroidKind::kGraph:
      return graphic_matroid(graph);
    case MatroidKind::kMatrixGf2:
    case MatroidKind::kMatrixRational:
      return linear_matroid(matrix);
    case MatroidKind::kUniform:
      break;
  }
  return uniform_matroid(uniform_rank, uniform_size);
}

InstanceFile parse_instance(std::string_view text) {
  return looks_like_json(text) ? parse_instance_json(text)
                               : parse_instance_text(text);
}

std::string serialize_instance(const InstanceFile& inst, Format format) {
  if (format == Format::kJson) {
    Json j;
    j["format"] = kInstanceHeader;
    j["kind"] = kind_name(inst.kind);
    switch (inst.kind) {
      case MatroidKind::kGraph: {
        j["vertices"] = inst.graph.vertex_count;
        Json edges = Json::array();
        for (auto [u, v] : inst.graph.edges) edges.push_back({u, v});
        j["edges"] = edges;
        break;
      }
      case MatroidKind::kMatrixGf2:
      case MatroidKind::kMatrixRational: {
        j["rows"] = inst.matrix.rows;
        j["cols"] = inst.matrix.cols;
        Json rows = Json::array();
        for (int r = 0; r < inst.matrix.rows; ++r) {
          Json row = Json::array();
          for (int c = 0; c < inst.matrix.cols; ++c) {
            row.push_back(inst.matrix.at(r, c).get_str());
          }
          rows.push_back(row);
        }
        j["matrix"] = rows;
        break;
      }
      case MatroidKind::kUniform:
        j["rank"] = inst.uniform_rank;
        j["elements"] = inst.uniform_size;
        break;
    }
    if (inst.start) j["start"] = *inst.start;
    if (inst.target) j["target"] = *inst.target;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << kInstanceHeader << "\n" << "kind " << kind_name(inst.kind) << "\n";
  switch (inst.kind) {
    case MatroidKind::kGraph:
      out << "vertices " << inst.graph.vertex_count << "\n";
      for (auto [u, v] : inst.graph.edges) out << "edge " << u << " " << v << "\n";
      break;
    case MatroidKind::kMatrixGf2:
    case MatroidKind::kMatrixRational:
      out << "size " << inst.matrix.rows << " " << inst.matrix.cols << "\n";
      for (int r = 0; r < inst.matrix.rows; ++r) {
        out << "row";
        for (int c = 0; c < inst.matrix.cols; ++c) {
          out << " " << inst.matrix.at(r, c).get_str();
        }
        out << "\n";
      }
      break;
    case MatroidKind::kUniform:
      out << "rank " << inst.uniform_rank << "\n"
          << "elements " << inst.uniform_size << "\n";
      break;
  }
  if (inst.start) out << "start" << join(*inst.start) << "\n";
  if (inst.target) out << "target" << join(*inst.target) << "\n";
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t instance_hash(const InstanceFile& instance) {
  return fnv1a64(serialize_instance(instance, Format::kText));
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

SequenceFile parse_sequence(std::string_view text) {
  SequenceFile seq;
  if (looks_like_json(text)) {
    const Json j = parse_json(text);
    if (!j.is_object() || json_get<std::string>(j, "format") != kSequenceHeader) {
      throw ParseError("expected format '" + std::string(kSequenceHeader) + "'", 1, 1);
    }
    const std::string hash = json_get<std::string>(j, "instance_hash");
    auto [ptr, ec] = std::from_chars(hash.data(), hash.data() + hash.size(),
                                     seq.instance_hash, 16);
    if (ec != std::errc() || ptr != hash.data() + hash.size() || hash.size() != 16) {
      throw ParseError("instance_hash must be 16 hex digits", 1, 1);
    }
    seq.algorithm = json_get<std::string>(j, "algorithm");
    seq.bound = json_get<long long>(j, "bound");
    const auto rows = json_get<std::vector<std::vector<long long>>>(j, "sequence");
    if (json_get<long long>(j, "steps") != static_cast<long long>(rows.size())) {
      throw ParseError("step count does not match the sequence", 1, 1);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (r.size() != 4 || r[0] != static_cast<long long>(i)) {
        throw ParseError("bad step record " + std::to_string(i), 1, 1);
      }
      seq.steps.push_back({static_cast<Element>(r[1]), static_cast<Element>(r[2]),
                           static_cast<int>(r[3])});
    }
    return seq;
  }
  int last_line = 0;
  const std::vector<Line> lines = tokenize(text, last_line);
  const Line eof{last_line + 1, {}};
  if (lines.empty()) throw ParseError("empty sequence file", 1, 1);
  std::string joined;
  for (const Token& t : lines[0].tokens) joined += (joined.empty() ? "" : " ") + t.text;
  if (joined != kSequenceHeader) {
    fail("expected header '" + std::string(kSequenceHeader) + "'", lines[0], 0);
  }
  const char* keys[] = {"instance-hash", "algorithm", "steps", "bound"};
  long long count = 0;
  for (int k = 0; k < 4; ++k) {
    if (static_cast<std::size_t>(k + 1) >= lines.size()) {
      fail(std::string("missing '") + keys[k] + "' line", eof, 0);
    }
    const Line& line = lines[k + 1];
    if (line.tokens[0].text != keys[k]) {
      fail(std::string("expected '") + keys[k] + "'", line, 0);
    }
    expect_count(line, 2);
    const std::string& value = line.tokens[1].text;
    switch (k) {
      case 0: {
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(),
                                         seq.instance_hash, 16);
        if (ec != std::errc() || ptr != value.data() + value.size() ||
            value.size() != 16) {
          fail("instance hash must be 16 hex digits", line, 1);
        }
        break;
      }
      case 1:
        seq.algorithm = value;
        break;
      case 2:
        count = to_integer(line, 1, 0, 1'000'000'000);
        break;
      case 3:
        seq.bound = to_integer(line, 1, 0, 1'000'000'000'000'000LL);
        break;
    }
  }
  for (std::size_t li = 5; li < lines.size(); ++li) {
    const Line& line = lines[li];
    expect_count(line, 4);
    const long long index = to_integer(line, 0, 0, 1'000'000'000);
    if (index != static_cast<long long>(seq.steps.size())) {
      fail("expected step index " + std::to_string(seq.steps.size()), line, 0);
    }
    seq.steps.push_back({static_cast<Element>(to_integer(line, 1, 0, kMaxCount)),
                         static_cast<Element>(to_integer(line, 2, 0, kMaxCount)),
                         static_cast<int>(to_integer(line, 3, 1, kMaxCount))});
  }
  if (static_cast<long long>(seq.steps.size()) != count) {
    fail("header declares " + std::to_string(count) + " steps, found " +
             std::to_string(seq.steps.size()),
         eof, 0);
  }
  return seq;
}

std::string serialize_sequence(const SequenceFile& seq, Format format) {
  if (format == Format::kJson) {
    Json j;
    j["format"] = kSequenceHeader;
    j["instance_hash"] = hex64(seq.instance_hash);
    j["algorithm"] = seq.algorithm;
    j["steps"] = seq.steps.size();
    j["bound"] = seq.bound;
    Json rows = Json::array();
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
      const ExchangeStep& s = seq.steps[i];
      rows.push_back({i, s.out, s.in, s.label});
    }
    j["sequence"] = rows;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << kSequenceHeader << "\n"
      << "instance-hash " << hex64(seq.instance_hash) << "\n"
      << "algorithm " << seq.algorithm << "\n"
      << "steps " << seq.steps.size() << "\n"
      << "bound " << seq.bound << "\n";
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const ExchangeStep& s = seq.steps[i];
    out << i << " " << s.out << " " << s.in << " " << s.label << "\n";
  }
  return out.str();
}

}  // namespace basis_relabel
