// Copyright 2026 The FairSDP Authors.
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

#include "fairsdp/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "fairsdp/errors.hpp"

namespace fairsdp {
namespace {

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Strips a trailing '\r' so files written on Windows parse the same way.
std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

long parse_int(const std::string& token, const std::string& path, int lineno) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || token.empty()) {
    throw FileError(path + ":" + std::to_string(lineno) +
                    ": expected an integer, got '" + token + "'");
  }
  return v;
}

double parse_double(const std::string& token, const std::string& path, int lineno) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || token.empty()) {
    throw FileError(path + ":" + std::to_string(lineno) +
                    ": expected a number, got '" + token + "'");
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

// Shared reader for the two-column CSVs: returns per-node values after
// checking the header and that nodes 0..n-1 each appear exactly once.
std::vector<int> load_node_value_csv(const std::string& path,
                                     const std::string& header) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw FileError(path + ": empty file");
  ++lineno;
  if (chomp(line) != header) {
    throw FileError(path + ": expected header '" + header + "'");
  }
  std::vector<std::pair<long, long>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    line = chomp(line);
    if (is_blank(line)) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 2) {
      throw FileError(path + ":" + std::to_string(lineno) + ": expected 2 fields");
    }
    rows.emplace_back(parse_int(fields[0], path, lineno),
                      parse_int(fields[1], path, lineno));
  }
  if (rows.empty()) throw FileError(path + ": no data rows");
  const long n = static_cast<long>(rows.size());
  std::vector<int> values(rows.size());
  std::vector<bool> seen(rows.size(), false);
  for (const auto& [node, value] : rows) {
    if (node < 0 || node >= n) {
      throw FileError(path + ": node id " + std::to_string(node) +
                      " outside [0," + std::to_string(n) + ")");
    }
    if (seen[node]) {
      throw FileError(path + ": duplicate row for node " + std::to_string(node));
    }
    seen[node] = true;
    values[node] = static_cast<int>(value);
  }
  return values;
}

}  // namespace

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);

  std::string line;
  int lineno = 0;
  long n = -1;
  Eigen::MatrixXd a;
  std::set<std::pair<long, long>> listed;

  while (std::getline(in, line)) {
    ++lineno;
    line = chomp(line);
    if (is_blank(line) || line[0] == '#') continue;
    std::stringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);

    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw FileError(path + ":" + std::to_string(lineno) +
                        ": expected header 'n <count>'");
      }
      n = parse_int(tokens[1], path, lineno);
      if (n <= 0) {
        throw FileError(path + ": node count must be positive");
      }
      a = Eigen::MatrixXd::Zero(n, n);
      continue;
    }

    if (tokens.size() != 3) {
      throw FileError(path + ":" + std::to_string(lineno) +
                      ": expected 'u v w'");
    }
    const long u = parse_int(tokens[0], path, lineno);
    const long v = parse_int(tokens[1], path, lineno);
    const double w = parse_double(tokens[2], path, lineno);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw FileError(path + ":" + std::to_string(lineno) + ": node id out of range");
    }
    if (u == v) {
      throw FileError(path + ":" + std::to_string(lineno) + ": self edge not allowed");
    }
    if (w < 0.0 || w > 1.0 || !std::isfinite(w)) {
      throw FileError(path + ":" + std::to_string(lineno) + ": weight outside [0,1]");
    }
    const auto key = std::minmax(u, v);
    if (!listed.insert({key.first, key.second}).second) {
      throw FileError(path + ":" + std::to_string(lineno) + ": duplicate edge " +
                      std::to_string(u) + "-" + std::to_string(v));
    }
    a(u, v) = w;
    a(v, u) = w;
  }
  if (n < 0) throw FileError(path + ": missing 'n <count>' header");
  return Graph(a);
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path);
  out << "n " << g.size() << "\n";
  char buf[64];
  const auto& a = g.adjacency();
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (a(i, j) == 0.0) continue;
      std::snprintf(buf, sizeof(buf), "%.17g", a(i, j));
      out << i << " " << j << " " << buf << "\n";
    }
  }
  if (!out) throw FileError("write failed for " + path);
}

std::vector<int> load_labels(const std::string& path) {
  auto labels = load_node_value_csv(path, "node,label");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) {
      throw FileError(path + ": negative label for node " + std::to_string(i));
    }
  }
  return labels;
}

void save_labels(const std::vector<int>& labels, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path);
  out << "node,label\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << i << "," << labels[i] << "\n";
  }
  if (!out) throw FileError("write failed for " + path);
}

SensitiveAttributes load_sensitive(const std::string& path) {
  const auto values = load_node_value_csv(path, "node,group");
  const bool all_signs = std::all_of(values.begin(), values.end(),
                                     [](int v) { return v == -1 || v == 1; });
  if (all_signs) {
    Eigen::VectorXi s(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      s[static_cast<Eigen::Index>(i)] = values[i];
    }
    return SensitiveAttributes::binary(s);
  }
  int max_group = -1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw FileError(path + ": group values must be -1/+1 or 0..m-1");
    }
    max_group = std::max(max_group, values[i]);
  }
  std::vector<Eigen::VectorXi> indicators(
      max_group + 1, Eigen::VectorXi::Zero(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    indicators[values[i]][static_cast<Eigen::Index>(i)] = 1;
  }
  // A hole in the id sequence means an empty group, which is almost
  // certainly mislabeled data rather than intent.
  for (int g = 0; g <= max_group; ++g) {
    if (indicators[g].sum() == 0) {
      throw FileError(path + ": group " + std::to_string(g) +
                      " has no members");
    }
  }
  try {
    return SensitiveAttributes::multi_level(indicators);
  } catch (const std::invalid_argument& e) {
    throw FileError(path + ": " + e.what());
  }
}

void save_sensitive(const SensitiveAttributes& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path);
  out << "node,group\n";
  for (int i = 0; i < s.size(); ++i) {
    const int value = s.is_binary() ? (s.group_of(i) == 0 ? -1 : 1) : s.group_of(i);
    out << i << "," << value << "\n";
  }
  if (!out) throw FileError("write failed for " + path);
}

}  // namespace fairsdp
