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

#include "dm/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace dm {
namespace {

constexpr std::string_view kElements = "elements:";
constexpr std::string_view kFeasible = "feasible:";

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool valid_label(std::string_view label) {
  return label.find_first_of(":,{}") == std::string_view::npos;
}

}  // namespace

DeltaMatroid parse(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<ElementSet> family;
  std::map<ElementSet, int> line_of;  // feasible set -> defining line
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with(kElements)) {
      if (ground) throw ParseError(line_no, "duplicate 'elements:' line");
      auto labels = split_words(line.substr(kElements.size()));
      for (const auto& label : labels) {
        if (!valid_label(label)) {
          throw ParseError(line_no, "invalid element label '" + label + "'");
        }
      }
      try {
        ground = GroundSet(std::move(labels));
      } catch (const InvalidArgument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (line.starts_with(kFeasible)) {
      if (!ground) throw ParseError(line_no, "'feasible:' before 'elements:'");
      ElementSet set;
      for (const auto& label : split_words(line.substr(kFeasible.size()))) {
        const auto index = ground->find(label);
        if (!index)
          throw ParseError(line_no, "unknown element '" + label + "'");
        if (set.contains(*index)) {
          throw ParseError(line_no, "element '" + label + "' repeated");
        }
        set = set.with(*index);
      }
      const auto [it, inserted] = line_of.emplace(set, line_no);
      if (!inserted) {
        throw ParseError(line_no, "duplicate feasible set " +
                                      ground->format(set) + " (first on line " +
                                      std::to_string(it->second) + ")");
      }
      family.push_back(set);
    } else {
      throw ParseError(line_no, "expected 'elements:' or 'feasible:'");
    }
  }
  if (!ground) throw ParseError(line_no, "missing 'elements:' line");
  if (family.empty()) throw ParseError(line_no, "no feasible sets");
  try {
    return DeltaMatroid::validate(*ground, std::move(family));
  } catch (const AxiomViolation& e) {
    const auto& w = e.witness();
    throw ParseError(line_of.at(w.x),
                     "symmetric exchange fails: X=" + ground->format(w.x) +
                         " (line " + std::to_string(line_of.at(w.x)) +
                         ") Y=" + ground->format(w.y) + " (line " +
                         std::to_string(line_of.at(w.y)) +
                         ") u=" + ground->label(w.u));
  }
}

std::string serialize(const DeltaMatroid& d) {
  std::string out(kElements);
  for (const auto& label : d.ground().labels()) out += " " + label;
  out += '\n';
  for (ElementSet f : d.feasible()) {
    out += kFeasible;
    if (!f.empty()) out += " " + d.ground().join(f, " ");
    out += '\n';
  }
  return out;
}

DeltaMatroid load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

}  // namespace dm
