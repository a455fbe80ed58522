// Copyright 2026 The zxkit Authors
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

#include <charconv>
#include <optional>
#include <sstream>

#include "zxkit/diagram_json.hpp"
#include "zxkit/errors.hpp"
#include "zxkit/phase_poly.hpp"

namespace zxkit {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::optional<int> to_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

GadgetCircuit parse_gadget_circuit(std::string_view text) {
  GadgetCircuit c;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;

    if (tok[0] == "wires") {
      if (have_header) throw ParseError(line_no, "duplicate wires header");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'wires N'");
      auto n = to_int(tok[1]);
      if (!n || *n < 0) throw ParseError(line_no, "bad wire count '" + tok[1] + "'");
      c.n = *n;
      have_header = true;
      continue;
    }
    TermKind kind;
    if (tok[0] == "gadget") {
      kind = TermKind::Gadget;
    } else if (tok[0] == "andphase") {
      kind = TermKind::AndPhase;
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
    if (!have_header) throw ParseError(line_no, "term before the wires header");
    if (tok.size() < 3) throw ParseError(line_no, "term needs an angle and at least one wire");
    PhaseTerm t;
    t.kind = kind;
    try {
      t.angle = PhaseAngle::parse(tok[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    for (std::size_t i = 2; i < tok.size(); ++i) {
      auto w = to_int(tok[i]);
      if (!w || *w < 1 || *w > c.n) {
        throw ParseError(line_no, "wire '" + tok[i] + "' outside 1.." + std::to_string(c.n));
      }
      t.support.push_back(*w);
    }
    try {
      t = kind == TermKind::Gadget ? gadget_term(t.support, t.angle)
                                   : and_phase_term(t.support, t.angle);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    c.terms.push_back(std::move(t));
  }
  return c;
}

std::string format_gadget_circuit(const GadgetCircuit& c) {
  if (c.n == 0 && c.terms.empty()) return {};
  std::ostringstream os;
  os << "wires " << c.n << '\n';
  for (const auto& t : c.terms) {
    os << (t.kind == TermKind::Gadget ? "gadget " : "andphase ") << t.angle.to_string();
    for (int w : t.support) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

nlohmann::json monomials_to_json(const MonomialMap& m) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [s, a] : m.terms()) {
    nlohmann::json t = phase_to_json(a);
    t["subset"] = s;
    terms.push_back(std::move(t));
  }
  return {{"n", m.n()}, {"terms", terms}};
}

MonomialMap monomials_from_json(const nlohmann::json& j) {
  try {
    MonomialMap m(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
      m.add(t.at("subset").get<std::vector<int>>(), phase_from_json(t));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("monomial map: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("monomial map: ") + e.what());
  }
}

}  // namespace zxkit
