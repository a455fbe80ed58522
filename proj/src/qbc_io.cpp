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
#include <sstream>

#include "zxkit/errors.hpp"
#include "zxkit/qbc.hpp"

namespace zxkit {

namespace {

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<int> keyed(const std::string& tok, std::string_view key) {
  if (tok.rfind(key, 0) != 0) return std::nullopt;
  return to_int(std::string_view(tok).substr(key.size()));
}

}  // namespace

QbcCircuit parse_qbc(std::string_view text) {
  QbcCircuit c;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    // A colon may touch its neighbours: "cx 3: 1 2".
    std::string spaced;
    for (char ch : line) {
      if (ch == ':') {
        spaced += " : ";
      } else {
        spaced += ch;
      }
    }
    std::istringstream is(spaced);
    std::vector<std::string> tok;
    for (std::string t; is >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "qbc") {
      if (have_header) throw ParseError(line_no, "duplicate qbc header");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'qbc data=<n> anc=<m>'");
      auto d = keyed(tok[1], "data=");
      auto a = keyed(tok[2], "anc=");
      if (!d || !a || *d < 0 || *a < 0) {
        throw ParseError(line_no, "expected 'qbc data=<n> anc=<m>'");
      }
      if (*d + *a > 30) throw ParseError(line_no, "too many wires");
      c.n_data = *d;
      c.n_anc = *a;
      have_header = true;
      continue;
    }
    if (tok[0] != "cx") throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    if (!have_header) throw ParseError(line_no, "gate before the qbc header");
    if (tok.size() < 2) throw ParseError(line_no, "cx needs a target");
    auto t = to_int(tok[1]);
    if (!t || *t < 1 || *t > c.wires()) {
      throw ParseError(line_no, "target '" + tok[1] + "' outside 1.." + std::to_string(c.wires()));
    }
    std::size_t i = 2;
    if (tok.size() > 2) {
      if (tok[2] != ":") throw ParseError(line_no, "expected ':' after the target");
      i = 3;
    }
    std::vector<int> controls;
    for (; i < tok.size(); ++i) {
      auto w = to_int(tok[i]);
      if (!w || *w < 1 || *w > c.wires()) {
        throw ParseError(line_no, "control '" + tok[i] + "' outside 1.." + std::to_string(c.wires()));
      }
      controls.push_back(*w);
    }
    try {
      c.gates.push_back(make_gate(*t, controls));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_header) throw ParseError(0, "missing 'qbc data=<n> anc=<m>' header");
  return c;
}

std::string format_qbc(const QbcCircuit& c) {
  std::ostringstream os;
  os << "qbc data=" << c.n_data << " anc=" << c.n_anc << '\n';
  for (const auto& g : c.gates) {
    os << "cx " << g.target << " :";
    for (int w : g.controls) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

nlohmann::json qbc_to_json(const QbcCircuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates) gates.push_back({{"target", g.target}, {"controls", g.controls}});
  return {{"n_data", c.n_data}, {"n_anc", c.n_anc}, {"gates", gates}};
}

nlohmann::json soundness_to_json(const SoundnessReport& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : r.records) {
    nlohmann::json j{{"trial", rec.trial},
                     {"position", rec.position},
                     {"before", qbc_to_json(rec.before)},
                     {"after", qbc_to_json(rec.after)},
                     {"equivalent", rec.equivalent},
                     {"zx_checked", rec.zx_checked},
                     {"passed", rec.passed()}};
    if (rec.zx_checked) j["zx_equal"] = rec.zx_equal;
    if (!rec.error.empty()) j["error"] = rec.error;
    records.push_back(std::move(j));
  }
  return {{"rule", r.rule},
          {"total", r.records.size()},
          {"passed", r.passed()},
          {"failed", r.failed()},
          {"records", records}};
}

}  // namespace zxkit
