// Copyright 2026 The gottype Authors
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

#include "gottype/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "gottype/error.hpp"

namespace gottype::dsl {

namespace {

struct Word {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Words of line[begin, end) with their columns.
std::vector<Word> split_words(std::string_view line, std::size_t begin, std::size_t end) {
  std::vector<Word> out;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < end && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string canonical_gate_name(std::string_view name) {
  if (name == "T†") return "Tdg";
  if (name == "S†") return "Sdg";
  return std::string(name);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class SourceParser {
 public:
  SourceParser(std::string_view text, GateLibrary library) : text_(text), library_(std::move(library)) {}

  Program run() {
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text_.size()) {
      std::size_t end = text_.find('\n', begin);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      line(text_.substr(begin, end - begin), line_no);
      begin = end + 1;
    }
    if (!circuit_) throw ParseError("missing 'qubits N' header", 1, 1);
    return Program{std::move(source_), std::move(library_), std::move(*circuit_)};
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t column) const {
    throw ParseError(msg, line_no_, column);
  }

  void line(std::string_view raw, std::size_t line_no) {
    line_no_ = line_no;
    std::size_t end = raw.find("--");
    if (end == std::string_view::npos) end = raw.size();
    const auto words = split_words(raw, 0, end);
    if (words.empty()) return;

    const std::string_view head = words[0].text;
    if (head == "qubits") return header(words);
    if (!circuit_) fail("expected 'qubits N' before anything else", words[0].column);
    if (head == "input") return input(raw, end, words);
    if (head == "def") return definition(raw, end, words[0].column);

    std::size_t seg = 0;
    while (seg <= end) {
      std::size_t semi = raw.find(';', seg);
      if (semi == std::string_view::npos || semi > end) semi = end;
      const auto stmt = split_words(raw, seg, semi);
      if (!stmt.empty()) instruction(stmt);
      seg = semi + 1;
    }
  }

  void header(const std::vector<Word>& words) {
    if (circuit_) fail("duplicate 'qubits' header", words[0].column);
    if (words.size() != 2) fail("expected 'qubits N'", words[0].column);
    const std::size_t n = number(words[1]);
    if (n == 0) fail("a circuit needs at least one qubit", words[1].column);
    source_.qubits = n;
    circuit_.emplace(n);
  }

  void input(std::string_view raw, std::size_t end, const std::vector<Word>& words) {
    if (source_.input) fail("duplicate 'input' line", words[0].column);
    if (words.size() < 2) fail("expected a type after 'input'", words[0].column);
    const std::size_t start = words[1].column - 1;
    QType type = [&] {
      try {
        return parse_qtype(raw.substr(start, end - start));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no_, start + e.column());
      }
    }();
    if (type.arity() != source_.qubits) {
      fail("input type has arity " + std::to_string(type.arity()) + " but the file declares " +
               std::to_string(source_.qubits) + " qubit(s)",
           words[1].column);
    }
    source_.input = std::move(type);
  }

  void definition(std::string_view raw, std::size_t end, std::size_t def_column) {
    const std::size_t assign = raw.find(":=");
    if (assign == std::string_view::npos || assign > end) fail("expected ':=' in gate definition", def_column);
    const auto head = split_words(raw, def_column + 2, assign);
    if (head.empty()) fail("expected a gate name after 'def'", def_column);
    GateDef def;
    def.name = std::string(head[0].text);
    if (!is_identifier(def.name)) fail("invalid gate name '" + def.name + "'", head[0].column);
    if (library_.find(def.name)) fail("gate '" + def.name + "' is already defined", head[0].column);
    for (std::size_t i = 1; i < head.size(); ++i) {
      const std::string p(head[i].text);
      if (!is_identifier(p)) fail("invalid parameter name '" + p + "'", head[i].column);
      if (std::find(def.params.begin(), def.params.end(), p) != def.params.end()) {
        fail("duplicate parameter '" + p + "'", head[i].column);
      }
      def.params.push_back(p);
    }
    if (def.params.empty()) fail("gate '" + def.name + "' needs at least one parameter", head[0].column);

    std::vector<GateApp> apps;
    std::size_t seg = assign + 2;
    while (seg <= end) {
      std::size_t semi = raw.find(';', seg);
      if (semi == std::string_view::npos || semi > end) semi = end;
      const auto stmt = split_words(raw, seg, semi);
      seg = semi + 1;
      if (stmt.empty()) continue;
      if (stmt[0].text == "MEAS") fail("measurement is not allowed inside a gate definition", stmt[0].column);
      const auto gate = lookup(stmt[0], stmt.size() - 1);
      GateCall call{gate->name, {}};
      std::vector<std::size_t> wires;
      for (std::size_t i = 1; i < stmt.size(); ++i) {
        auto it = std::find(def.params.begin(), def.params.end(), stmt[i].text);
        if (it == def.params.end()) fail("unknown parameter '" + std::string(stmt[i].text) + "'", stmt[i].column);
        const auto idx = static_cast<std::size_t>(it - def.params.begin());
        if (std::find(wires.begin(), wires.end(), idx) != wires.end()) {
          fail("parameter '" + std::string(stmt[i].text) + "' used twice", stmt[i].column);
        }
        wires.push_back(idx);
        call.wires.push_back(idx + 1);
      }
      apps.push_back({gate, std::move(wires)});
      def.body.push_back(std::move(call));
    }
    if (def.body.empty()) fail("gate '" + def.name + "' has an empty body", assign + 1);
    library_.define(def.name, def.params.size(), std::move(apps));
    source_.defs.push_back(std::move(def));
  }

  void instruction(const std::vector<Word>& stmt) {
    if (stmt[0].text == "MEAS") {
      if (stmt.size() != 2) fail("MEAS takes exactly one qubit", stmt[0].column);
      const std::size_t q = wire(stmt[1]);
      circuit_->measure(q - 1);
      source_.statements.emplace_back(MeasureCall{q});
      return;
    }
    const auto gate = lookup(stmt[0], stmt.size() - 1);
    GateCall call{gate->name, {}};
    std::vector<std::size_t> wires;
    for (std::size_t i = 1; i < stmt.size(); ++i) {
      const std::size_t w = wire(stmt[i]);
      if (std::find(call.wires.begin(), call.wires.end(), w) != call.wires.end()) {
        fail("wire " + std::to_string(w) + " used twice", stmt[i].column);
      }
      call.wires.push_back(w);
      wires.push_back(w - 1);
    }
    circuit_->add({gate, std::move(wires)});
    source_.statements.emplace_back(std::move(call));
  }

  std::shared_ptr<const GateSpec> lookup(const Word& name, std::size_t n_wires) const {
    auto gate = library_.find(canonical_gate_name(name.text));
    if (!gate) fail("unknown gate '" + std::string(name.text) + "'", name.column);
    if (gate->arity != n_wires) {
      fail(gate->name + " takes " + std::to_string(gate->arity) + " wire(s), got " + std::to_string(n_wires),
           name.column);
    }
    return gate;
  }

  std::size_t number(const Word& w) const {
    std::size_t value = 0;
    const char* first = w.text.data();
    const char* last = first + w.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail("expected a number, got '" + std::string(w.text) + "'", w.column);
    return value;
  }

  std::size_t wire(const Word& w) const {
    const std::size_t q = number(w);
    if (q < 1 || q > source_.qubits) {
      fail("wire " + std::to_string(q) + " out of range for " + std::to_string(source_.qubits) + " qubit(s)",
           w.column);
    }
    return q;
  }

  std::string_view text_;
  GateLibrary library_;
  SourceFile source_;
  std::optional<Circuit> circuit_;
  std::size_t line_no_ = 0;
};

}  // namespace

Program parse(std::string_view text, GateLibrary library) {
  return SourceParser(text, std::move(library)).run();
}

std::string print_source(const SourceFile& source) {
  std::ostringstream os;
  os << "qubits " << source.qubits << '\n';
  if (source.input) os << "input " << format(*source.input) << '\n';
  for (const auto& def : source.defs) {
    os << "def " << def.name;
    for (const auto& p : def.params) os << ' ' << p;
    os << " :=";
    for (std::size_t i = 0; i < def.body.size(); ++i) {
      os << (i ? "; " : " ") << def.body[i].gate;
      for (auto w : def.body[i].wires) os << ' ' << def.params[w - 1];
    }
    os << '\n';
  }
  for (const auto& stmt : source.statements) {
    if (const auto* m = std::get_if<MeasureCall>(&stmt)) {
      os << "MEAS " << m->qubit << '\n';
      continue;
    }
    const auto& call = std::get<GateCall>(stmt);
    os << call.gate;
    for (auto w : call.wires) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

}  // namespace gottype::dsl
