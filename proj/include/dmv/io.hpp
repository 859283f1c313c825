#ifndef DMV_IO_HPP
#define DMV_IO_HPP

#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmv/canonical.hpp"
#include "dmv/error.hpp"
#include "dmv/framed_graph.hpp"
#include "dmv/moves.hpp"
#include "dmv/ribbon.hpp"
#include "dmv/set_system.hpp"

namespace dmv {

namespace detail {

struct Line {
  int number;
  std::string text;
};

// Non-blank lines that are not `#` comments, with trailing whitespace cut.
inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    out.push_back({number, text.substr(first)});
  }
  return out;
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view s, int line, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end || v < 0) {
    throw ParseError(line, "expected a nonnegative integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  }
  return v;
}

// Parses `<key>=<int>` exactly.
inline int parse_assignment(std::string_view word, std::string_view key, int line) {
  const std::string prefix = std::string(key) + "=";
  if (word.substr(0, prefix.size()) != prefix) {
    throw ParseError(line, "expected '" + prefix + "<int>', got '" + std::string(word) + "'");
  }
  return parse_int(word.substr(prefix.size()), line, key);
}

inline const Line& require_line(const std::vector<Line>& lines, std::size_t i, std::string_view what) {
  if (i >= lines.size()) {
    const int last = lines.empty() ? 0 : lines.back().number;
    throw ParseError(last + 1, "unexpected end of input, expected " + std::string(what));
  }
  return lines[i];
}

inline void require_end(const std::vector<Line>& lines, std::size_t i) {
  if (i < lines.size()) throw ParseError(lines[i].number, "unexpected trailing content '" + lines[i].text + "'");
}

inline std::string hex(Mask m) {
  std::ostringstream os;
  os << "0x" << std::hex << m;
  return os.str();
}

inline Mask parse_hex_mask(std::string_view word, int line) {
  if (word.size() < 3 || word.substr(0, 2) != "0x") {
    throw ParseError(line, "mask '" + std::string(word) + "' must be 0x-prefixed hex");
  }
  const std::string_view digits = word.substr(2);
  for (char c : digits) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) {
      throw ParseError(line, "mask '" + std::string(word) + "' must use lowercase hex digits");
    }
  }
  if (digits.size() > 1 && digits[0] == '0') throw ParseError(line, "mask '" + std::string(word) + "' has leading zeros");
  Mask v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, 16);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError(line, "mask '" + std::string(word) + "' is out of range");
  }
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------- set systems

[[nodiscard]] inline SetSystem read_set_system(std::istream& in) {
  const auto lines = detail::content_lines(in);
  const auto& head = detail::require_line(lines, 0, "'setsystem n=<int>'");
  const auto head_words = detail::split_words(head.text);
  if (head_words.size() != 2 || head_words[0] != "setsystem") {
    throw ParseError(head.number, "expected 'setsystem n=<int>'");
  }
  const int n = detail::parse_assignment(head_words[1], "n", head.number);
  if (n > kMaxGroundSet) throw ParseError(head.number, "ground set larger than " + std::to_string(kMaxGroundSet));

  const auto& body = detail::require_line(lines, 1, "'phi <hex> ...'");
  const auto words = detail::split_words(body.text);
  if (words.empty() || words[0] != "phi") throw ParseError(body.number, "expected 'phi <hex> ...'");
  if (words.size() == 1) throw ParseError(body.number, "feasible family is empty");
  std::vector<Mask> masks;
  for (std::size_t i = 1; i < words.size(); ++i) {
    const Mask m = detail::parse_hex_mask(words[i], body.number);
    if ((m & ~full_mask(n)) != 0) throw ParseError(body.number, "mask " + words[i] + " exceeds the ground set");
    if (!masks.empty() && m <= masks.back()) throw ParseError(body.number, "masks must be strictly increasing");
    masks.push_back(m);
  }
  detail::require_end(lines, 2);
  return SetSystem(n, std::move(masks));
}

[[nodiscard]] inline SetSystem parse_set_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_set_system(in);
}

[[nodiscard]] inline std::string format_set_system(const SetSystem& s) {
  std::string out = "setsystem n=" + std::to_string(s.size()) + "\nphi";
  for (Mask m : s.feasible()) out += " " + detail::hex(m);
  out += "\n";
  return out;
}

/// Four blocks in the order (D, D', D~, D~'), each headed by `+1` or `-1`.
[[nodiscard]] inline std::string format_four_term(const FourTermCombination& c, bool canonical = true) {
  std::string out;
  for (const auto& term : c.terms) {
    out += term.coefficient > 0 ? "+1\n" : "-1\n";
    out += format_set_system(canonical ? canonical_form(term.system).to_system() : term.system);
  }
  return out;
}

// --------------------------------------------------------------- F2 matrices

[[nodiscard]] inline MatrixF2 read_f2_matrix(std::istream& in) {
  const auto lines = detail::content_lines(in);
  const auto& head = detail::require_line(lines, 0, "'f2matrix n=<int>'");
  const auto head_words = detail::split_words(head.text);
  if (head_words.size() != 2 || head_words[0] != "f2matrix") {
    throw ParseError(head.number, "expected 'f2matrix n=<int>'");
  }
  const int n = detail::parse_assignment(head_words[1], "n", head.number);
  if (n > kMaxGroundSet) throw ParseError(head.number, "matrix larger than " + std::to_string(kMaxGroundSet));
  MatrixF2 m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = detail::require_line(lines, 1 + i, "a matrix row");
    if (static_cast<int>(row.text.size()) != n) {
      throw ParseError(row.number, "row must have exactly " + std::to_string(n) + " characters");
    }
    for (int j = 0; j < n; ++j) {
      const char c = row.text[j];
      if (c != '0' && c != '1') throw ParseError(row.number, "matrix entries must be 0 or 1");
      m.set(i, j, c == '1');
    }
  }
  detail::require_end(lines, 1 + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (m.get(i, j) != m.get(j, i)) {
        throw ParseError(lines[1 + i].number, "matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return m;
}

[[nodiscard]] inline FramedGraph read_framed_graph(std::istream& in) { return FramedGraph(read_f2_matrix(in)); }

[[nodiscard]] inline FramedGraph parse_framed_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_framed_graph(in);
}

[[nodiscard]] inline std::string format_f2_matrix(const MatrixF2& m) {
  std::string out = "f2matrix n=" + std::to_string(m.rows()) + "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out += m.get(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

// ------------------------------------------------------------- ribbon graphs

[[nodiscard]] inline RibbonGraph read_ribbon(std::istream& in) {
  const auto lines = detail::content_lines(in);
  const auto& head = detail::require_line(lines, 0, "'ribbon v=<int> e=<int>'");
  const auto head_words = detail::split_words(head.text);
  if (head_words.size() != 3 || head_words[0] != "ribbon") {
    throw ParseError(head.number, "expected 'ribbon v=<int> e=<int>'");
  }
  const int v = detail::parse_assignment(head_words[1], "v", head.number);
  const int e = detail::parse_assignment(head_words[2], "e", head.number);
  if (e > kMaxGroundSet) throw ParseError(head.number, "more than " + std::to_string(kMaxGroundSet) + " edges");

  auto split_label = [](const detail::Line& line, char tag, int index) {
    const auto colon = line.text.find(':');
    const std::string expected = std::string(1, tag) + " " + std::to_string(index);
    if (colon == std::string::npos || line.text.substr(0, colon) != expected) {
      throw ParseError(line.number, "expected '" + expected + ":'");
    }
    return line.text.substr(colon + 1);
  };

  std::vector<std::vector<int>> rotations(v);
  for (int i = 0; i < v; ++i) {
    const auto& line = detail::require_line(lines, 1 + i, "a vertex line");
    for (const auto& w : detail::split_words(split_label(line, 'v', i))) {
      rotations[i].push_back(detail::parse_int(w, line.number, "half-edge"));
    }
  }
  std::vector<RibbonEdge> edges;
  for (int j = 0; j < e; ++j) {
    const auto& line = detail::require_line(lines, 1 + v + j, "an edge line");
    const auto words = detail::split_words(split_label(line, 'e', j));
    if (words.size() != 2 || words[0].size() < 5 || words[0].front() != '(' || words[0].back() != ')') {
      throw ParseError(line.number, "expected '(<h>,<h'>) <+|->'");
    }
    const std::string inner = words[0].substr(1, words[0].size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError(line.number, "expected '(<h>,<h'>)'");
    RibbonEdge edge{detail::parse_int(inner.substr(0, comma), line.number, "half-edge"),
                    detail::parse_int(inner.substr(comma + 1), line.number, "half-edge"), Sign::Plus};
    if (words[1] == "-") {
      edge.sign = Sign::Minus;
    } else if (words[1] != "+") {
      throw ParseError(line.number, "edge sign must be + or -");
    }
    edges.push_back(edge);
  }
  detail::require_end(lines, 1 + v + e);
  try {
    return RibbonGraph(std::move(rotations), std::move(edges));
  } catch (const Error& err) {
    throw ParseError(head.number, err.what());
  }
}

[[nodiscard]] inline RibbonGraph parse_ribbon(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_ribbon(in);
}

[[nodiscard]] inline std::string format_ribbon(const RibbonGraph& r) {
  std::string out = "ribbon v=" + std::to_string(r.vertex_count()) + " e=" + std::to_string(r.edge_count()) + "\n";
  for (int v = 0; v < r.vertex_count(); ++v) {
    out += "v " + std::to_string(v) + ":";
    for (int h : r.rotation(v)) out += " " + std::to_string(h);
    out += "\n";
  }
  for (int e = 0; e < r.edge_count(); ++e) {
    const auto& edge = r.edge(e);
    out += "e " + std::to_string(e) + ": (" + std::to_string(edge.first) + "," + std::to_string(edge.second) + ") " +
           (edge.sign == Sign::Plus ? "+" : "-") + "\n";
  }
  return out;
}

// ----------------------------------------------------------- chord diagrams

/// A chord diagram together with the text labels of its chords; chord i is
/// the i-th label to appear in the word.
struct LabeledChords {
  ChordDiagram diagram;
  std::vector<std::string> names;
};

[[nodiscard]] inline LabeledChords read_chords(std::istream& in) {
  const auto lines = detail::content_lines(in);
  const auto& head = detail::require_line(lines, 0, "'chords: ...'");
  if (head.text.substr(0, 7) != "chords:") throw ParseError(head.number, "expected 'chords: <labels>'");

  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<int> word;
  for (const auto& w : detail::split_words(std::string_view(head.text).substr(7))) {
    auto [it, inserted] = index.emplace(w, static_cast<int>(names.size()));
    if (inserted) names.push_back(w);
    word.push_back(it->second);
  }
  std::vector<int> seen(names.size(), 0);
  for (int c : word) ++seen[c];
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (seen[c] != 2) throw ParseError(head.number, "chord '" + names[c] + "' must appear exactly twice");
  }
  if (names.size() > static_cast<std::size_t>(kMaxGroundSet)) throw ParseError(head.number, "too many chords");

  std::vector<Sign> signs(names.size(), Sign::Plus);
  std::size_t next = 1;
  if (next < lines.size() && lines[next].text.substr(0, 6) == "signs:") {
    const auto& line = lines[next++];
    std::vector<bool> given(names.size(), false);
    for (const auto& w : detail::split_words(std::string_view(line.text).substr(6))) {
      const auto eq = w.find('=');
      if (eq == std::string::npos || eq + 2 != w.size() || (w.back() != '+' && w.back() != '-')) {
        throw ParseError(line.number, "expected '<label>=<+|->', got '" + w + "'");
      }
      auto it = index.find(w.substr(0, eq));
      if (it == index.end()) throw ParseError(line.number, "unknown chord '" + w.substr(0, eq) + "'");
      if (given[it->second]) throw ParseError(line.number, "sign of '" + it->first + "' given twice");
      given[it->second] = true;
      signs[it->second] = w.back() == '+' ? Sign::Plus : Sign::Minus;
    }
  }
  detail::require_end(lines, next);
  return LabeledChords{ChordDiagram(std::move(word), std::move(signs)), std::move(names)};
}

[[nodiscard]] inline LabeledChords parse_chords(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_chords(in);
}

[[nodiscard]] inline std::string format_chords(const LabeledChords& c) {
  std::string out = "chords:";
  for (int label : c.diagram.word()) out += " " + c.names.at(label);
  out += "\nsigns:";
  for (int i = 0; i < c.diagram.chord_count(); ++i) {
    out += " " + c.names.at(i) + "=" + (c.diagram.sign(i) == Sign::Plus ? "+" : "-");
  }
  out += "\n";
  return out;
}

}  // namespace dmv

#endif  // DMV_IO_HPP
