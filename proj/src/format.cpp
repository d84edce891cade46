#include "rdg/format.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace rdg {

ParseError::ParseError(int line, int column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_fields(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] != ' ') {
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ') ++j;
      out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
      if (i < line.size()) {
        if (i + 1 >= line.size()) throw ParseError(line_no, static_cast<int>(i) + 1, "trailing whitespace");
        if (line[i + 1] == ' ') throw ParseError(line_no, static_cast<int>(i) + 2, "fields must be separated by a single space");
        ++i;
      }
    } else {
      throw ParseError(line_no, static_cast<int>(i) + 1, "unexpected space");
    }
  }
  return out;
}

int to_int(const Token& t, int line_no) {
  int value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

}  // namespace

RectDiagram parse_unchecked(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto cr = lines[i].find('\r');
    if (cr != std::string_view::npos) {
      throw ParseError(static_cast<int>(i) + 1, static_cast<int>(cr) + 1, "CR characters are not allowed (LF line endings only)");
    }
  }

  if (lines.empty()) throw ParseError(1, 1, "empty input; expected 'rdg v1'");
  {
    auto f = split_fields(lines[0], 1);
    if (f.size() != 2 || f[0].text != "rdg") throw ParseError(1, 1, "expected header 'rdg v1'");
    if (f[1].text != "v1") throw ParseError(1, f[1].column, "unsupported version '" + std::string(f[1].text) + "'");
  }
  if (lines.size() < 2) throw ParseError(2, 1, "missing 'n <N>' line");
  int n = 0;
  {
    auto f = split_fields(lines[1], 2);
    if (f.empty() || f[0].text != "n") throw ParseError(2, 1, "expected 'n <N>'");
    if (f.size() != 2) throw ParseError(2, 1, "expected exactly one value after 'n'");
    n = to_int(f[1], 2);
    if (n < 1) throw ParseError(2, f[1].column, "grid size must be positive");
  }

  std::vector<HorizArc> rows;
  std::size_t li = 2;
  for (; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    if (lines[li].empty()) break;
    auto f = split_fields(lines[li], line_no);
    if (f[0].text != "row") throw ParseError(line_no, 1, "expected 'row'");
    if (f.size() != 5) throw ParseError(line_no, 1, "expected 'row <z_rank> <tail_col> <head_col> <+|->'");
    HorizArc h;
    h.z_rank = to_int(f[1], line_no);
    h.tail_col = to_int(f[2], line_no);
    h.head_col = to_int(f[3], line_no);
    if (f[4].text == "+") {
      h.sweep = Sweep::Forward;
    } else if (f[4].text == "-") {
      h.sweep = Sweep::Backward;
    } else {
      throw ParseError(line_no, f[4].column, "sweep must be '+' or '-'");
    }
    rows.push_back(h);
  }
  // Only a single terminating newline may follow the last row.
  for (; li < lines.size(); ++li) {
    if (!lines[li].empty() || li + 1 < lines.size()) {
      throw ParseError(static_cast<int>(li) + 1, 1, "unexpected content after rows");
    }
  }
  if (static_cast<int>(rows.size()) != n) {
    const int at = static_cast<int>(rows.size()) > n ? n + 3 : static_cast<int>(rows.size()) + 3;
    throw ParseError(at, 1,
                     "expected " + std::to_string(n) + " row lines, got " + std::to_string(rows.size()));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const HorizArc& a, const HorizArc& b) { return a.z_rank < b.z_rank; });
  return RectDiagram::from_rows_unchecked(n, std::move(rows));
}

RectDiagram parse(std::string_view text) {
  auto d = parse_unchecked(text);
  require_valid(d);
  return d;
}

std::string serialize(const RectDiagram& d) {
  std::string out = "rdg v1\nn " + std::to_string(d.size()) + "\n";
  for (const auto& h : d.rows()) {
    out += "row " + std::to_string(h.z_rank) + ' ' + std::to_string(h.tail_col) + ' ' +
           std::to_string(h.head_col) + ' ' + (h.forward() ? '+' : '-') + '\n';
  }
  return out;
}

}  // namespace rdg
