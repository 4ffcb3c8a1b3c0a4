#include "pdectl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pdectl/error.hpp"

namespace pdectl {

Ring Ring::standard(std::size_t nvars) { return Ring{nvars, default_variable_names(nvars)}; }

SpaceClass classify(SignalSpace s) {
  switch (s) {
    case SignalSpace::Dprime:
    case SignalSpace::Cinfinity:
      return SpaceClass::InjectiveCogenerator;
    case SignalSpace::Sprime:
      return SpaceClass::Injective;
    default:
      return SpaceClass::Flat;
  }
}

std::string_view name(SignalSpace s) {
  switch (s) {
    case SignalSpace::Dprime: return "Dprime";
    case SignalSpace::Cinfinity: return "Cinf";
    case SignalSpace::Sprime: return "Sprime";
    case SignalSpace::Schwartz: return "S";
    case SignalSpace::Eprime: return "Eprime";
    case SignalSpace::Dtest: return "D";
  }
  return "?";
}

std::optional<SignalSpace> parse_signal_space(std::string_view t) {
  if (t == "Dprime") return SignalSpace::Dprime;
  if (t == "Cinf" || t == "Cinfinity") return SignalSpace::Cinfinity;
  if (t == "Sprime") return SignalSpace::Sprime;
  if (t == "S" || t == "Schwartz") return SignalSpace::Schwartz;
  if (t == "Eprime") return SignalSpace::Eprime;
  if (t == "D" || t == "Dtest") return SignalSpace::Dtest;
  return std::nullopt;
}

namespace {

constexpr int kMaxExponent = 10000;

class ExprParser {
 public:
  ExprParser(std::string_view src, const Ring& ring, std::size_t line, std::size_t column)
      : src_(src), ring_(ring), line_(line), col0_(column) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == src_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (pos_ != src_.size()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
        fail("implicit multiplication is not allowed; use '*'");
      fail(std::string("unexpected '") + c + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col0_ + pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by a non-constant expression");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scaled(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) {
      pos_ = start;
      fail("malformed exponent: expected a non-negative integer");
    }
    int e = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, e);
    if (ec != std::errc() || e > kMaxExponent) {
      pos_ = start;
      fail("malformed exponent: too large");
    }
    return base.pow(static_cast<unsigned>(e));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ == src_.size()) fail("unexpected end of expression");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '.') fail("decimal literals are not supported; write a fraction");
      return Polynomial::constant(ring_.nvars, Rational(std::string(src_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      std::string_view ident = src_.substr(start, pos_ - start);
      auto var = lookup(ident);
      if (!var) {
        pos_ = start;
        fail("unknown variable '" + std::string(ident) + "'");
      }
      return Polynomial::variable(ring_.nvars, *var);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::optional<std::size_t> lookup(std::string_view ident) const {
    for (std::size_t i = 0; i < ring_.names.size(); ++i)
      if (ring_.names[i] == ident) return i;
    if (ident.size() >= 2 && (ident[0] == 'x' || ident[0] == 'd')) {
      std::size_t idx = 0;
      auto [ptr, ec] = std::from_chars(ident.data() + 1, ident.data() + ident.size(), idx);
      if (ec == std::errc() && ptr == ident.data() + ident.size() && ident[1] != '0' && idx >= 1 &&
          idx <= ring_.nvars)
        return idx - 1;
    }
    return std::nullopt;
  }

  std::string_view src_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

struct Line {
  std::size_t number;
  std::size_t indent;  // 0-based column of the first character kept
  std::string_view text;
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    std::string_view t = trim(raw, &lead);
    if (!t.empty()) out.push_back({number, lead, t});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view s, const Line& line, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(std::string("expected a non-negative integer for ") + what, line.number,
                     line.indent + static_cast<std::size_t>(s.data() - line.text.data()) + 1);
  return v;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

constexpr std::string_view kTasks[] = {"analyze", "potential", "decompose", "closure", "eliminate"};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const Ring& ring, std::size_t line, std::size_t column) {
  return ExprParser(src, ring, line, column).parse();
}

ProblemFile parse_problem(std::string_view text) {
  const auto lines = meaningful_lines(text);
  auto col_of = [](const Line& l, std::string_view part) {
    return l.indent + static_cast<std::size_t>(part.data() - l.text.data()) + 1;
  };
  if (lines.empty()) throw ParseError("empty problem file", 1, 1);

  ProblemFile pf;
  // ring header
  const Line& head = lines[0];
  auto words = split_words(head.text);
  if (words.empty() || words[0] != "ring") throw ParseError("expected 'ring n=<n> vars=...'", head.number, head.indent + 1);
  std::optional<std::size_t> n;
  std::vector<std::string> names;
  for (std::size_t w = 1; w < words.size(); ++w) {
    auto eq = words[w].find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected key=value in ring header", head.number, col_of(head, words[w]));
    std::string_view key = words[w].substr(0, eq), value = words[w].substr(eq + 1);
    if (key == "n") {
      n = parse_count(value, head, "n");
    } else if (key == "vars") {
      std::size_t s = 0;
      while (s <= value.size()) {
        std::size_t e = value.find(',', s);
        if (e == std::string_view::npos) e = value.size();
        std::string_view v = value.substr(s, e - s);
        if (!valid_name(v)) throw ParseError("bad variable name '" + std::string(v) + "'", head.number, col_of(head, v));
        if (std::find(names.begin(), names.end(), v) != names.end())
          throw ParseError("duplicate variable '" + std::string(v) + "'", head.number, col_of(head, v));
        names.emplace_back(v);
        if (e == value.size()) break;
        s = e + 1;
      }
    } else {
      throw ParseError("unknown ring key '" + std::string(key) + "'", head.number, col_of(head, words[w]));
    }
  }
  if (!n) {
    if (names.empty()) throw ParseError("ring header needs n=<n>", head.number, head.indent + 1);
    n = names.size();
  }
  if (*n == 0) throw ParseError("the ring needs at least one variable", head.number, head.indent + 1);
  if (names.empty()) names = default_variable_names(*n);
  if (names.size() != *n)
    throw ParseError("n=" + std::to_string(*n) + " but " + std::to_string(names.size()) + " variable names",
                     head.number, head.indent + 1);
  pf.ring = Ring{*n, names};

  // matrix block
  if (lines.size() < 2) throw ParseError("missing 'matrix <rows> <cols>'", head.number + 1, 1);
  const Line& mline = lines[1];
  auto mw = split_words(mline.text);
  if (mw.size() != 3 || mw[0] != "matrix")
    throw ParseError("expected 'matrix <rows> <cols>'", mline.number, mline.indent + 1);
  const std::size_t rows = parse_count(mw[1], mline, "rows");
  const std::size_t cols = parse_count(mw[2], mline, "cols");
  if (cols == 0) throw ParseError("a matrix needs at least one column", mline.number, col_of(mline, mw[2]));
  if (lines.size() < 2 + rows)
    throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 2),
                     lines.back().number + 1, 1);

  PolyMatrix m(*n, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Line& l = lines[2 + i];
    std::vector<std::string_view> cells;
    std::size_t s = 0;
    while (true) {
      std::size_t e = l.text.find(',', s);
      if (e == std::string_view::npos) {
        cells.push_back(l.text.substr(s));
        break;
      }
      cells.push_back(l.text.substr(s, e - s));
      s = e + 1;
    }
    if (cells.size() != cols)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) + " entries, expected " +
                           std::to_string(cols),
                       l.number, l.indent + 1);
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = parse_polynomial(cells[j], pf.ring, l.number, col_of(l, cells[j]));
  }
  pf.matrix = std::move(m);

  // directives
  for (std::size_t li = 2 + rows; li < lines.size(); ++li) {
    const Line& l = lines[li];
    for (auto word : split_words(l.text)) {
      auto eq = word.find('=');
      std::string_view key = word.substr(0, eq);
      if (eq == std::string_view::npos)
        throw ParseError("unexpected '" + std::string(word) + "' after the matrix", l.number, col_of(l, word));
      std::string_view value = word.substr(eq + 1);
      if (key == "space") {
        auto sp = parse_signal_space(value);
        if (!sp) throw ParseError("unknown signal space '" + std::string(value) + "'", l.number, col_of(l, value));
        pf.space = sp;
      } else if (key == "order") {
        if (value != "grevlex" && value != "lex")
          throw ParseError("unknown order '" + std::string(value) + "'", l.number, col_of(l, value));
        pf.order = std::string(value);
      } else if (key == "task") {
        if (std::find(std::begin(kTasks), std::end(kTasks), value) == std::end(kTasks))
          throw ParseError("unknown task '" + std::string(value) + "'", l.number, col_of(l, value));
        pf.task = std::string(value);
      } else {
        throw ParseError("unknown directive '" + std::string(key) + "'", l.number, col_of(l, word));
      }
    }
  }
  return pf;
}

ProblemFile parse_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string render_problem(const ProblemFile& p) {
  std::string out = "ring n=" + std::to_string(p.ring.nvars) + " vars=";
  for (std::size_t i = 0; i < p.ring.names.size(); ++i) out += (i ? "," : "") + p.ring.names[i];
  out += "\nmatrix " + std::to_string(p.matrix.rows()) + " " + std::to_string(p.matrix.cols()) + "\n";
  for (std::size_t i = 0; i < p.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < p.matrix.cols(); ++j) {
      if (j) out += ", ";
      out += p.matrix.at(i, j).to_string(p.ring.names);
    }
    out += "\n";
  }
  if (p.space) out += "space=" + std::string(name(*p.space)) + "\n";
  if (p.order) out += "order=" + *p.order + "\n";
  if (p.task) out += "task=" + *p.task + "\n";
  return out;
}

}  // namespace pdectl
