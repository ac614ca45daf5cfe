#include "splitegh/problem.hpp"

#include <cctype>
#include <charconv>

#include "splitegh/errors.hpp"

namespace splitegh {

namespace {

class LineParser {
 public:
  LineParser(std::string_view text, int line, int n, Field field, int column_offset = 0)
      : text_(text), line_(line), n_(n), field_(field), offset_(column_offset) {}

  Polynomial polynomial() {
    Polynomial out(n_, field_);
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Polynomial t = term();
      out += negative ? -t : t;
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      negative = peek() == '-';
      const int op_col = column();
      ++pos_;
      skip_space();
      if (peek() == '\0' || peek() == ')') fail(std::string("expected a term after '") + (negative ? '-' : '+') + "'", op_col);
    }
    return out;
  }

  std::vector<Polynomial> factored() {
    std::vector<Polynomial> out;
    for (;;) {
      skip_space();
      expect('(');
      const int start = column();
      Polynomial q = polynomial();
      skip_space();
      expect(')');
      if (!q.is_linear_form()) fail("factor " + q.to_string() + " is not a nonzero linear form", start);
      out.push_back(std::move(q));
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    return out;
  }

  void finish() {
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  [[noreturn]] void fail(const std::string& what, int col = -1) const {
    throw ParseError(what, line_, col < 0 ? column() : col);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  int column() const { return offset_ + static_cast<int>(pos_) + 1; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      if (peek() == '\0') fail(std::string("expected '") + c + "' at end of line");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
    ++pos_;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(peek() == '\0' ? "expected a number at end of line" : std::string("expected a number, found '") + peek() + "'");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    const int col = (skip_space(), column());
    std::string s = digits();
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("number " + s + " is too large", col);
    return v;
  }

  // x<index>(^<exp>)?
  void factor(std::vector<int>& exps) {
    skip_space();
    const int col = column();
    if (peek() != 'x') {
      if (peek() == '\0') fail("expected a term at end of line");
      fail(std::string("expected a variable, found '") + peek() + "'");
    }
    ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index after 'x'");
    const int idx = small_int();
    if (idx < 1 || idx > n_) fail("variable x" + std::to_string(idx) + " is outside x1..x" + std::to_string(n_), col);
    int e = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      e = small_int();
    }
    exps[static_cast<std::size_t>(idx - 1)] += e;
  }

  Polynomial term() {
    skip_space();
    Scalar coeff = Scalar::one(field_);
    std::vector<int> exps(static_cast<std::size_t>(n_), 0);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int col = column();
      mpq_class value(digits());
      skip_space();
      if (peek() == '/') {
        ++pos_;
        mpz_class den(digits());
        if (den == 0) fail("zero denominator", col);
        value /= den;
      }
      try {
        coeff = Scalar(field_, value);
      } catch (const ArgumentError& e) {
        fail(e.what(), col);
      }
      skip_space();
      if (peek() != '*') return Polynomial(Monomial(exps), coeff);
      ++pos_;
    }
    factor(exps);
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      factor(exps);
    }
    return Polynomial(Monomial(exps), coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int n_;
  Field field_;
  int offset_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int leading_space(std::string_view s) {
  int k = 0;
  while (k < static_cast<int>(s.size()) && std::isspace(static_cast<unsigned char>(s[static_cast<std::size_t>(k)]))) ++k;
  return k;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n, Field field) {
  LineParser p(text, 1, n, field);
  Polynomial f = p.polynomial();
  p.finish();
  return f;
}

std::vector<Polynomial> parse_factored(std::string_view text, int n, Field field) {
  LineParser p(text, 1, n, field);
  auto fs = p.factored();
  p.finish();
  return fs;
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  enum class Section { header, ideal, sequence } section = Section::header;
  bool have_field = false;
  int line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    const int indent = leading_space(raw);

    if (line == "ideal:" || line == "sequence:") {
      if (out.num_vars == 0) throw ParseError("'vars:' must come before any section", line_no, indent + 1);
      section = line == "ideal:" ? Section::ideal : Section::sequence;
      continue;
    }

    if (section == Section::header) {
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("expected 'key: value' or a section header", line_no, indent + 1);
      const std::string_view key = trim(line.substr(0, colon));
      const std::string_view value = trim(line.substr(colon + 1));
      const int value_col = indent + static_cast<int>(colon) + 2 + leading_space(line.substr(colon + 1));
      if (key == "vars") {
        if (out.num_vars != 0) throw ParseError("'vars' given twice", line_no, indent + 1);
        int n = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc() || ptr != value.data() + value.size() || n < 1)
          throw ParseError("'vars' needs a positive integer", line_no, value_col);
        out.num_vars = n;
      } else if (key == "field") {
        if (have_field) throw ParseError("'field' given twice", line_no, indent + 1);
        have_field = true;
        if (value == "rationals") {
          out.field = Field::rationals();
        } else if (value.substr(0, 6) == "prime ") {
          const std::string_view num = trim(value.substr(6));
          std::uint64_t p = 0;
          auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
          if (ec != std::errc() || ptr != num.data() + num.size())
            throw ParseError("'field: prime' needs an integer", line_no, value_col);
          try {
            out.field = Field::prime(p);
          } catch (const ArgumentError& e) {
            throw ParseError(e.what(), line_no, value_col);
          }
        } else {
          throw ParseError("field must be 'rationals' or 'prime <p>'", line_no, value_col);
        }
      } else if (key == "powers") {
        if (out.powers) throw ParseError("'powers' given twice", line_no, indent + 1);
        std::vector<int> powers;
        std::string_view rest = value;
        int col = value_col;
        for (;;) {
          const std::size_t comma = rest.find(',');
          std::string_view item = rest.substr(0, comma);
          const int item_col = col + leading_space(item);
          item = trim(item);
          int a = 0;
          auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), a);
          if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || a < 1)
            throw ParseError("powers must be positive integers", line_no, item_col);
          powers.push_back(a);
          if (comma == std::string_view::npos) break;
          col += static_cast<int>(comma) + 1;
          rest.remove_prefix(comma + 1);
        }
        out.powers = std::move(powers);
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'", line_no, indent + 1);
      }
      continue;
    }

    LineParser p(line, line_no, out.num_vars, out.field, indent);
    if (section == Section::ideal) {
      Polynomial f = p.polynomial();
      p.finish();
      if (f.is_zero()) p.fail("generator is zero", indent + 1);
      if (!f.homogeneous_degree()) p.fail("generator " + f.to_string() + " is not homogeneous", indent + 1);
      out.ideal.push_back(std::move(f));
    } else {
      auto fs = p.factored();
      p.finish();
      out.sequence.push_back(std::move(fs));
    }
  }
  if (out.num_vars == 0) throw ParseError("missing 'vars:'", line_no + 1, 1);
  if (out.powers && static_cast<int>(out.powers->size()) != out.num_vars)
    throw ParseError("'powers' needs one entry per variable", 1, 1);
  return out;
}

std::string serialize_problem(const ProblemFile& problem) {
  std::string s = "vars: " + std::to_string(problem.num_vars) + "\n";
  s += "field: " + problem.field.to_string() + "\n";
  if (problem.powers) {
    s += "powers: ";
    for (std::size_t i = 0; i < problem.powers->size(); ++i) s += (i ? "," : "") + std::to_string((*problem.powers)[i]);
    s += "\n";
  }
  if (!problem.ideal.empty()) {
    s += "ideal:\n";
    for (const auto& f : problem.ideal) s += f.to_string() + "\n";
  }
  if (!problem.sequence.empty()) {
    s += "sequence:\n";
    for (const auto& fs : problem.sequence) {
      for (std::size_t k = 0; k < fs.size(); ++k) s += (k ? "*(" : "(") + fs[k].to_string() + ")";
      s += "\n";
    }
  }
  return s;
}

}  // namespace splitegh
