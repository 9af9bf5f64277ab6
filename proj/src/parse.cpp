#include "newton/parse.hpp"

#include <cctype>
#include <sstream>

#include "newton/errors.hpp"

namespace newton {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Scanner {
  const std::string& text;
  size_t pos = 0;
  int line;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eof() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line, msg + " at column " + std::to_string(pos + 1) +
                               " of '" + text + "'");
  }

  long read_integer() {
    skip_space();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start || !std::isdigit((unsigned char)text[pos - 1]))
      fail("expected an integer");
    return std::stol(text.substr(start, pos - start));
  }

  Rational read_rational() {
    long num = read_integer();
    if (peek() == '/') {
      ++pos;
      long den = read_integer();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }
};

}  // namespace

LocalElement parse_polynomial(const std::string& text,
                              const std::vector<std::string>& vars,
                              int line_no) {
  int dim = (int)vars.size();
  auto var_index = [&](char c) -> int {
    for (int i = 0; i < dim; ++i)
      if (vars[i].size() == 1 && vars[i][0] == c) return i;
    return -1;
  };

  LocalElement out(dim);
  Scanner sc{text, 0, line_no};
  bool first = true;
  while (!sc.eof()) {
    // sign
    Rational coeff = 1;
    char c = sc.peek();
    if (c == '+') {
      ++sc.pos;
    } else if (c == '-') {
      coeff = -1;
      ++sc.pos;
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;

    // optional numeric coefficient
    c = sc.peek();
    if (std::isdigit((unsigned char)c)) coeff *= sc.read_rational();

    // factors
    Exponent e(dim, 0);
    bool any_factor = false;
    while (true) {
      c = sc.peek();
      if (c == '*') {
        ++sc.pos;
        continue;
      }
      if (std::isalpha((unsigned char)c)) {
        int vi = var_index(c);
        if (vi < 0) sc.fail(std::string("unknown variable '") + c + "'");
        ++sc.pos;
        long p = 1;
        if (sc.peek() == '^') {
          ++sc.pos;
          p = sc.read_integer();
          if (p < 0) sc.fail("negative exponent");
        }
        e[vi] += p;
        any_factor = true;
      } else if (c == '[') {
        ++sc.pos;
        for (int i = 0; i < dim; ++i) {
          long v = sc.read_integer();
          if (v < 0) sc.fail("negative exponent");
          e[i] += v;
          char sep = sc.peek();
          if (i + 1 < dim) {
            if (sep != ',') sc.fail("expected ','");
            ++sc.pos;
          }
        }
        if (sc.peek() != ']') sc.fail("expected ']'");
        ++sc.pos;
        any_factor = true;
      } else {
        break;
      }
    }
    if (!any_factor && coeff == 1 && e == Exponent(dim, 0) &&
        !std::isdigit((unsigned char)text[sc.pos > 0 ? sc.pos - 1 : 0]))
      sc.fail("empty term");
    out.add_term(e, coeff);
  }
  if (first) throw ParseError(line_no, "empty polynomial");
  return out;
}

namespace {

struct Lines {
  std::vector<std::pair<int, std::string>> content;  // line number, text

  explicit Lines(std::istream& in) {
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      raw = strip(raw);
      if (!raw.empty()) content.emplace_back(no, raw);
    }
  }
};

std::pair<std::string, std::string> split_keyword(const std::string& s) {
  size_t sp = s.find_first_of(" \t");
  if (sp == std::string::npos) return {s, ""};
  return {s.substr(0, sp), strip(s.substr(sp))};
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Parses "vars"/"gen" blocks starting at index i; returns past-the-end index.
size_t parse_ideal_block(const Lines& lines, size_t i,
                         std::vector<std::string>& vars,
                         IdealPresentation& ideal) {
  ideal.generators.clear();
  while (i < lines.content.size()) {
    auto [no, text] = lines.content[i];
    auto [kw, rest] = split_keyword(text);
    if (kw == "ideal") break;
    if (kw == "vars") {
      if (!ideal.generators.empty())
        throw ParseError(no, "'vars' must precede the generators");
      vars = split_words(rest);
      if (vars.empty()) throw ParseError(no, "'vars' needs at least one name");
      for (const std::string& v : vars)
        if (v.size() != 1 || !std::isalpha((unsigned char)v[0]))
          throw ParseError(no, "variable names must be single letters");
    } else if (kw == "gen") {
      if (vars.empty()) throw ParseError(no, "'gen' before 'vars'");
      ideal.generators.push_back(parse_polynomial(rest, vars, no));
    } else {
      throw ParseError(no, "unknown keyword '" + kw + "'");
    }
    ++i;
  }
  ideal.dim = (int)vars.size();
  if (ideal.generators.empty())
    throw ParseError(i < lines.content.size() ? lines.content[i].first : 0,
                     "ideal block has no generators");
  return i;
}

}  // namespace

IdealDocument parse_ideal_document(std::istream& in) {
  Lines lines(in);
  if (lines.content.empty()) throw ParseError(0, "empty document");
  size_t i = 0;
  if (split_keyword(lines.content[0].second).first == "ideal") ++i;
  IdealDocument doc;
  i = parse_ideal_block(lines, i, doc.vars, doc.ideal);
  if (i != lines.content.size())
    throw ParseError(lines.content[i].first,
                     "unexpected content after the ideal block");
  return doc;
}

FamilyDocument parse_family_document(std::istream& in) {
  Lines lines(in);
  if (lines.content.empty()) throw ParseError(0, "empty document");
  auto [kw, rest] = split_keyword(lines.content[0].second);
  if (kw != "family")
    throw ParseError(lines.content[0].first, "expected 'family power|prefix'");
  FamilyDocument doc;
  if (rest == "power")
    doc.kind = FamilySpec::Kind::Power;
  else if (rest == "prefix")
    doc.kind = FamilySpec::Kind::Prefix;
  else
    throw ParseError(lines.content[0].first,
                     "family kind must be 'power' or 'prefix'");

  size_t i = 1;
  while (i < lines.content.size()) {
    auto [no, text] = lines.content[i];
    auto [k, r] = split_keyword(text);
    if (k == "period") {
      try {
        doc.period = std::stoi(r);
      } catch (...) {
        throw ParseError(no, "'period' needs an integer");
      }
      ++i;
    } else if (k == "rule") {
      doc.rule = r;
      ++i;
    } else if (k == "ideal") {
      IdealPresentation ideal{0, {}};
      i = parse_ideal_block(lines, i + 1, doc.vars, ideal);
      doc.ideals.push_back(std::move(ideal));
    } else {
      throw ParseError(no, "unknown keyword '" + k + "'");
    }
  }
  if (doc.ideals.empty())
    throw ParseError(0, "family document has no ideal blocks");
  if (doc.kind == FamilySpec::Kind::Power && doc.ideals.size() != 1)
    throw ParseError(0, "a power family takes exactly one ideal block");
  return doc;
}

FamilySpec FamilyDocument::spec() const {
  if (kind == FamilySpec::Kind::Power) return FamilySpec::power(ideals[0]);
  return FamilySpec::prefix(ideals, period, rule);
}

}  // namespace newton
