#include "bvalg/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace bvalg {

std::string Diagnostic::str() const {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& ds) {
  std::string s;
  for (const auto& d : ds)
    s += (s.empty() ? "" : "\n") + d.str();
  return s;
}

} // namespace

ParseError::ParseError(std::vector<Diagnostic> ds) : std::runtime_error(join_messages(ds)), diagnostics(std::move(ds)) {}

namespace {

/// Thrown inside a single line; converted into a Diagnostic by the caller.
struct LineError {
  int column;
  std::string message;
};

bool is_id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Cursor {
public:
  Cursor(std::string_view text, int base_column = 1) : text_(text), base_(base_column) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  int column() const { return base_ + static_cast<int>(pos_); }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w)
      return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && is_id_char(text_[end]))
      return false;
    pos_ = end;
    return true;
  }
  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !is_id_start(text_[pos_]))
      fail("expected an identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_id_char(text_[pos_]))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  /// A decimal integer, optionally signed.
  long integer(bool allow_sign) {
    skip_space();
    std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    std::string_view tok = text_.substr(start, pos_ - start);
    if (tok.front() == '+')
      tok.remove_prefix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || std::abs(v) > (1L << 30)) {
      pos_ = start;
      fail("malformed number '" + std::string(text_.substr(start, digits - start)) +
           std::string(text_.substr(digits, pos_ - digits)) + "'");
    }
    return v;
  }
  std::string_view rest() {
    skip_space();
    return text_.substr(pos_);
  }
  std::size_t position() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }
  std::string_view text() const { return text_; }

  [[noreturn]] void fail(std::string message) { throw LineError{column(), std::move(message)}; }
  [[noreturn]] void fail_at(int col, std::string message) { throw LineError{col, std::move(message)}; }

private:
  std::string_view text_;
  int base_;
  std::size_t pos_ = 0;
};

Scalar parse_number(Cursor& c, const FieldSpec& field) {
  c.skip_space();
  int col = c.column();
  std::size_t start = c.position();
  std::string_view t = c.text();
  std::size_t p = start;
  while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p])))
    ++p;
  std::string num(t.substr(start, p - start));
  std::string den = "1";
  if (p < t.size() && t[p] == '/') {
    std::size_t q = p + 1;
    while (q < t.size() && std::isdigit(static_cast<unsigned char>(t[q])))
      ++q;
    den = std::string(t.substr(p + 1, q - p - 1));
    std::string token(t.substr(start, q - start));
    if (den.empty())
      c.fail_at(col, "malformed number '" + token + "'");
    p = q;
  }
  if (p < t.size() && (is_id_char(t[p]) || t[p] == '.' || t[p] == '/'))
    c.fail_at(col, "malformed number '" + std::string(t.substr(start, p - start + 1)) + "'");
  c.seek(p);
  try {
    return Scalar::fraction(field, mpz_class(num), mpz_class(den));
  } catch (const FieldError&) {
    c.fail_at(col, "malformed number '" + num + "/" + den + "'");
  }
}

Element parse_term(Cursor& c, const FreeAlgebra& alg) {
  Element acc = alg.one();
  do {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      acc *= parse_number(c, alg.field());
    } else if (is_id_start(ch)) {
      int col = c.column();
      std::string id = c.identifier();
      auto g = alg.find(id);
      if (!g)
        c.fail_at(col, "undeclared symbol '" + id + "'");
      long exponent = 1;
      if (c.accept('^')) {
        int ecol = c.column();
        exponent = c.integer(false);
        if (exponent < 1)
          c.fail_at(ecol, "exponent must be >= 1");
      }
      Element letter = Element::term(alg.letter_monomial(*g), alg.scalar(1));
      for (long i = 0; i < exponent; ++i)
        acc = alg.multiply(acc, letter);
    } else {
      c.fail(ch == '\0' ? "unexpected end of expression" : std::string("unexpected '") + ch + "'");
    }
  } while (c.accept('*'));
  return acc;
}

Element parse_expression(Cursor& c, const FreeAlgebra& alg) {
  Element acc = alg.zero();
  bool negative = false;
  if (c.accept('-'))
    negative = true;
  else
    c.accept('+');
  while (true) {
    Element t = parse_term(c, alg);
    acc += negative ? -t : t;
    if (c.accept('+'))
      negative = false;
    else if (c.accept('-'))
      negative = true;
    else
      break;
  }
  if (!c.at_end())
    c.fail(std::string("unexpected '") + c.peek() + "'");
  return acc;
}

struct Line {
  int number;
  std::string text;
};

std::string strip_comment(const std::string& s) {
  auto pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

} // namespace

Element parse_element(std::string_view text, const FreeAlgebra& algebra) {
  Cursor c(text);
  try {
    if (c.at_end())
      c.fail("empty expression");
    return parse_expression(c, algebra);
  } catch (const LineError& e) {
    throw ParseError({{1, e.column, e.message}});
  }
}

PresentationSource parse_presentation(std::string_view text) {
  std::vector<Line> lines;
  {
    std::string all(text);
    std::istringstream in(all);
    std::string s;
    int n = 0;
    while (std::getline(in, s))
      lines.push_back({++n, strip_comment(s)});
  }

  PresentationSource p;
  std::vector<Diagnostic> diags;
  auto record = [&](int line, const LineError& e) { diags.push_back({line, e.column, e.message}); };

  // First pass: header lines and declarations.
  bool seen_field = false, seen_shift = false, seen_truncate = false;
  std::set<std::string> ids;
  std::vector<const Line*> body;
  for (const auto& line : lines) {
    Cursor c(line.text);
    if (c.at_end())
      continue;
    try {
      int kw = c.column();
      if (c.accept_word("field")) {
        if (seen_field)
          c.fail_at(kw, "duplicate field line");
        seen_field = true;
        int col = c.column();
        std::string name(c.rest());
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
          name.pop_back();
        try {
          p.field = FieldSpec::parse(name);
        } catch (const FieldError& e) {
          c.fail_at(col, e.what());
        }
      } else if (c.accept_word("shift")) {
        if (seen_shift)
          c.fail_at(kw, "duplicate shift line");
        seen_shift = true;
        if (!c.accept_word("n"))
          c.fail("expected 'n='");
        c.expect('=');
        p.shift = static_cast<int>(c.integer(true));
        if (!c.at_end())
          c.fail("unexpected text after shift");
      } else if (c.accept_word("gen")) {
        int idcol = c.column();
        std::string id = c.identifier();
        c.expect(':');
        int dcol = c.column();
        long d = c.integer(true);
        if (d < 0)
          c.fail_at(dcol, "degree must be ≥ 0");
        if (!c.at_end())
          c.fail("unexpected text after degree");
        if (!ids.insert(id).second)
          c.fail_at(idcol, "duplicate generator '" + id + "'");
        p.generators.push_back({id, static_cast<int>(d)});
      } else if (c.accept_word("truncate")) {
        if (seen_truncate)
          c.fail_at(kw, "duplicate truncate line");
        seen_truncate = true;
        int dcol = c.column();
        long d = c.integer(true);
        if (d < 0)
          c.fail_at(dcol, "truncation degree must be ≥ 0");
        if (!c.at_end())
          c.fail("unexpected text after truncation degree");
        p.truncate = static_cast<int>(d);
      } else if (c.accept_word("bracket") || c.accept_word("diff") || c.accept_word("bv")) {
        body.push_back(&line);
      } else {
        c.fail("unknown statement");
      }
    } catch (const LineError& e) {
      record(line.number, e);
    }
  }

  bool bv_mode = false;
  for (const Line* line : body) {
    Cursor c(line->text);
    if (c.accept_word("bv"))
      bv_mode = true;
  }

  const FreeAlgebra alg = p.algebra();
  const int k = p.shift - 1;
  auto degree_of = [&](const std::string& id) { return alg.generator_degree(*alg.find(id)); };
  auto declared = [&](Cursor& c, int col, const std::string& id) {
    if (!alg.find(id))
      c.fail_at(col, "undeclared symbol '" + id + "'");
  };
  // Second pass: values, checked against declared degrees.
  auto check_value = [&](Cursor& c, int col, const Element& v, int expected, const std::string& what,
                         bool linear) {
    for (const auto& [m, coeff] : v.terms()) {
      if (linear && m.wordlength() != 1)
        c.fail_at(col, what + " value must be a linear combination of generators");
      if (m.degree() != expected)
        c.fail_at(col, what + " degree " + std::to_string(expected) + " expected, got " + std::to_string(m.degree()));
    }
  };
  std::set<std::pair<std::string, std::string>> bracket_pairs;
  std::set<std::string> diff_ids, bv_ids;
  for (const Line* line : body) {
    Cursor c(line->text);
    try {
      int kw = c.column();
      if (c.accept_word("bracket")) {
        c.expect('[');
        int xcol = c.column();
        std::string x = c.identifier();
        declared(c, xcol, x);
        c.expect(',');
        int ycol = c.column();
        std::string y = c.identifier();
        declared(c, ycol, y);
        c.expect(']');
        c.expect('=');
        if (c.at_end())
          c.fail("missing value");
        int vcol = c.column();
        Element v = parse_expression(c, alg);
        int expected = degree_of(x) + degree_of(y) + (bv_mode ? k : 0);
        check_value(c, vcol, v, expected, "bracket", !bv_mode);
        if (bracket_pairs.count({x, y}) || bracket_pairs.count({y, x}))
          c.fail_at(kw, "duplicate bracket [" + x + "," + y + "]");
        bracket_pairs.insert({x, y});
        p.brackets.push_back({x, y, v});
      } else if (c.accept_word("diff")) {
        if (bv_mode)
          c.fail_at(kw, "diff lines are not allowed in a file with bv lines");
        if (!c.accept_word("d"))
          c.fail("expected 'd'");
        int xcol = c.column();
        std::string x = c.identifier();
        declared(c, xcol, x);
        c.expect('=');
        if (c.at_end())
          c.fail("missing value");
        int vcol = c.column();
        Element v = parse_expression(c, alg);
        check_value(c, vcol, v, degree_of(x) + k, "differential", true);
        if (!diff_ids.insert(x).second)
          c.fail_at(kw, "duplicate differential of '" + x + "'");
        p.differentials.push_back({x, v});
      } else if (c.accept_word("bv")) {
        int xcol = c.column();
        std::string x = c.identifier();
        declared(c, xcol, x);
        c.expect('=');
        if (c.at_end())
          c.fail("missing value");
        int vcol = c.column();
        Element v = parse_expression(c, alg);
        check_value(c, vcol, v, degree_of(x) + k, "bv", false);
        if (!bv_ids.insert(x).second)
          c.fail_at(kw, "duplicate bv of '" + x + "'");
        p.bv.push_back({x, v});
      }
    } catch (const LineError& e) {
      record(line->number, e);
    }
  }
  if (!diags.empty()) {
    std::stable_sort(diags.begin(), diags.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
    throw ParseError(std::move(diags));
  }
  return p;
}

std::string render_presentation(const PresentationSource& p) {
  const FreeAlgebra alg = p.algebra();
  std::ostringstream os;
  os << "field " << p.field.name() << '\n';
  os << "shift n=" << p.shift << '\n';
  for (const auto& g : p.generators)
    os << "gen " << g.id << " : " << g.degree << '\n';
  for (const auto& b : p.brackets)
    os << "bracket [" << b.x << ',' << b.y << "] = " << alg.render(b.value) << '\n';
  for (const auto& d : p.differentials)
    os << "diff d " << d.x << " = " << alg.render(d.value) << '\n';
  for (const auto& b : p.bv)
    os << "bv " << b.x << " = " << alg.render(b.value) << '\n';
  if (p.truncate)
    os << "truncate " << *p.truncate << '\n';
  return os.str();
}

LiePresentation to_lie_presentation(const PresentationSource& p) {
  if (p.bv_mode())
    throw AlgebraError("presentation gives BV values directly, not a Lie algebra");
  const FreeAlgebra alg = p.algebra();
  LiePresentation lie(p.field, p.shift, p.generators);
  auto to_vector = [&](const Element& e) {
    LieVector v;
    for (const auto& [m, c] : e.terms())
      v.emplace(*lie.find(alg.generator(m.factors().front().gen).id), c);
    return v;
  };
  for (const auto& b : p.brackets)
    lie.set_bracket(*lie.find(b.x), *lie.find(b.y), to_vector(b.value));
  for (const auto& d : p.differentials)
    lie.set_differential(*lie.find(d.x), to_vector(d.value));
  return lie;
}

BVStructure to_structure(const PresentationSource& p, int fallback_max_degree) {
  const int D = p.max_degree(fallback_max_degree);
  if (!p.bv_mode())
    return BVStructure::free(to_lie_presentation(p), D);
  FreeAlgebra alg = p.algebra().with_max_degree(D);
  BVStructure s = BVStructure::user(alg, p.shift, MissingEntries::Undefined);
  for (const auto& b : p.brackets)
    s.set_bracket(*alg.find(b.x), *alg.find(b.y), b.value);
  for (const auto& b : p.bv)
    s.set_bv(*alg.find(b.x), b.value);
  return s;
}

} // namespace bvalg
