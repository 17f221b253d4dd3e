#include <cctype>
#include <sstream>

#include "exgeo/wpde/model.hpp"

namespace exgeo::wpde {

namespace {

struct Token {
  enum Kind { Ident, Number, Sym, End } kind = End;
  std::string text;
  int line = 0, col = 0;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance(size_t k) {
    for (size_t i = 0; i < k; ++i) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  Token next() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '#') {
        while (pos < src.size() && src[pos] != '\n') advance(1);
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c)) && c != '\n') {
        advance(1);
        continue;
      }
      break;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (pos >= src.size()) return t;
    char c = src[pos];
    if (c == '\n') {
      t.kind = Token::Sym;
      t.text = "\n";
      advance(1);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t s = pos;
      while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) advance(1);
      t.kind = Token::Ident;
      t.text = src.substr(s, pos - s);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t s = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) advance(1);
      if (pos + 1 < src.size() && src[pos] == '/' && std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
        advance(1);
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) advance(1);
      }
      t.kind = Token::Number;
      t.text = src.substr(s, pos - s);
      return t;
    }
    if (pos + 1 < src.size() && c == '-' && src[pos + 1] == '>') {
      t.kind = Token::Sym;
      t.text = "->";
      advance(2);
      return t;
    }
    t.kind = Token::Sym;
    t.text = std::string(1, c);
    advance(1);
    return t;
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;
  ModelSpace<RatFunc> space;
  std::vector<Equation<RatFunc>> eqs;

  explicit Parser(const std::string& text) {
    Lexer lx(text);
    while (true) {
      Token t = lx.next();
      bool end = t.kind == Token::End;
      toks.push_back(std::move(t));
      if (end) break;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = at < toks.size() ? toks[at] : toks.back();
    throw ParseError(msg, t.line, t.col);
  }
  const Token& peek() const { return toks[at]; }
  bool is_sym(const std::string& s) const { return peek().kind == Token::Sym && peek().text == s; }
  Token eat() { return toks[at++]; }
  void expect_sym(const std::string& s) {
    if (!is_sym(s)) fail("expected '" + s + "'");
    eat();
  }
  void skip_newlines() {
    while (is_sym("\n")) eat();
  }
  bool at_line_end() const { return is_sym("\n") || peek().kind == Token::End; }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < space.coord_names.size(); ++i)
      if (space.coord_names[i] == name) return static_cast<int>(i);
    for (size_t i = 0; i < space.param_names.size(); ++i)
      if (space.param_names[i] == name) return space.ncoords() + static_cast<int>(i);
    return -1;
  }
  bool is_field_name(const std::string& name) const {
    for (const auto& f : space.fields)
      if (f.name == name) return true;
    return false;
  }

  using P = Poly<RatFunc>;

  P parse_poly_factor() {
    if (is_sym("(")) {
      eat();
      P p = parse_poly_expr();
      expect_sym(")");
      return maybe_power(std::move(p));
    }
    if (peek().kind == Token::Number) {
      Rat v = parse_rat(eat().text);
      return P::constant(space.arity(), RatFunc(v));
    }
    if (peek().kind == Token::Ident) {
      int vi = var_index(peek().text);
      if (vi < 0) fail("unknown variable '" + peek().text + "'");
      eat();
      return maybe_power(P::variable(space.arity(), vi));
    }
    fail("expected a polynomial factor");
  }

  P maybe_power(P base) {
    if (is_sym("^")) {
      eat();
      if (peek().kind != Token::Number) fail("expected an integer exponent");
      Rat e = parse_rat(eat().text);
      if (e.get_den() != 1 || sgn(e) < 0) fail("exponent must be a non-negative integer");
      long n = e.get_num().get_si();
      P acc = P::constant(space.arity(), RatFunc(1));
      for (long i = 0; i < n; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  P parse_poly_term() {
    bool negate = false;
    while (is_sym("-") || is_sym("+")) {
      if (is_sym("-")) negate = !negate;
      eat();
    }
    P p = parse_poly_factor();
    while (is_sym("*")) {
      eat();
      p = p * parse_poly_factor();
    }
    if (negate) p = -p;
    return p;
  }

  P parse_poly_expr() {
    P p = parse_poly_term();
    while (is_sym("+") || is_sym("-")) {
      bool minus = is_sym("-");
      eat();
      P q = parse_poly_factor_chain();
      p = minus ? p - q : p + q;
    }
    return p;
  }
  P parse_poly_factor_chain() {
    P p = parse_poly_factor();
    while (is_sym("*")) {
      eat();
      p = p * parse_poly_factor();
    }
    return p;
  }

  // operator term: product of polynomial factors and field words
  OpTerm<RatFunc> parse_op_term() {
    OpTerm<RatFunc> t;
    t.coeff = P::constant(space.arity(), RatFunc(1));
    bool negate = false;
    while (is_sym("-") || is_sym("+")) {
      if (is_sym("-")) negate = !negate;
      eat();
    }
    bool any = false;
    while (true) {
      if (peek().kind == Token::Ident && is_field_name(peek().text)) {
        // a word: NAME ('.' NAME)*
        t.word.push_back(space.field_index(eat().text));
        while (is_sym(".")) {
          eat();
          if (peek().kind != Token::Ident || !is_field_name(peek().text)) fail("expected a frame field after '.'");
          t.word.push_back(space.field_index(eat().text));
        }
      } else if (peek().kind == Token::Number || is_sym("(") ||
                 (peek().kind == Token::Ident && var_index(peek().text) >= 0)) {
        t.coeff = t.coeff * parse_poly_factor();
      } else {
        fail("expected an operator term");
      }
      any = true;
      if (is_sym("*")) {
        eat();
        continue;
      }
      break;
    }
    if (!any) fail("empty operator term");
    if (negate) t.coeff = -t.coeff;
    return t;
  }

  std::vector<OpTerm<RatFunc>> parse_op_expr() {
    std::vector<OpTerm<RatFunc>> terms;
    terms.push_back(parse_op_term());
    while (is_sym("+") || is_sym("-")) {
      bool minus = is_sym("-");
      eat();
      OpTerm<RatFunc> t = parse_op_term();
      if (minus) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
    }
    return terms;
  }

  void parse() {
    // first pass: collect declarations in order (coords/params must precede
    // fields; fields must precede equations)
    skip_newlines();
    std::vector<std::pair<std::string, std::string>> pending_fields;  // name -> rest handled inline
    while (peek().kind != Token::End) {
      if (peek().kind != Token::Ident) fail("expected a declaration");
      std::string kw = eat().text;
      if (kw == "coord") {
        if (!space.fields.empty()) fail("coordinate declarations must precede fields");
        if (peek().kind != Token::Ident) fail("expected a coordinate name");
        space.coord_names.push_back(eat().text);
        if (peek().kind != Token::Number) fail("expected a coordinate weight");
        Rat w = parse_rat(eat().text);
        if (w.get_den() != 1 || sgn(w) <= 0) fail("coordinate weight must be a positive integer");
        space.weights.push_back(static_cast<int>(w.get_num().get_si()));
      } else if (kw == "param") {
        if (!space.fields.empty()) fail("parameter declarations must precede fields");
        if (peek().kind != Token::Ident) fail("expected a parameter name");
        space.param_names.push_back(eat().text);
      } else if (kw == "field") {
        if (peek().kind != Token::Ident) fail("expected a field name");
        typename ModelSpace<RatFunc>::Field f;
        f.name = eat().text;
        f.coeff.assign(space.ncoords(), P());
        expect_sym(":");
        while (true) {
          if (peek().kind != Token::Ident) fail("expected a coordinate name");
          std::string cn = eat().text;
          int ci = -1;
          for (size_t i = 0; i < space.coord_names.size(); ++i)
            if (space.coord_names[i] == cn) ci = static_cast<int>(i);
          if (ci < 0) fail("unknown coordinate '" + cn + "'");
          expect_sym("->");
          f.coeff[ci] = parse_poly_expr();
          if (is_sym(";")) {
            eat();
            continue;
          }
          break;
        }
        space.fields.push_back(std::move(f));
      } else if (kw == "eq") {
        Equation<RatFunc> eq;
        size_t text_start = at;
        auto lhs = parse_op_expr();
        expect_sym("=");
        // rhs: allow bare 0
        std::vector<OpTerm<RatFunc>> rhs;
        if (peek().kind == Token::Number && peek().text == "0" ) {
          eat();
        } else {
          rhs = parse_op_expr();
        }
        eq.terms = std::move(lhs);
        for (auto& t : rhs) {
          t.coeff = -t.coeff;
          eq.terms.push_back(std::move(t));
        }
        for (size_t k = text_start; k < at; ++k) {
          if (toks[k].kind == Token::End || toks[k].text == "\n") break;
          if (!eq.source.empty()) eq.source += " ";
          eq.source += toks[k].text;
        }
        eqs.push_back(std::move(eq));
      } else {
        fail("unknown declaration '" + kw + "'");
      }
      if (!at_line_end()) fail("unexpected trailing input");
      skip_newlines();
    }
  }
};

template <class K>
void finish_system(OperatorSystem<K>& sys) {
  sys.space.finalize();
  for (auto& eq : sys.eqs) {
    eq.worder = 0;
    for (auto& t : eq.terms) {
      int w = 0;
      for (int f : t.word) w += sys.space.fields[f].order;
      eq.worder = std::max(eq.worder, w);
    }
  }
}

}  // namespace

OperatorSystem<RatFunc> parse_system(const std::string& text) {
  Parser p(text);
  p.parse();
  if (p.space.coord_names.empty()) throw std::invalid_argument("system has no coordinates");
  if (p.space.fields.empty()) throw std::invalid_argument("system has no frame fields");
  OperatorSystem<RatFunc> sys;
  sys.space = std::move(p.space);
  sys.eqs = std::move(p.eqs);
  finish_system(sys);
  return sys;
}

namespace {

// substitutes parameter variables inside a polynomial; 'symbolic' maps one
// parameter index to the formal RatFunc symbol
Poly<RatFunc> subst_params(const Poly<RatFunc>& p, int ncoords, const std::vector<std::optional<Rat>>& values,
                           int symbolic_index) {
  int arity = static_cast<int>(ncoords + values.size());
  Poly<RatFunc> out;
  for (const auto& [mo, cf] : p.t) {
    RatFunc c = cf;
    Mono m = mo;
    for (size_t pi = 0; pi < values.size(); ++pi) {
      int e = m[ncoords + pi];
      if (e == 0) continue;
      m[ncoords + pi] = 0;
      if (static_cast<int>(pi) == symbolic_index) {
        RatFunc a = RatFunc::var();
        for (int k = 0; k < e; ++k) c = c * a;
      } else if (values[pi]) {
        c = c * RatFunc(rat_pow(*values[pi], e));
      } else {
        throw std::invalid_argument("unbound parameter (bind a value or keep exactly one symbolic)");
      }
    }
    if (!c.zero()) {
      auto it = out.t.find(m);
      if (it == out.t.end())
        out.t[m] = c;
      else {
        it->second += c;
        if (it->second.zero()) out.t.erase(it);
      }
    }
  }
  (void)arity;
  return out;
}

Rat ratfunc_constant(const RatFunc& f) {
  if (!f.is_constant()) throw std::invalid_argument("parameter remains symbolic where a rational is required");
  return f.constant();
}

}  // namespace

OperatorSystem<Rat> bind_params(const OperatorSystem<RatFunc>& sys, const std::map<std::string, Rat>& values) {
  const auto& sp = sys.space;
  std::vector<std::optional<Rat>> vals(sp.param_names.size());
  for (const auto& [name, v] : values) {
    bool found = false;
    for (size_t i = 0; i < sp.param_names.size(); ++i)
      if (sp.param_names[i] == name) {
        vals[i] = v;
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown parameter '" + name + "'");
  }
  OperatorSystem<Rat> out;
  out.space.coord_names = sp.coord_names;
  out.space.weights = sp.weights;
  out.space.param_names = sp.param_names;  // arity bookkeeping is preserved
  auto convert = [&](const Poly<RatFunc>& p) {
    Poly<RatFunc> s = subst_params(p, sp.ncoords(), vals, -1);
    Poly<Rat> q;
    for (const auto& [mo, cf] : s.t) q.t[mo] = ratfunc_constant(cf);
    return q;
  };
  for (const auto& f : sp.fields) {
    typename ModelSpace<Rat>::Field nf;
    nf.name = f.name;
    for (const auto& c : f.coeff) nf.coeff.push_back(convert(c));
    out.space.fields.push_back(std::move(nf));
  }
  for (const auto& eq : sys.eqs) {
    Equation<Rat> ne;
    ne.source = eq.source;
    for (const auto& t : eq.terms) ne.terms.push_back({convert(t.coeff), t.word});
    out.eqs.push_back(std::move(ne));
  }
  finish_system(out);
  return out;
}

OperatorSystem<RatFunc> bind_params_symbolic(const OperatorSystem<RatFunc>& sys,
                                             const std::map<std::string, Rat>& values) {
  const auto& sp = sys.space;
  std::vector<std::optional<Rat>> vals(sp.param_names.size());
  for (const auto& [name, v] : values) {
    bool found = false;
    for (size_t i = 0; i < sp.param_names.size(); ++i)
      if (sp.param_names[i] == name) {
        vals[i] = v;
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown parameter '" + name + "'");
  }
  int symbolic = -1;
  for (size_t i = 0; i < vals.size(); ++i)
    if (!vals[i]) {
      if (symbolic >= 0) throw std::invalid_argument("at most one parameter may stay symbolic");
      symbolic = static_cast<int>(i);
    }
  OperatorSystem<RatFunc> out;
  out.space.coord_names = sp.coord_names;
  out.space.weights = sp.weights;
  out.space.param_names = sp.param_names;
  auto convert = [&](const Poly<RatFunc>& p) { return subst_params(p, sp.ncoords(), vals, symbolic); };
  for (const auto& f : sp.fields) {
    typename ModelSpace<RatFunc>::Field nf;
    nf.name = f.name;
    for (const auto& c : f.coeff) nf.coeff.push_back(convert(c));
    out.space.fields.push_back(std::move(nf));
  }
  for (const auto& eq : sys.eqs) {
    Equation<RatFunc> ne;
    ne.source = eq.source;
    for (const auto& t : eq.terms) ne.terms.push_back({convert(t.coeff), t.word});
    out.eqs.push_back(std::move(ne));
  }
  finish_system(out);
  return out;
}

namespace {
std::vector<std::optional<Rat>> param_values(const ModelSpace<RatFunc>& sp, const std::map<std::string, Rat>& values) {
  std::vector<std::optional<Rat>> vals(sp.param_names.size());
  for (const auto& [name, v] : values) {
    bool found = false;
    for (size_t i = 0; i < sp.param_names.size(); ++i)
      if (sp.param_names[i] == name) {
        vals[i] = v;
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown parameter '" + name + "'");
  }
  return vals;
}
}  // namespace

Poly<Rat> bind_poly(const Poly<RatFunc>& p, const OperatorSystem<RatFunc>& sys,
                    const std::map<std::string, Rat>& values) {
  auto vals = param_values(sys.space, values);
  Poly<RatFunc> s = subst_params(p, sys.space.ncoords(), vals, -1);
  Poly<Rat> q;
  for (const auto& [mo, cf] : s.t) q.t[mo] = ratfunc_constant(cf);
  return q;
}

Poly<RatFunc> bind_poly_symbolic(const Poly<RatFunc>& p, const OperatorSystem<RatFunc>& sys,
                                 const std::map<std::string, Rat>& values) {
  auto vals = param_values(sys.space, values);
  int symbolic = -1;
  for (size_t i = 0; i < vals.size(); ++i)
    if (!vals[i]) {
      if (symbolic >= 0) throw std::invalid_argument("at most one parameter may stay symbolic");
      symbolic = static_cast<int>(i);
    }
  return subst_params(p, sys.space.ncoords(), vals, symbolic);
}

std::vector<Poly<RatFunc>> parse_poly_list(const std::string& text, const OperatorSystem<RatFunc>& sys) {
  std::vector<Poly<RatFunc>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments and whitespace
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    Parser p(line);
    p.space = sys.space;
    try {
      auto poly = p.parse_poly_expr();
      if (!p.at_line_end() && p.peek().kind != Token::End)
        throw ParseError("unexpected trailing input", lineno, p.peek().col);
      out.push_back(std::move(poly));
    } catch (ParseError& e) {
      throw ParseError(std::string(e.what()), lineno, e.column);
    }
  }
  return out;
}

}  // namespace exgeo::wpde
