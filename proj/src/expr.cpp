#include "k3lat/expr.hpp"

#include "k3lat/error.hpp"

#include <cctype>
#include <sstream>

namespace k3lat {

Expr make_block(std::string base, std::vector<long> params) {
  Expr e;
  e.kind = Expr::Kind::Block;
  e.base = std::move(base);
  e.params = std::move(params);
  return e;
}

Expr make_sum(std::vector<Expr> terms) {
  if (terms.size() == 1) return terms[0];
  Expr e;
  e.kind = Expr::Kind::Sum;
  e.children = std::move(terms);
  return e;
}

Expr make_repeat(Expr block, long count) {
  Expr e;
  e.kind = Expr::Kind::Repeat;
  e.children.push_back(std::move(block));
  e.count = count;
  return e;
}

namespace {

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& expected) const {
    std::ostringstream os;
    os << "at byte " << at << ": expected " << expected;
    throw Error("SyntaxError", os.str(), static_cast<long>(at));
  }

  bool eof() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= src.size() || src[pos] != c) fail(pos, what);
    ++pos;
  }

  long integer(const char* what) {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < src.size() && src[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos]))) fail(start, what);
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos])))
      fail(start, "a lattice name");
    while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos]))) ++pos;
    return std::string(src.substr(start, pos - start));
  }
};

// "A2" / "D4" / "E8" carry their rank in the name.
bool split_rank_suffix(const std::string& s, std::string& base, long& rank) {
  if (s.size() < 2) return false;
  if (s[0] != 'A' && s[0] != 'D' && s[0] != 'E') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  base = s.substr(0, 1);
  rank = std::stol(s.substr(1));
  return true;
}

Expr parse_block(Lexer& lx) {
  lx.skip_ws();
  std::size_t at = lx.pos;
  if (lx.accept('<')) {
    long k = lx.integer("an integer inside <...>");
    lx.expect('>', "'>'");
    return make_block("<>", {k});
  }
  if (lx.accept('[')) {
    std::vector<std::vector<long>> rows;
    rows.emplace_back();
    for (;;) {
      lx.skip_ws();
      char c = lx.peek();
      if (c == ']') {
        lx.expect(']', "']'");
        break;
      }
      if (c == ';') {
        lx.expect(';', "';'");
        rows.emplace_back();
        continue;
      }
      rows.back().push_back(lx.integer("a matrix entry, ';' or ']'"));
    }
    std::size_t n = rows.size();
    for (const auto& r : rows)
      if (r.size() != n) lx.fail(at, "a square matrix (rows of equal length)");
    Expr e;
    e.kind = Expr::Kind::Gram;
    e.gram = IntMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e.gram.at(i, j) = Int(rows[i][j]);
    if (!e.gram.is_symmetric()) lx.fail(at, "a symmetric Gram matrix");
    return e;
  }
  std::string nm = lx.name();
  std::vector<long> params;
  std::string base = nm;
  long rank;
  std::string b;
  if (nm != "E6" && nm != "E7" && nm != "E8" && nm != "H5" && nm != "K7" &&
      split_rank_suffix(nm, b, rank)) {
    base = b;
    params.push_back(rank);
  } else if (nm == "E6" || nm == "E7" || nm == "E8") {
    base = "E";
    params.push_back(nm[1] - '0');
  }
  if (lx.accept('(')) {
    params.push_back(lx.integer("an integer argument"));
    while (lx.accept(',')) params.push_back(lx.integer("an integer argument"));
    lx.expect(')', "')'");
  }
  return make_block(base, params);
}

Expr parse_term(Lexer& lx) {
  Expr b = parse_block(lx);
  if (lx.accept('*')) {
    lx.skip_ws();
    std::size_t at = lx.pos;
    long count = lx.integer("a repeat count");
    if (count < 1) lx.fail(at, "a positive repeat count");
    return make_repeat(std::move(b), count);
  }
  return b;
}

}  // namespace

Expr parse_expr(std::string_view src) {
  Lexer lx{src};
  if (lx.eof()) lx.fail(0, "an expression");
  std::vector<Expr> terms;
  terms.push_back(parse_term(lx));
  while (lx.accept('+')) terms.push_back(parse_term(lx));
  lx.skip_ws();
  if (lx.pos != src.size()) lx.fail(lx.pos, "'+', '*' or end of input");
  return make_sum(std::move(terms));
}

std::string pretty_print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Block: {
      std::ostringstream os;
      if (e.base == "<>") {
        os << '<' << e.params.at(0) << '>';
        return os.str();
      }
      std::size_t consumed = 0;
      if ((e.base == "A" || e.base == "D" || e.base == "E") && !e.params.empty()) {
        os << e.base << e.params[0];
        consumed = 1;
      } else {
        os << e.base;
      }
      if (e.params.size() > consumed) {
        os << '(';
        for (std::size_t i = consumed; i < e.params.size(); ++i) {
          if (i > consumed) os << ',';
          os << e.params[i];
        }
        os << ')';
      }
      return os.str();
    }
    case Expr::Kind::Gram: {
      std::ostringstream os;
      os << "[ ";
      for (std::size_t i = 0; i < e.gram.rows(); ++i) {
        if (i) os << " ; ";
        for (std::size_t j = 0; j < e.gram.cols(); ++j) {
          if (j) os << ' ';
          os << e.gram.at(i, j);
        }
      }
      os << " ]";
      return os.str();
    }
    case Expr::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += " + ";
        out += pretty_print(e.children[i]);
      }
      return out;
    }
    case Expr::Kind::Repeat:
      return pretty_print(e.children.at(0)) + "*" + std::to_string(e.count);
  }
  throw Error("Internal", "unreachable");
}

}  // namespace k3lat
