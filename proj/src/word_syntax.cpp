#include "obstrukt/word_syntax.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <utility>

namespace obstrukt {

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : std::runtime_error("parse error at offset " + std::to_string(position) + ": expected " +
                         expected + ", found " + found),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { Ident, Int, LParen, RParen, Comma, Star, Caret, End, Invalid };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, {}};
    const char c = src_[pos_];
    switch (c) {
      case '(': ++pos_; return {Tok::LParen, start, src_.substr(start, 1)};
      case ')': ++pos_; return {Tok::RParen, start, src_.substr(start, 1)};
      case ',': ++pos_; return {Tok::Comma, start, src_.substr(start, 1)};
      case '*': ++pos_; return {Tok::Star, start, src_.substr(start, 1)};
      case '^': ++pos_; return {Tok::Caret, start, src_.substr(start, 1)};
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::Ident, start, src_.substr(start, pos_ - start)};
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t p = pos_ + (c == '-' ? 1 : 0);
      const std::size_t digits = p;
      while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
      if (p == digits) {
        ++pos_;
        return {Tok::Invalid, start, src_.substr(start, 1)};
      }
      pos_ = p;
      return {Tok::Int, start, src_.substr(start, pos_ - start)};
    }
    ++pos_;
    return {Tok::Invalid, start, src_.substr(start, 1)};
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Invalid: {
      const auto ch = static_cast<unsigned char>(t.text.empty() ? 0 : t.text[0]);
      if (std::isprint(ch)) return "'" + std::string(t.text) + "'";
      std::ostringstream os;
      os << "byte 0x" << std::hex << static_cast<int>(ch);
      return os.str();
    }
    default: return "'" + std::string(t.text) + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { advance(); }

  MoveWord word() {
    MoveWord w;
    if (cur_.kind == Tok::End) return w;
    term(w);
    while (cur_.kind == Tok::Star) {
      advance();
      term(w);
    }
    expect_end();
    return w;
  }

  GroupElement element_only() {
    GroupElement g = element();
    expect_end();
    return g;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(cur_.pos, expected, describe(cur_));
  }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(what);
    advance();
  }

  void expect_end() {
    if (cur_.kind != Tok::End) fail("'*' or end of input");
  }

  std::int64_t integer(const char* what) {
    if (cur_.kind != Tok::Int) fail(what);
    std::int64_t value = 0;
    const char* first = cur_.text.data();
    const char* last = first + cur_.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) fail(std::string(what) + " within 64-bit range");
    advance();
    return value;
  }

  int arc_index() {
    if (cur_.kind != Tok::Int || (cur_.text != "1" && cur_.text != "2")) fail("arc index 1 or 2");
    const int u = cur_.text == "1" ? 1 : 2;
    advance();
    return u;
  }

  GroupElement element() {
    expect(Tok::LParen, "'(' opening a group element");
    GroupElement::Exponents exps{};
    for (std::size_t i = 0; i < kRank; ++i) {
      if (i > 0) expect(Tok::Comma, "','");
      exps[i] = integer("integer exponent");
    }
    expect(Tok::RParen, "')' closing a group element");
    return GroupElement(exps);
  }

  Move move() {
    if (cur_.kind != Tok::Ident) fail("move name (xi, eta, rho, tau, theta, delta)");
    const std::string_view name = cur_.text;
    if (name != "xi" && name != "eta" && name != "rho" && name != "tau" && name != "theta" &&
        name != "delta")
      fail("move name (xi, eta, rho, tau, theta, delta)");
    advance();
    expect(Tok::LParen, "'('");
    Move m;
    if (name == "xi") {
      m = XiSpin{arc_index()};
    } else if (name == "eta" || name == "rho") {
      const int u = arc_index();
      expect(Tok::Comma, "','");
      const GroupElement plus = element();
      expect(Tok::Comma, "','");
      const GroupElement minus = element();
      m = name == "eta" ? Move(EtaSpin{u, plus, minus}) : Move(RhoSpin{u, plus, minus});
    } else if (name == "tau") {
      const int u = arc_index();
      expect(Tok::Comma, "','");
      const int v = arc_index();
      expect(Tok::Comma, "','");
      m = TauSpin{u, v, element()};
    } else if (name == "theta") {
      m = BasepointLoop{element()};
    } else {
      const std::size_t at = cur_.pos;
      const std::int64_t k = integer("stabilization index");
      if (k < 0) throw ParseError(at, "non-negative stabilization index", std::to_string(k));
      expect(Tok::Comma, "','");
      const int side = arc_index();
      expect(Tok::Comma, "','");
      const GroupElement plus = element();
      expect(Tok::Comma, "','");
      m = DeltaSpin{k, side, plus, element()};
    }
    expect(Tok::RParen, "')'");
    return m;
  }

  void term(MoveWord& w) {
    const Move m = move();
    std::int64_t reps = 1;
    if (cur_.kind == Tok::Caret) {
      advance();
      const std::size_t at = cur_.pos;
      reps = integer("exponent");
      if (reps < 0) throw ParseError(at, "non-negative exponent", std::to_string(reps));
      if (static_cast<std::uint64_t>(reps) > kMaxParsedWordLength - w.size())
        throw ParseError(at, "exponent keeping the word within " +
                                 std::to_string(kMaxParsedWordLength) + " moves",
                         std::to_string(reps));
    } else if (w.size() >= kMaxParsedWordLength) {
      fail("word within " + std::to_string(kMaxParsedWordLength) + " moves");
    }
    w.insert(w.end(), static_cast<std::size_t>(reps), m);
  }

  Lexer lex_;
  Token cur_{Tok::End, 0, {}};
};

}  // namespace

MoveWord parse_word(std::string_view text) { return Parser(text).word(); }

GroupElement parse_element(std::string_view text) { return Parser(text).element_only(); }

std::string format_element(const GroupElement& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

std::string format_move(const Move& m) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, XiSpin>) {
          os << "xi(" << x.u << ')';
        } else if constexpr (std::is_same_v<T, EtaSpin>) {
          os << "eta(" << x.u << ',' << x.lambda_plus << ',' << x.lambda_minus << ')';
        } else if constexpr (std::is_same_v<T, RhoSpin>) {
          os << "rho(" << x.u << ',' << x.gamma_plus << ',' << x.gamma_minus << ')';
        } else if constexpr (std::is_same_v<T, TauSpin>) {
          os << "tau(" << x.u << ',' << x.v << ',' << x.base << ')';
        } else if constexpr (std::is_same_v<T, BasepointLoop>) {
          os << "theta(" << x.theta_bar << ')';
        } else {
          os << "delta(" << x.k << ',' << x.side << ',' << x.mu_plus << ',' << x.mu_minus << ')';
        }
      },
      m);
  return os.str();
}

std::string format_word(const MoveWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i + 1;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += " * ";
    out += format_move(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace obstrukt
