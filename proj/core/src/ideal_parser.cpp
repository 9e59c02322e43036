#include <cctype>
#include <limits>
#include <unordered_map>

#include "powerbetti/errors.hpp"
#include "powerbetti/monomial.hpp"

namespace powerbetti {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MonomialIdeal parse() {
    expect_keyword("vars");
    expect(':');
    std::vector<std::string> vars;
    std::unordered_map<std::string, std::size_t> index;
    skip_space();
    while (pos_ < text_.size() && text_[pos_] != ';') {
      const std::size_t at = pos_;
      std::string name = identifier();
      if (index.contains(name)) throw ParseError("duplicate variable '" + name + "'", at);
      index.emplace(name, vars.size());
      vars.push_back(std::move(name));
      skip_space();
    }
    if (vars.empty()) throw ParseError("expected at least one variable name", pos_);
    expect(';');
    expect_keyword("gens");
    expect(':');

    std::vector<ExponentVector> gens;
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("empty generator list", pos_);
    while (true) {
      const std::size_t at = pos_;
      ExponentVector g = monomial(vars.size(), index);
      if (g.is_zero()) throw ParseError("unit generator makes the ideal improper", at);
      gens.push_back(std::move(g));
      skip_space();
      if (pos_ >= text_.size()) break;
      expect(',');
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  void expect_keyword(std::string_view kw) {
    skip_space();
    const std::size_t at = pos_;
    if (text_.substr(pos_, kw.size()) != kw) {
      throw ParseError("expected keyword '" + std::string(kw) + "'", at);
    }
    pos_ += kw.size();
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) {
      throw ParseError("expected identifier", pos_);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Exponent positive_integer() {
    skip_space();
    const std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > std::numeric_limits<Exponent>::max() / 2) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected positive integer", start);
    if (v == 0) throw ParseError("exponent must be positive", start);
    return static_cast<Exponent>(v);
  }

  ExponentVector monomial(std::size_t n, const std::unordered_map<std::string, std::size_t>& index) {
    std::vector<Exponent> e(n, 0);
    while (true) {
      const std::size_t at = (skip_space(), pos_);
      const std::string name = identifier();
      const auto it = index.find(name);
      if (it == index.end()) throw ParseError("unknown variable '" + name + "'", at);
      Exponent power = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        power = positive_integer();
      }
      e[it->second] += power;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return ExponentVector(std::move(e));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) { return Parser(text).parse(); }

}  // namespace powerbetti
