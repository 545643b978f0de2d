#include "entroscope/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace entroscope {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += (i + 1 == expected.size()) ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>* variables)
      : text_(text), variables_(variables) {}

  InfoExpression parse() {
    InfoExpression out(*variables_);
    skip_space();
    if (peek() == '0' && only_zero_literal()) {
      ++pos_;
      expect_end();
      return out;
    }
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    out += term(negative);
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') error({"'+'", "'-'", "end of input"});
      negative = peek() == '-';
      ++pos_;
      out += term(negative);
    }
    return out;
  }

  // Name collection pass for parse_expression(text) without an order.
  void collect(std::set<std::string>& names) {
    collecting_ = &names;
    static const std::vector<std::string> kNone;
    variables_ = &kNone;
    parse();
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool only_zero_literal() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p == text_.size();
  }

  [[noreturn]] void error(std::vector<std::string> expected) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) error({"'" + std::string(1, c) + "'"});
    ++pos_;
  }

  void expect_end() {
    skip_space();
    if (!at_end()) error({"end of input"});
  }

  std::string digits() {
    std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  InfoExpression term(bool negative) {
    skip_space();
    Rational coef(1);
    if (is_digit(peek())) {
      std::string whole = digits();
      if (peek() == '/') {
        ++pos_;
        if (!is_digit(peek())) error({"digit"});
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          --pos_;
          error({"non-zero denominator"});
        }
        coef = Rational::from_strings(whole, den);
      } else if (peek() == '.') {
        ++pos_;
        if (!is_digit(peek())) error({"digit"});
        coef = Rational::parse(whole + "." + digits());
      } else {
        coef = Rational::parse(whole);
      }
      expect('*');
      skip_space();
    }
    InfoExpression e = atom();
    if (negative) coef = -coef;
    e *= coef;
    return e;
  }

  InfoExpression atom() {
    const char head = peek();
    if (head != 'H' && head != 'I') error({"coefficient", "'H('", "'I('"});
    ++pos_;
    if (peek() != '(') error({"'('"});
    ++pos_;
    SubsetMask first = vars();
    SubsetMask second = 0;
    if (head == 'I') {
      expect(';');
      second = vars();
    }
    SubsetMask given = 0;
    skip_space();
    if (peek() == '|') {
      ++pos_;
      given = vars();
    }
    expect(')');
    if (collecting_) return InfoExpression(*variables_);
    if (head == 'H') return expand_entropy(*variables_, first, given);
    return expand_mutual_information(*variables_, first, second, given);
  }

  SubsetMask vars() {
    SubsetMask s = 0;
    for (;;) {
      skip_space();
      if (!is_name_start(peek())) error({"variable name"});
      std::size_t start = pos_;
      while (is_name_char(peek())) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (collecting_) {
        collecting_->insert(name);
      } else {
        auto it = std::find(variables_->begin(), variables_->end(), name);
        if (it == variables_->end()) fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
        const SubsetMask bit = SubsetMask{1} << (it - variables_->begin());
        if (s & bit) fail(ErrorCode::OverlappingSubsets, "variable '" + name + "' repeated inside one argument");
        s |= bit;
      }
      skip_space();
      if (peek() != ',') break;
      ++pos_;
    }
    return s;
  }

  std::string_view text_;
  const std::vector<std::string>* variables_;
  std::set<std::string>* collecting_ = nullptr;
  std::size_t pos_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorCode::SyntaxError, "syntax error at column " + std::to_string(position + 1) + ": expected " +
                                        join_expected(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

InfoExpression parse_expression(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, &variables).parse();
}

std::vector<std::string> collect_variables(std::string_view text) {
  std::set<std::string> names;
  Parser(text, nullptr).collect(names);
  return {names.begin(), names.end()};
}

InfoExpression parse_expression(std::string_view text) {
  return parse_expression(text, collect_variables(text));
}

std::string print_canonical(const InfoExpression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : e.terms()) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += "H(" + subset_names(s, e.variables()) + ")";
    first = false;
  }
  return out;
}

}  // namespace entroscope
