#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "halfflat/errors.hpp"
#include "halfflat/scalar.hpp"

namespace halfflat::detail {

/// Whitespace-skipping reader shared by the notation and form parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Character at offset `ahead` without skipping whitespace.
  char raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t position() const { return pos_; }
  void advance(std::size_t count = 1) { pos_ += count; }
  std::string_view text() const { return text_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const { throw ParseError(message, pos); }

  /// Digit run starting at the current position (no whitespace skipping inside).
  std::string_view digit_run() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    return text_.substr(pos_, end - pos_);
  }

  /// scalar := rational ["r2"] | "r2";  rational := int ["/" int]
  Scalar scalar() {
    skip_space();
    if (raw() == 'r') {
      if (raw(1) != '2') fail("expected 'r2'");
      advance(2);
      return Scalar::sqrt2();
    }
    std::string_view num = digit_run();
    if (num.empty()) fail("expected a number");
    advance(num.size());
    mpq_class value(std::string(num), 10);
    if (raw() == '/') {
      advance();
      std::string_view den = digit_run();
      if (den.empty()) fail("expected a denominator");
      if (den.find_first_not_of('0') == std::string_view::npos) fail_at("zero denominator", pos_);
      advance(den.size());
      value /= mpq_class(std::string(den), 10);
    }
    value.canonicalize();
    if (raw() == 'r' && raw(1) == '2') {
      advance(2);
      return Scalar(0, value);
    }
    return Scalar(value);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace halfflat::detail
