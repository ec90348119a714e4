#include "halfflat/form_parser.hpp"

#include <cctype>

#include "cursor.hpp"

namespace halfflat {

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, int n) : in_(text), n_(n) {}

  KForm parse_all() {
    KForm out = expr();
    if (!in_.at_end()) in_.fail("unexpected character");
    return out;
  }

 private:
  KForm expr() {
    bool negate = false;
    if (in_.accept('-')) {
      negate = true;
    } else {
      in_.accept('+');
    }
    KForm total = product();
    if (negate) total = -total;
    while (true) {
      const char c = in_.peek();
      if (c != '+' && c != '-') break;
      in_.advance();
      const std::size_t at = in_.position();
      KForm term = product();
      if (term.degree() != total.degree()) in_.fail_at("sum of forms of different degree", at);
      if (c == '+') {
        total += term;
      } else {
        total -= term;
      }
    }
    return total;
  }

  KForm product() {
    KForm out = factor();
    while (in_.accept('*')) out = wedge(out, factor());
    return out;
  }

  KForm factor() {
    const char c = in_.peek();
    if (c == '(') {
      in_.advance();
      KForm inner = expr();
      in_.expect(')');
      return inner;
    }
    if (c == 'e') return generator();
    if (c == 'r' || std::isdigit(static_cast<unsigned char>(c))) return KForm::constant(n_, in_.scalar());
    in_.fail("expected a scalar, a generator or '('");
  }

  KForm generator() {
    in_.advance();  // 'e'
    in_.skip_space();
    if (in_.raw() == '^') in_.advance();
    const bool braced = in_.accept('{');
    const std::size_t at = in_.position();
    std::string_view digits = in_.digit_run();
    if (digits.empty()) in_.fail("expected generator digits");
    std::vector<int> indices;
    for (char d : digits) {
      const int i = d - '0';
      if (i < 1 || i > n_) in_.fail_at("generator index out of range", at + indices.size());
      for (int seen : indices)
        if (seen == i) in_.fail_at("repeated generator index", at + indices.size());
      indices.push_back(i);
    }
    in_.advance(digits.size());
    if (braced) in_.expect('}');
    KForm out = KForm::constant(n_, 1);
    for (int i : indices) out = wedge(out, KForm::generator(n_, i));
    return out;
  }

  detail::Cursor in_;
  int n_;
};

}  // namespace

KForm parse_form(std::string_view text, int n) { return FormParser(text, n).parse_all(); }

std::vector<KForm> parse_form_list(std::string_view text, int n) {
  std::vector<KForm> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      try {
        out.push_back(parse_form(text.substr(start, i - start), n));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in list item: ") + e.what(), start + e.position());
      }
      start = i + 1;
    }
  }
  return out;
}

Scalar parse_scalar(std::string_view text) {
  detail::Cursor in(text);
  bool negate = in.accept('-');
  if (!negate) in.accept('+');
  Scalar s = in.scalar();
  if (!in.at_end()) in.fail("unexpected character after scalar");
  return negate ? -s : s;
}

}  // namespace halfflat
