// Salamon notation:
//   algebra := term ("," term)*
//   term    := "0" | signed
//   signed  := ["+"|"-"] product (("+"|"-") product)*
//   product := [scalar "*"] digit digit
//   scalar  := rational ["r2"] | "r2";  rational := int ["/" int]
// with optional surrounding parentheses, free whitespace and one tolerated
// trailing comma.

#include <cctype>

#include "cursor.hpp"
#include "halfflat/lie_algebra.hpp"

namespace halfflat {

namespace {

struct RawProduct {
  Scalar coeff;
  int first;
  int second;
  std::size_t position;
};

class NotationParser {
 public:
  explicit NotationParser(std::string_view text) : in_(text) {}

  std::vector<std::vector<RawProduct>> parse() {
    const bool parenthesised = in_.accept('(');
    std::vector<std::vector<RawProduct>> terms;
    terms.push_back(term());
    while (in_.accept(',')) {
      const char c = in_.peek();
      if (c == '\0' || c == ')') break;  // trailing comma
      terms.push_back(term());
    }
    if (parenthesised) in_.expect(')');
    if (!in_.at_end()) in_.fail("unexpected character");
    return terms;
  }

 private:
  std::vector<RawProduct> term() {
    if (in_.peek() == '0') {
      std::string_view run = in_.digit_run();
      if (run == "0") {
        in_.advance();
        return {};
      }
    }
    std::vector<RawProduct> products;
    bool negative = false;
    if (in_.accept('-')) {
      negative = true;
    } else {
      in_.accept('+');
    }
    products.push_back(product(negative));
    while (true) {
      const char c = in_.peek();
      if (c != '+' && c != '-') break;
      in_.advance();
      products.push_back(product(c == '-'));
    }
    return products;
  }

  RawProduct product(bool negative) {
    in_.skip_space();
    Scalar coeff = 1;
    const char c = in_.raw();
    if (c == 'r') {
      coeff = in_.scalar();
      in_.expect('*');
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string_view run = in_.digit_run();
      const char after = in_.raw(run.size());
      if (after == '/' || after == 'r' || after == '*') {
        coeff = in_.scalar();
        in_.expect('*');
      }
    } else {
      in_.fail("expected a pair of digits");
    }
    in_.skip_space();
    const std::size_t pair_at = in_.position();
    std::string_view pair = in_.digit_run();
    if (pair.size() != 2) in_.fail_at("expected exactly two digits naming e^a e^b", pair_at);
    in_.advance(2);
    const int a = pair[0] - '0';
    const int b = pair[1] - '0';
    if (a == b) in_.fail_at("repeated digit in pair", pair_at);
    return {negative ? -coeff : coeff, a, b, pair_at};
  }

  detail::Cursor in_;
};

std::string scalar_literal(const mpq_class& q, bool surd) {
  if (!surd) return q.get_str();
  if (q == 1) return "r2";
  return q.get_str() + "r2";
}

}  // namespace

LieAlgebra parse_notation(std::string_view text) {
  NotationParser parser(text);
  const auto terms = parser.parse();
  const int n = static_cast<int>(terms.size());
  if (n < 2) throw ParseError("Lie algebra dimension must be at least 2", 0);
  if (n > kMaxDim) throw ParseError("Lie algebra dimension exceeds " + std::to_string(kMaxDim), text.size());
  std::vector<KForm> d1;
  for (const auto& products : terms) {
    KForm f(n, 2);
    for (const auto& p : products) {
      if (p.first < 1 || p.first > n) throw ParseError("digit out of range", p.position);
      if (p.second < 1 || p.second > n) throw ParseError("digit out of range", p.position + 1);
      f += wedge(KForm::generator(n, p.first), KForm::generator(n, p.second)) * p.coeff;
    }
    d1.push_back(std::move(f));
  }
  return LieAlgebra(std::move(d1), std::string(text));
}

std::string format_notation(const LieAlgebra& g) {
  std::string out;
  for (int i = 1; i <= g.dim(); ++i) {
    if (i > 1) out += ",";
    const KForm& f = g.d_generator(i);
    if (f.is_zero()) {
      out += "0";
      continue;
    }
    std::string term;
    for (const auto& [set, coeff] : f.terms()) {
      const std::string pair = set.digits();
      // One product per nonzero part of the coefficient.
      for (const bool surd : {false, true}) {
        const mpq_class& q = surd ? coeff.surd_part() : coeff.rational_part();
        if (sgn(q) == 0) continue;
        const bool negative = sgn(q) < 0;
        const mpq_class magnitude = negative ? mpq_class(-q) : q;
        if (negative) {
          term += "-";
        } else if (!term.empty()) {
          term += "+";
        }
        if (surd || magnitude != 1) term += scalar_literal(magnitude, surd) + "*";
        term += pair;
      }
    }
    out += term;
  }
  return out;
}

}  // namespace halfflat
