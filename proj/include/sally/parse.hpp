#ifndef SALLY_PARSE_HPP
#define SALLY_PARSE_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "sally/polynomial.hpp"

namespace sally {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t at)
      : std::runtime_error(msg + " (at column " + std::to_string(at + 1) + ")"), pos(at) {}
};

// Parses expressions like "3*x1^2*y1 - x2*x3 + 7". Implicit products are
// not accepted: factors are joined with '*', powers with '^'.
template <class F>
class PolyParser {
 public:
  explicit PolyParser(Ring ring) : ring_(std::move(ring)) {
    for (size_t i = 0; i < ring_->vars.size(); ++i) var_index_[ring_->vars[i]] = i;
  }

  Polynomial<F> parse(const std::string& s) const {
    size_t pos = 0;
    std::vector<Term<F>> ts;
    skip_ws(s, pos);
    if (pos == s.size()) throw ParseError("empty polynomial", pos);
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') neg = (s[pos++] == '-');
    while (true) {
      ts.push_back(parse_term(s, pos, neg));
      skip_ws(s, pos);
      if (pos == s.size()) break;
      if (s[pos] == '+' || s[pos] == '-') {
        neg = (s[pos] == '-');
        ++pos;
      } else {
        throw ParseError("expected '+' or '-'", pos);
      }
    }
    return make_poly(ring_, std::move(ts));
  }

 private:
  static void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  Term<F> parse_term(const std::string& s, size_t& pos, bool neg) const {
    Monomial m(ring_->nvars());
    F coeff = F::from_int(neg ? -1 : 1, ring_->field);
    bool any = false;
    while (true) {
      skip_ws(s, pos);
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = coeff * parse_number(s, pos);
        any = true;
      } else if (pos < s.size() &&
                 (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
          ++pos;
        std::string name = s.substr(start, pos - start);
        auto it = var_index_.find(name);
        if (it == var_index_.end())
          throw ParseError("unknown variable '" + name + "'", start);
        unsigned exp = 1;
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          skip_ws(s, pos);
          exp = parse_uint(s, pos);
        }
        m.e[it->second] += exp;
        m.deg += exp;
        any = true;
      } else {
        throw ParseError("expected coefficient or variable", pos);
      }
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) throw ParseError("empty term", pos);
    return {std::move(m), std::move(coeff)};
  }

  F parse_number(const std::string& s, size_t& pos) const {
    long num = static_cast<long>(parse_uint(s, pos));
    F val = F::from_int(num, ring_->field);
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_ws(s, pos);
      long den = static_cast<long>(parse_uint(s, pos));
      if (den == 0) throw ParseError("zero denominator", pos);
      val = val / F::from_int(den, ring_->field);
    }
    return val;
  }

  static unsigned parse_uint(const std::string& s, size_t& pos) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected integer", pos);
    unsigned long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1000000000ul) throw ParseError("integer literal too large", pos);
    }
    return static_cast<unsigned>(v);
  }

  Ring ring_;
  std::map<std::string, size_t> var_index_;
};

template <class F>
Polynomial<F> parse_poly(const Ring& ring, const std::string& s) {
  return PolyParser<F>(ring).parse(s);
}

}  // namespace sally

#endif
