#include "octocf/quadnum.hpp"

#include <cctype>

namespace octocf {

template <int D>
std::string Quadratic<D>::str() const {
  const std::string root = D == 2 ? "√2" : "√" + std::to_string(D);
  if (b_.is_zero()) return a_.str();
  std::string coeff;
  if (b_ == Rational(1)) {
    coeff = root;
  } else if (b_ == Rational(-1)) {
    coeff = "-" + root;
  } else {
    coeff = b_.str() + root;
  }
  if (a_.is_zero()) return coeff;
  return a_.str() + (b_.sign() > 0 ? "+" : "") + coeff;
}

template <int D>
std::string to_decimal(const Quadratic<D>& q, std::size_t digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const int s = qsign(q);
  const Quadratic<D> mag = s < 0 ? -q : q;
  const Integer n = floor(mag * Quadratic<D>(Rational(scale)) + Quadratic<D>(Rational(1, 2)));
  std::string body = n.get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (s < 0 && n != 0 ? "-" : "") + body;
}

template class Quadratic<2>;
template class Quadratic<5>;
template std::string to_decimal(const Quadratic<2>&, std::size_t);
template std::string to_decimal(const Quadratic<5>&, std::size_t);

namespace {

// Splits "x+y√2" into signed terms; each term is a rational, optionally
// followed by the root marker.
struct Term {
  Rational value;
  bool irrational = false;
};

Term parse_term(std::string_view t, std::string_view whole) {
  bool neg = false;
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
    neg = t.front() == '-';
    t.remove_prefix(1);
  }
  Term term;
  for (std::string_view marker : {std::string_view("√2"), std::string_view("sqrt2"),
                                  std::string_view("sqrt(2)")}) {
    if (t.size() >= marker.size() && t.substr(t.size() - marker.size()) == marker) {
      t.remove_suffix(marker.size());
      if (!t.empty() && t.back() == '*') t.remove_suffix(1);
      term.irrational = true;
      break;
    }
  }
  if (t.empty()) {
    if (!term.irrational) throw ParseError("empty term in '" + std::string(whole) + "'");
    term.value = Rational(1);
  } else {
    term.value = Rational::parse(t);
  }
  if (neg) term.value = -term.value;
  return term;
}

}  // namespace

QuadNum parse_quadnum(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty number");
  std::string_view s = compact;
  Rational a, b;
  bool seen_a = false, seen_b = false;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+' || s[i] == '-') {
      Term term = parse_term(s.substr(start, i - start), text);
      bool& seen = term.irrational ? seen_b : seen_a;
      if (seen) throw ParseError("repeated term in '" + std::string(text) + "'");
      seen = true;
      (term.irrational ? b : a) = term.value;
      start = i;
    }
  }
  return QuadNum(a, b);
}

}  // namespace octocf
