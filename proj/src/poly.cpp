#include <wtensor/poly.hpp>

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wtensor {

static const BigInt kZero(0);

RingPoly RingPoly::monomial(const BigInt& coeff, int deg) {
  RingPoly p;
  if (coeff != 0) {
    p.c_.assign(static_cast<size_t>(deg) + 1, kZero);
    p.c_.back() = coeff;
  }
  return p;
}

RingPoly RingPoly::from_coeffs(std::vector<BigInt> coeffs) {
  RingPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

const BigInt& RingPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

void RingPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RingPoly& RingPoly::operator+=(const RingPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RingPoly& RingPoly::operator-=(const RingPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RingPoly operator*(const RingPoly& a, const RingPoly& b) {
  if (a.is_zero() || b.is_zero()) return RingPoly();
  RingPoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

RingPoly& RingPoly::operator*=(const RingPoly& o) {
  *this = *this * o;
  return *this;
}

RingPoly RingPoly::operator-() const {
  RingPoly out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

RingPoly RingPoly::pow(unsigned e) const {
  RingPoly result(1);
  RingPoly base(*this);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

BigInt RingPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RingPoly RingPoly::subst(const RingPoly& x) const {
  RingPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + RingPoly(*it);
  return acc;
}

std::string RingPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "lam";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return s[i]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad polynomial literal '" + s + "': " + why);
  }
};

BigInt parse_uint(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected digits");
  return BigInt(c.s.substr(start, c.i - start));
}

// One term: [number] ["*"] ["lam" ["^" exp]]
RingPoly parse_term(Cursor& c, bool negative) {
  c.skip_ws();
  bool have_coeff = false;
  BigInt coeff(1);
  if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    coeff = parse_uint(c);
    have_coeff = true;
  }
  c.skip_ws();
  if (c.i < c.s.size() && c.s[c.i] == '*') {
    if (!have_coeff) c.fail("'*' without coefficient");
    ++c.i;
    c.skip_ws();
  }
  int deg = 0;
  if (c.s.compare(c.i, 3, "lam") == 0) {
    c.i += 3;
    deg = 1;
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == '^') {
      ++c.i;
      BigInt e = parse_uint(c);
      if (!e.fits_sint_p() || e < 0 || e > 4096) c.fail("exponent out of range");
      deg = static_cast<int>(e.get_si());
    }
  } else if (!have_coeff) {
    c.fail("expected a coefficient or 'lam'");
  }
  if (negative) coeff = -coeff;
  return RingPoly::monomial(coeff, deg);
}

}  // namespace

RingPoly RingPoly::parse(const std::string& text) {
  Cursor c{text};
  if (c.done()) c.fail("empty");
  RingPoly out;
  bool first = true;
  while (!c.done()) {
    bool negative = false;
    c.skip_ws();
    if (!first) {
      if (c.peek() == '+') {
        ++c.i;
      } else if (c.peek() == '-') {
        negative = true;
        ++c.i;
      } else {
        c.fail("expected '+' or '-' between terms");
      }
      c.skip_ws();
    }
    // A leading sign on the (sub)term itself, e.g. "-3" or "+ -3*lam".
    if (c.i < c.s.size() && (c.peek() == '-' || c.peek() == '+')) {
      if (c.peek() == '-') negative = !negative;
      ++c.i;
    }
    out += parse_term(c, negative);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RingPoly& p) { return os << p.str(); }

}  // namespace wtensor
