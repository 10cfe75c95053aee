#include "tanaka/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace tanaka {

Rational rat(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t a, std::size_t b) {
    if (a >= b) return false;
    return std::all_of(s.begin() + a, s.begin() + b,
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  bool ok = slash == std::string::npos ? digits(start, s.size())
                                       : digits(start, slash) && digits(slash + 1, s.size());
  if (!ok) throw ParseError("malformed rational: " + std::string(text));
  if (s[0] == '+') s.erase(0, 1);
  if (slash == std::string::npos) return Rational(mpz_class(s));
  std::size_t sl = s.find('/');
  mpz_class n(s.substr(0, sl));
  mpz_class d(s.substr(sl + 1));
  if (d == 0) throw ParseError("zero denominator: " + std::string(text));
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm2();
  Gaussian c = o.conj();
  *this *= c;
  re_ /= n;
  im_ /= n;
  return *this;
}

void fma_into(Gaussian& acc, const Gaussian& b, const Gaussian& c) {
  if (b.is_zero() || c.is_zero()) return;
  acc += b * c;
}

std::string Gaussian::str() const {
  if (sgn(im_) == 0) return to_string(re_);
  std::string out = to_string(re_);
  if (sgn(im_) > 0) {
    out += "+" + to_string(im_);
  } else {
    out += "-" + to_string(Rational(-im_));
  }
  return out + "*i";
}

namespace {

std::string pretty_imag(const Rational& q) {
  std::string out = sgn(q) < 0 ? "-" : "";
  mpz_class num = abs(q.get_num());
  if (num != 1) out += num.get_str();
  out += "i";
  if (q.get_den() != 1) out += "/" + q.get_den().get_str();
  return out;
}

}  // namespace

std::string Gaussian::pretty() const {
  if (sgn(im_) == 0) return to_string(re_);
  if (sgn(re_) == 0) return pretty_imag(im_);
  return "(" + str() + ")";
}

Gaussian Gaussian::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw ParseError("empty scalar");

  std::vector<std::string> terms;
  std::size_t begin = 0;
  for (std::size_t p = 1; p < s.size(); ++p) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != '*') {
      terms.push_back(s.substr(begin, p - begin));
      begin = p;
    }
  }
  terms.push_back(s.substr(begin));

  Gaussian out;
  for (std::string t : terms) {
    if (t.find('i') == std::string::npos) {
      out += Gaussian(parse_rational(t));
      continue;
    }
    if (std::count(t.begin(), t.end(), 'i') != 1) throw ParseError("malformed scalar: " + s);
    std::string sign;
    if (t[0] == '+' || t[0] == '-') {
      sign = t.substr(0, 1);
      t = t.substr(1);
    }
    std::string rest;
    for (char c : t)
      if (c != 'i' && c != '*') rest.push_back(c);
    if (rest.empty()) rest = "1";
    if (rest[0] == '/') rest = "1" + rest;
    out += Gaussian(Rational(0), parse_rational(sign + rest));
  }
  return out;
}

}  // namespace tanaka
