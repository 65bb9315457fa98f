#include "l6n1/laurent.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace l6n1 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

Laurent::Laurent(std::int64_t constant) {
  if (constant != 0) terms_[0] = constant;
}

Laurent Laurent::monomial(std::int64_t coeff, int exponent) {
  Laurent p;
  if (coeff != 0) p.terms_[exponent] = coeff;
  return p;
}

std::int64_t Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void Laurent::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_[exponent] = c;
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, checked_mul(c1, c2));
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::mirror() const {
  Laurent r;
  for (auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Laurent Laurent::power(const Laurent& base, int e) {
  if (e == 0) return Laurent(1);
  if (e < 0) {
    if (base.terms_.size() != 1) throw std::domain_error("negative power of non-monomial");
    auto [exp, c] = *base.terms_.begin();
    if (c != 1 && c != -1) throw std::domain_error("negative power of non-unit monomial");
    return power(Laurent::monomial(c, -exp), -e);
  }
  Laurent r(1);
  for (int i = 0; i < e; i++) r = r * base;
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c << "*A^" << e;
    first = false;
  }
  return os.str();
}

std::string Laurent::str_t() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << " + ";
    int te = -e;  // t = A^-4
    if (te % 4 == 0) {
      os << c << "*t^" << te / 4;
    } else {
      os << c << "*t^(" << te << "/4)";
    }
    first = false;
  }
  return os.str();
}

}  // namespace l6n1
