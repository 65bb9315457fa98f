#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace l6n1 {

// Sparse integer Laurent polynomial in the bracket variable A.
// Coefficients are kept exact: arithmetic is overflow-checked, which the
// crossing cap keeps far out of reach (|coeff| <= 4^n for n crossings).
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(std::int64_t constant);
  static Laurent monomial(std::int64_t coeff, int exponent);

  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return terms_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  // Substitute A -> A^-1.
  Laurent mirror() const;

  // Integer power, exponent may be negative only for +-A^k monomials.
  static Laurent power(const Laurent& base, int e);

  // "-1*A^-4 + 2*A^0 + 1*A^8" style, exponent-sorted; "0" when empty.
  std::string str() const;
  // Same polynomial rendered in t = A^-4; exponents of t in quarters must be
  // integral or the quarter is shown as t^(k/4).
  std::string str_t() const;

private:
  void add_term(int exponent, std::int64_t c);
  std::map<int, std::int64_t> terms_;
};

}  // namespace l6n1
