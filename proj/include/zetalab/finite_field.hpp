#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zetalab/modpoly.hpp"

namespace zetalab::field {

struct FieldLimits {
  std::uint64_t max_prime = std::uint64_t{1} << 31;
  unsigned max_degree = 24;
};

// Trial division; adequate for the p <= 2^31 bound enforced on fields.
bool is_prime(std::uint64_t n);

// Smallest monic irreducible polynomial of degree e over F_p, where
// polynomials are ordered by their coefficient list read from the top degree
// down (equivalently by the integer sum c_i p^i). Throws CapExceeded if e is
// over the cap and BadFieldParams if p is not a prime within the limit.
modp::Poly find_irreducible(std::uint64_t p, unsigned e, const FieldLimits& limits = {});

// F_{p^e} = F_p[x]/(modulus). Immutable; shared between elements.
class FieldParams {
 public:
  static std::shared_ptr<const FieldParams> create(std::uint64_t p, unsigned e, modp::Poly modulus,
                                                   const FieldLimits& limits = {});
  // Uses find_irreducible(p, e).
  static std::shared_ptr<const FieldParams> standard(std::uint64_t p, unsigned e,
                                                     const FieldLimits& limits = {});

  std::uint64_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  const modp::Poly& modulus() const noexcept { return modulus_; }
  mpz_class order() const;

  friend bool operator==(const FieldParams& a, const FieldParams& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldParams(std::uint64_t p, unsigned e, modp::Poly modulus)
      : p_(p), e_(e), modulus_(std::move(modulus)) {}
  std::uint64_t p_;
  unsigned e_;
  modp::Poly modulus_;
};

using FieldPtr = std::shared_ptr<const FieldParams>;

class FieldElement {
 public:
  // Coefficients are reduced mod p and padded to length e; a longer list is
  // reduced modulo the field modulus.
  FieldElement(FieldPtr field, std::vector<std::uint64_t> coeffs);
  static FieldElement zero(FieldPtr field);
  static FieldElement one(FieldPtr field);
  static FieldElement from_int(FieldPtr field, long long value);
  // Inverse of index(): base-p digits, constant coefficient least significant.
  static FieldElement from_index(FieldPtr field, std::uint64_t index);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  std::uint64_t index() const;
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  std::vector<std::uint64_t> coeffs_;
};

enum class Op { Add, Sub, Mul, Div };

// Exact field arithmetic. FieldMismatch if the operands live in different
// fields, DivisionByZero for a zero divisor.
FieldElement arith(const FieldElement& a, const FieldElement& b, Op op);
FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
FieldElement inverse(const FieldElement& a);
// Square-and-multiply for any nonnegative exponent.
FieldElement pow(const FieldElement& a, const mpz_class& exponent);

// All q elements in index order (lexicographic in the coefficient list with
// the constant coefficient varying fastest).
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FieldElement;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = FieldElement;

    iterator(const FieldPtr* field, std::uint64_t index) : field_(field), index_(index) {}
    FieldElement operator*() const { return FieldElement::from_index(*field_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++index_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const FieldPtr* field_;
    std::uint64_t index_;
  };

  explicit ElementRange(FieldPtr field);
  iterator begin() const { return iterator(&field_, 0); }
  iterator end() const { return iterator(&field_, size_); }
  std::uint64_t size() const noexcept { return size_; }

 private:
  FieldPtr field_;
  std::uint64_t size_;
};

// Throws CapExceeded when q does not fit the 64-bit index space.
ElementRange enumerate(const FieldPtr& field);

}  // namespace zetalab::field
