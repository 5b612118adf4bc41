#pragma once

// Exact arithmetic in F_p and small extensions F_{p^m}.
//
// Elements of F_{p^m} are polynomials in t of degree < m over F_p, reduced
// modulo a fixed monic irreducible of degree m.  The modulus is not chosen by
// the caller: for a given (p, m) it is always the lexicographically smallest
// monic irreducible (coefficient tuple ordered from the x^{m-1} coefficient
// down to the constant term), so any two contexts with the same (p, m) agree
// element-for-element.  For m = 1 the modulus is t and elements are plain
// residues mod p.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace modrep {

class FieldElement;

/// Shared immutable description of one field F_{p^m}.
class FieldCtx {
 public:
  /// Builds the field context, validating that p is prime and locating the
  /// canonical modulus by enumeration.  Throws std::invalid_argument for
  /// composite p, m = 0, or m beyond the supported bound.
  static FieldCtx make(std::uint32_t p, std::uint32_t m = 1);

  std::uint32_t p() const { return d_->p; }
  std::uint32_t m() const { return d_->m; }

  /// Modulus coefficients in ascending degree order, length m + 1, monic.
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  /// Number of field elements, p^m.
  std::uint64_t size() const { return d_->size; }

  FieldElement zero() const;
  FieldElement one() const;

  /// Element from an integer residue (value may be negative or >= p).
  FieldElement from_int(std::int64_t v) const;

  /// Element from coefficients (ascending in t, at most m entries).
  FieldElement from_coeffs(const std::vector<std::int64_t>& c) const;

  /// All p^m elements in a fixed enumeration order (coefficient counter with
  /// the constant term fastest).  Intended for exhaustive small-field work.
  std::vector<FieldElement> elements() const;

  /// Same (p, m, modulus) means interchangeable arithmetic.
  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.d_ == b.d_ ||
           (a.d_->p == b.d_->p && a.d_->m == b.d_->m &&
            a.d_->modulus == b.d_->modulus);
  }
  friend bool operator!=(const FieldCtx& a, const FieldCtx& b) {
    return !(a == b);
  }

  // Limb-level helpers used by the dense matrix code.  Each element is m
  // consecutive uint32 limbs (ascending degree), values already reduced.
  void raw_add(const std::uint32_t* a, const std::uint32_t* b,
               std::uint32_t* out) const;
  void raw_sub(const std::uint32_t* a, const std::uint32_t* b,
               std::uint32_t* out) const;
  void raw_neg(const std::uint32_t* a, std::uint32_t* out) const;
  void raw_mul(const std::uint32_t* a, const std::uint32_t* b,
               std::uint32_t* out) const;

 private:
  struct Data {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t size = 0;
    std::vector<std::uint32_t> modulus;
  };

  explicit FieldCtx(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
  friend class FieldElement;
};

/// One element of F_{p^m}, tied to its context.  Mixing contexts in any
/// binary operation throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(FieldCtx ctx, std::vector<std::uint32_t> coeffs);

  const FieldCtx& ctx() const { return ctx_; }

  /// Coefficient of t^i, 0 <= i < m.
  std::uint32_t coeff(std::uint32_t i) const { return c_[i]; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  bool is_zero() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  /// Division; throws std::domain_error when dividing by zero.
  FieldElement operator/(const FieldElement& o) const;

  /// Multiplicative inverse; throws std::domain_error on zero.
  FieldElement inverse() const;

  FieldElement pow(std::uint64_t e) const;

  /// The Frobenius map x -> x^p.
  FieldElement frobenius() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

  /// Renders as a polynomial in t, e.g. "0", "3", "t+1", "2t+4".
  std::string to_string() const;

 private:
  FieldCtx ctx_;
  std::vector<std::uint32_t> c_;  // length m, each < p
};

/// Carries an element of the prime field F_p into an extension of the same p.
/// Throws std::invalid_argument if the source is not a prime-field element or
/// the characteristics differ.
FieldElement embed(const FieldElement& a, const FieldCtx& target);

/// Both roots (alpha, alpha^p) in F_{p^2} of a monic quadratic x^2 + a x + b
/// that is irreducible over F_p.  a and b live in the prime field, ctx2 must
/// be the degree-2 extension for the same p.  The first root is the earliest
/// one in the context's element enumeration order, so the result is
/// deterministic.  Throws std::domain_error when the quadratic has a root in
/// F_p already.
std::pair<FieldElement, FieldElement> quadratic_roots(const FieldElement& a,
                                                      const FieldElement& b,
                                                      const FieldCtx& ctx2);

}  // namespace modrep
