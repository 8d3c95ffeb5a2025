#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

namespace brauerlab::gf {

/// Binary polynomial modulus p(x) of degree n; bit j of the mask is the
/// coefficient of x^j.
inline constexpr std::uint32_t kAesModulus = 0x11B;       // x^8+x^4+x^3+x+1
inline constexpr std::uint32_t kModulusX8X4X3X1 = 0x119;  // x^8+x^4+x^3+1, reducible
inline constexpr std::uint32_t kGf4Modulus = 0x7;         // x^2+x+1

inline constexpr unsigned kMaxDegree = 16;

/// True iff `modulus` is monic of degree `degree` and has no factor of
/// degree 1..degree/2 over Z2 (exhaustive trial division).
bool is_irreducible(unsigned degree, std::uint32_t modulus);

/// Z2[x]/<p(x)>. A spec built through the public constructor is always a
/// field; quotient_ring() admits reducible moduli so the ring can still be
/// experimented with, but then inverse() may fail.
class FieldSpec {
 public:
  FieldSpec(unsigned degree, std::uint32_t modulus);

  static FieldSpec quotient_ring(unsigned degree, std::uint32_t modulus);

  unsigned degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return std::uint32_t{1} << degree_; }
  std::uint32_t mask() const { return order() - 1; }
  bool is_field() const { return is_field_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldSpec(unsigned degree, std::uint32_t modulus, bool require_irreducible);

  unsigned degree_;
  std::uint32_t modulus_;
  bool is_field_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

FieldPtr make_field(unsigned degree, std::uint32_t modulus);
FieldPtr make_quotient_ring(unsigned degree, std::uint32_t modulus);
/// Shared GF(2^8) with the AES modulus.
const FieldPtr& aes_field();

/// Value type: coefficient mask plus a handle to its (immutable, shared) spec.
class FieldElement {
 public:
  FieldElement(FieldPtr spec, std::uint32_t bits);

  static FieldElement zero(FieldPtr spec) { return FieldElement(std::move(spec), 0); }
  static FieldElement one(FieldPtr spec) { return FieldElement(std::move(spec), 1); }

  std::uint32_t bits() const { return bits_; }
  const FieldSpec& spec() const { return *spec_; }
  const FieldPtr& spec_ptr() const { return spec_; }
  bool is_zero() const { return bits_ == 0; }

  /// Coefficient a_j.
  bool coefficient(unsigned j) const { return (bits_ >> j) & 1u; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.bits_ == b.bits_ && *a.spec_ == *b.spec_;
  }

 private:
  FieldPtr spec_;
  std::uint32_t bits_;
};

/// Carry-less product of two reduced masks, reduced modulo spec's p(x).
std::uint32_t multiply_bits(std::uint32_t a, std::uint32_t b, const FieldSpec& spec);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);

/// Multiplicative inverse by exhaustive search over the nonzero elements.
/// Throws DomainError for zero or for a non-unit of a reducible ring.
FieldElement inverse(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

inline constexpr std::uint8_t kAffineConstant = 0x63;  // (c_0..c_7) = (1,1,0,0,0,1,1,0)

enum class AffineMix {
  circulant,  // b_j = a_j + a_{j+4} + a_{j+5} + a_{j+6} + a_{j+7} (indices mod 8)
  identity,   // b_j = a_j; test mode
};

/// b_j = mix(a)_j + c_j, returns sum b_s x^s + v. Requires degree 8.
FieldElement affine_tau(const FieldElement& a, std::uint8_t c, const FieldElement& v,
                        AffineMix mix = AffineMix::circulant);

/// Lowercase hex, ceil(n/4) digits.
std::string to_hex(const FieldElement& a);

}  // namespace brauerlab::gf
