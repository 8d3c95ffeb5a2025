#include "brauerlab/finite_field.hpp"

#include <bit>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "brauerlab/error.hpp"

namespace brauerlab::gf {
namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

// Remainder of a modulo b in Z2[x].
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

void check_same_spec(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec() == b.spec())) {
    throw std::invalid_argument("field elements belong to different fields");
  }
}

}  // namespace

bool is_irreducible(unsigned degree, std::uint32_t modulus) {
  if (degree == 0 || degree > kMaxDegree) return false;
  if (poly_degree(modulus) != static_cast<int>(degree)) return false;
  for (unsigned d = 1; 2 * d <= degree; ++d) {
    for (std::uint32_t f = 1u << d; f < (2u << d); ++f) {
      if (poly_mod(modulus, f) == 0) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(unsigned degree, std::uint32_t modulus) : FieldSpec(degree, modulus, true) {}

FieldSpec FieldSpec::quotient_ring(unsigned degree, std::uint32_t modulus) {
  return FieldSpec(degree, modulus, false);
}

FieldSpec::FieldSpec(unsigned degree, std::uint32_t modulus, bool require_irreducible)
    : degree_(degree), modulus_(modulus), is_field_(false) {
  if (degree == 0 || degree > kMaxDegree) {
    throw std::invalid_argument("field degree must be in 1.." + std::to_string(kMaxDegree));
  }
  if (poly_degree(modulus) != static_cast<int>(degree)) {
    throw std::invalid_argument("modulus must be monic of degree " + std::to_string(degree));
  }
  is_field_ = is_irreducible(degree, modulus);
  if (require_irreducible && !is_field_) {
    std::ostringstream msg;
    msg << "modulus 0x" << std::hex << modulus << " is reducible over Z2";
    throw std::invalid_argument(msg.str());
  }
}

FieldPtr make_field(unsigned degree, std::uint32_t modulus) {
  return std::make_shared<const FieldSpec>(degree, modulus);
}

FieldPtr make_quotient_ring(unsigned degree, std::uint32_t modulus) {
  return std::make_shared<const FieldSpec>(FieldSpec::quotient_ring(degree, modulus));
}

const FieldPtr& aes_field() {
  static const FieldPtr field = make_field(8, kAesModulus);
  return field;
}

FieldElement::FieldElement(FieldPtr spec, std::uint32_t bits) : spec_(std::move(spec)), bits_(bits) {
  if (!spec_) throw std::invalid_argument("field element needs a spec");
  if (bits_ >= spec_->order()) {
    throw std::invalid_argument("field element mask " + std::to_string(bits_) + " is not reduced");
  }
}

std::uint32_t multiply_bits(std::uint32_t a, std::uint32_t b, const FieldSpec& spec) {
  const std::uint32_t top = spec.order();
  std::uint32_t result = 0;
  while (b != 0) {
    if (b & 1u) result ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= spec.modulus();
  }
  return result;
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  check_same_spec(a, b);
  return FieldElement(a.spec_ptr(), a.bits() ^ b.bits());
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  check_same_spec(a, b);
  return FieldElement(a.spec_ptr(), multiply_bits(a.bits(), b.bits(), a.spec()));
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw DomainError("zero has no multiplicative inverse");
  const FieldSpec& spec = a.spec();
  for (std::uint32_t candidate = 1; candidate < spec.order(); ++candidate) {
    if (multiply_bits(a.bits(), candidate, spec) == 1) return FieldElement(a.spec_ptr(), candidate);
  }
  throw DomainError("element " + to_hex(a) + " is not a unit of the quotient ring");
}

FieldElement affine_tau(const FieldElement& a, std::uint8_t c, const FieldElement& v, AffineMix mix) {
  if (a.spec().degree() != 8) throw std::invalid_argument("affine_tau requires a degree-8 field");
  check_same_spec(a, v);
  std::uint32_t b = 0;
  for (unsigned j = 0; j < 8; ++j) {
    bool bit = a.coefficient(j);
    if (mix == AffineMix::circulant) {
      for (unsigned k = 4; k < 8; ++k) bit ^= a.coefficient((j + k) % 8);
    }
    bit ^= ((c >> j) & 1u) != 0;
    b |= static_cast<std::uint32_t>(bit) << j;
  }
  return FieldElement(a.spec_ptr(), b ^ v.bits());
}

std::string to_hex(const FieldElement& a) {
  const unsigned digits = (a.spec().degree() + 3) / 4;
  std::ostringstream out;
  out << std::hex << std::setw(static_cast<int>(digits)) << std::setfill('0') << a.bits();
  return out.str();
}

}  // namespace brauerlab::gf
