#include "edgereg/field.hpp"

#include <charconv>
#include <string>

#include "edgereg/error.hpp"

namespace edgereg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InputError("field characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view name) {
  if (name == "q" || name == "Q") return rationals();
  std::string_view digits;
  if (name.starts_with("fp:")) {
    digits = name.substr(3);
  } else if (name.starts_with("f")) {
    digits = name.substr(1);
  } else {
    throw InputError("unknown field '" + std::string(name) + "' (expected q, f2, f3 or fp:<p>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InputError("unknown field '" + std::string(name) + "' (expected q, f2, f3 or fp:<p>)");
  }
  return prime(p);
}

std::string FieldSpec::name() const {
  if (characteristic_ == 0) return "q";
  if (characteristic_ == 2 || characteristic_ == 3) return "f" + std::to_string(characteristic_);
  return "fp:" + std::to_string(characteristic_);
}

std::uint32_t ModP::inv(std::uint32_t a) const {
  // Fermat: a^(p-2)
  std::uint32_t result = 1;
  std::uint32_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace edgereg
