#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace edgereg {

/// Deterministic primality test (trial division; inputs are below 2^31).
bool is_prime(std::uint64_t n);

/// Base field k: the rationals (characteristic 0) or GF(p) with p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws InputError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q", "f<p>" and "fp:<p>".
  static FieldSpec parse(std::string_view name);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  /// "q", "f2", "f3", otherwise "fp:<p>".
  std::string name() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {}
  std::uint32_t characteristic_ = 0;
};

/// Arithmetic on least nonnegative residues mod p.
class ModP {
 public:
  explicit ModP(std::uint32_t p) : p_(p) {}

  std::uint32_t modulus() const { return p_; }
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + (p_ - b); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  /// a != 0
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

}  // namespace edgereg
