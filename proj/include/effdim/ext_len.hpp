#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace effdim {

/// A length in N_0 extended by a top element "inf".
///
/// Addition saturates at infinity, every finite value compares below
/// infinity, and removing a finite amount from infinity leaves infinity.
class ExtLen {
 public:
  constexpr ExtLen() = default;
  constexpr explicit ExtLen(std::uint64_t value) : value_(value) {}

  static constexpr ExtLen infinity() {
    ExtLen e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  std::uint64_t value() const {
    if (infinite_) throw std::domain_error("ExtLen::value() called on infinity");
    return value_;
  }

  /// Finite operand must not exceed a finite *this.
  ExtLen minus(std::uint64_t k) const {
    if (infinite_) return *this;
    if (k > value_) throw std::domain_error("ExtLen subtraction below zero");
    return ExtLen(value_ - k);
  }

  friend constexpr ExtLen operator+(ExtLen a, ExtLen b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtLen(a.value_ + b.value_);
  }
  friend constexpr ExtLen operator+(ExtLen a, std::uint64_t k) { return a + ExtLen(k); }

  friend constexpr bool operator==(const ExtLen& a, const ExtLen& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtLen& a, const ExtLen& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace effdim
