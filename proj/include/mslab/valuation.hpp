#pragma once

#include <optional>
#include <string>

namespace mslab {

/// Integer valuation with +infinity (the valuation of zero).
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(long value) : value_(value) {}
  static Valuation infinity() { return Valuation(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }
  long value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend bool operator<(const Valuation& lhs, const Valuation& rhs) {
    if (lhs.is_infinite()) return false;
    if (rhs.is_infinite()) return true;
    return *lhs.value_ < *rhs.value_;
  }
  friend Valuation operator+(const Valuation& lhs, const Valuation& rhs) {
    if (lhs.is_infinite() || rhs.is_infinite()) return infinity();
    return Valuation(*lhs.value_ + *rhs.value_);
  }

 private:
  explicit Valuation(std::optional<long> value) : value_(value) {}
  std::optional<long> value_{0};
};

}  // namespace mslab
