#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace proxyvote {

/// Exact approximation ratio opt / score. A zero score yields Infinite (or 1
/// when opt is also zero: every proposal is then optimal). Infinite
/// compares greater than every finite ratio.
class Ratio {
 public:
  /// Reduced fraction num/den; den must be positive.
  Ratio(std::int64_t num, std::int64_t den);

  static Ratio of(std::int64_t opt, std::int64_t score);
  static Ratio infinite() noexcept;

  bool is_infinite() const noexcept { return infinite_; }
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  /// "8/5", "10", or "inf".
  std::string to_string() const;
  /// Parses the to_string() form.
  static Ratio parse(const std::string& text);
  double to_double() const noexcept;

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept;

 private:
  Ratio() = default;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool infinite_ = false;
};

}  // namespace proxyvote
