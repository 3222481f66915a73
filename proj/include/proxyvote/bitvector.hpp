#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace proxyvote {

/// Fixed-length bit vector indexed by proposal. Ordering is lexicographic
/// with index 0 as the most significant position, so it agrees with the
/// ordering of to_string().
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  /// Parses a string of '0' and '1'. Throws ModelError on other characters.
  static BitVector from_string(std::string_view bits);

  /// Low `size` bits of `code`, read with index 0 as the highest bit.
  static BitVector from_code(std::uint64_t code, std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void reset(std::size_t i) { set(i, false); }

  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }
  bool is_subset_of(const BitVector& other) const;

  std::vector<std::size_t> indices() const;
  std::string to_string() const;

  BitVector& operator&=(const BitVector& rhs);
  BitVector& operator|=(const BitVector& rhs);
  BitVector& operator^=(const BitVector& rhs);
  BitVector operator~() const;

  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  friend bool operator==(const BitVector& a, const BitVector& b) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

  /// popcount((a ^ b) & mask); all three must have equal size.
  static std::size_t masked_mismatch(const BitVector& a, const BitVector& b,
                                     const BitVector& mask);

 private:
  void check_same_size(const BitVector& other) const;
  void clear_padding() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace proxyvote
