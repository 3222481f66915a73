#include "proxyvote/bitvector.hpp"

#include <bit>

#include "proxyvote/errors.hpp"

namespace proxyvote {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_(word_count(size), value ? ~std::uint64_t{0} : 0) {
  clear_padding();
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw ModelError("invalid bit character '" + std::string(1, bits[i]) + "'");
    }
  }
  return out;
}

BitVector BitVector::from_code(std::uint64_t code, std::size_t size) {
  BitVector out(size);
  for (std::size_t i = 0; i < size; ++i) {
    if ((code >> (size - 1 - i)) & 1U) out.set(i);
  }
  return out;
}

bool BitVector::test(std::size_t i) const {
  if (i >= size_) throw ModelError("bit index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= size_) throw ModelError("bit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

BitVector& BitVector::operator&=(const BitVector& rhs) {
  check_same_size(rhs);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= rhs.words_[w];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& rhs) {
  check_same_size(rhs);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= rhs.words_[w];
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
  check_same_size(rhs);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= rhs.words_[w];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out(*this);
  for (auto& w : out.words_) w = ~w;
  out.clear_padding();
  return out;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  const std::size_t common = std::min(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < common; ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const auto bit = std::countr_zero(diff);
    const std::size_t index = w * kWordBits + static_cast<std::size_t>(bit);
    if (index < a.size_ && index < b.size_) {
      // The vector holding 0 at the first differing index sorts first.
      return ((a.words_[w] >> bit) & 1U) ? std::strong_ordering::greater
                                          : std::strong_ordering::less;
    }
    break;
  }
  return a.size_ <=> b.size_;
}

std::size_t BitVector::masked_mismatch(const BitVector& a, const BitVector& b,
                                       const BitVector& mask) {
  a.check_same_size(b);
  a.check_same_size(mask);
  std::size_t total = 0;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount((a.words_[w] ^ b.words_[w]) & mask.words_[w]));
  }
  return total;
}

void BitVector::check_same_size(const BitVector& other) const {
  if (size_ != other.size_) {
    throw ModelError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                     std::to_string(other.size_));
  }
}

void BitVector::clear_padding() noexcept {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

}  // namespace proxyvote
