#include "proxyvote/ratio.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "proxyvote/errors.hpp"

namespace proxyvote {

Ratio::Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den <= 0) throw ModelError("ratio denominator must be positive");
  const auto g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ratio Ratio::of(std::int64_t opt, std::int64_t score) {
  if (opt == 0) return Ratio(1, 1);
  if (score == 0) return infinite();
  return Ratio(opt, score);
}

Ratio Ratio::infinite() noexcept {
  Ratio r;
  r.infinite_ = true;
  return r;
}

std::string Ratio::to_string() const {
  if (infinite_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::parse(const std::string& text) {
  if (text == "inf") return infinite();
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto num = std::stoll(text, &used);
      if (used != text.size()) throw ModelError("bad ratio '" + text + "'");
      return Ratio(num, 1);
    }
    const auto num_text = text.substr(0, slash);
    const auto den_text = text.substr(slash + 1);
    const auto num = std::stoll(num_text, &used);
    if (used != num_text.size()) throw ModelError("bad ratio '" + text + "'");
    const auto den = std::stoll(den_text, &used);
    if (used != den_text.size()) throw ModelError("bad ratio '" + text + "'");
    return Ratio(num, den);
  } catch (const std::logic_error&) {
    throw ModelError("bad ratio '" + text + "'");
  }
}

double Ratio::to_double() const noexcept {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  const auto lhs = static_cast<__int128>(a.num_) * b.den_;
  const auto rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace proxyvote
