#include "proxyvote/bench/completion.hpp"

#include <cmath>

#include "proxyvote/errors.hpp"

namespace proxyvote::bench {

std::string to_string(ExponentSign sign) {
  return sign == ExponentSign::AsWritten ? "as-written" : "negated";
}

ExponentSign parse_exponent_sign(const std::string& text) {
  if (text == "as-written") return ExponentSign::AsWritten;
  if (text == "negated") return ExponentSign::Negated;
  throw ModelError("unknown exponent sign '" + text + "'");
}

double similarity(const ItemFeatureRow& a, const ItemFeatureRow& b, ExponentSign sign) {
  if (a.tag.size() != b.tag.size()) throw ModelError("tag dimension mismatch");
  double sq = 0.0;
  for (std::size_t d = 0; d < a.tag.size(); ++d) {
    const double diff = a.tag[d] - b.tag[d];
    sq += diff * diff;
  }
  double norm = std::sqrt(sq);
  if (sign == ExponentSign::Negated) norm = -norm;

  std::size_t dot = 0, na = 0, nb = 0;
  for (std::size_t g = 0; g < kGenreDims; ++g) {
    dot += a.genre[g] && b.genre[g];
    na += a.genre[g];
    nb += b.genre[g];
  }
  const double cosine =
      na == 0 || nb == 0 ? 0.0
                         : static_cast<double>(dot) / std::sqrt(static_cast<double>(na * nb));
  return std::pow(1.2, norm) * (0.5 + cosine);
}

SimilarityMatrix::SimilarityMatrix(std::span<const ItemFeatureRow* const> items,
                                   ExponentSign sign)
    : n_(items.size()), values_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      const double s = similarity(*items[i], *items[j], sign);
      values_[i * n_ + j] = s;
      values_[j * n_ + i] = s;
    }
  }
}

double mean_rating(std::span<const Review> reviews) {
  if (reviews.empty()) throw NoReviews("user has no reviews");
  double sum = 0.0;
  for (const auto& r : reviews) sum += r.rating;
  return sum / static_cast<double>(reviews.size());
}

std::vector<double> complete_intrinsic(std::span<const Review> reviews,
                                       const SimilarityMatrix& sim) {
  const double mean = mean_rating(reviews);
  std::vector<double> out(sim.size(), 0.0);
  std::vector<bool> reviewed(sim.size(), false);
  for (const auto& r : reviews) {
    if (r.item >= sim.size()) throw ModelError("review of an unknown item");
    out[r.item] = r.rating;
    reviewed[r.item] = true;
  }
  for (std::size_t i = 0; i < sim.size(); ++i) {
    if (reviewed[i]) continue;
    double num = 0.0, den = 0.0;
    for (const auto& r : reviews) {
      const double s = sim(i, r.item);
      num += r.rating * s;
      den += s;
    }
    out[i] = den > 0.0 ? num / den : mean;
  }
  return out;
}

BitVector approvalize(std::span<const double> completed, std::span<const Review> reviews) {
  // Weighted averages of equal ratings can land an ulp below the mean.
  constexpr double kTieSlack = 1e-9;
  const double mean = mean_rating(reviews);
  BitVector ballot(completed.size());
  for (std::size_t i = 0; i < completed.size(); ++i) {
    if (completed[i] >= mean - kTieSlack) ballot.set(i);
  }
  return ballot;
}

}  // namespace proxyvote::bench
