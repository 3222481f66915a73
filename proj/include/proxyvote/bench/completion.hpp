#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "proxyvote/bench/dataset.hpp"
#include "proxyvote/bitvector.hpp"

namespace proxyvote::bench {

// AsWritten: 1.2^(+|tag_i - tag_j|), which grows with tag distance.
// Negated:   1.2^(-|tag_i - tag_j|).
enum class ExponentSign { AsWritten, Negated };

std::string to_string(ExponentSign sign);
ExponentSign parse_exponent_sign(const std::string& text);

/// 1.2^(+-|tag_i - tag_j|) * (0.5 + cos(genre_i, genre_j)), Euclidean tag
/// norm. The cosine term is 0 when either genre vector is empty.
double similarity(const ItemFeatureRow& a, const ItemFeatureRow& b, ExponentSign sign);

/// Pairwise similarities over a fixed item list.
class SimilarityMatrix {
 public:
  SimilarityMatrix(std::span<const ItemFeatureRow* const> items, ExponentSign sign);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

struct Review {
  std::size_t item = 0;  // index into the similarity matrix
  double rating = 0.0;
};

double mean_rating(std::span<const Review> reviews);

/// Reviewed items keep their rating; every other item gets the
/// similarity-weighted average of the reviewed ratings, or the user's mean
/// when all weights vanish. Throws NoReviews on an empty review list.
std::vector<double> complete_intrinsic(std::span<const Review> reviews,
                                       const SimilarityMatrix& sim);

/// Approve iff completed rating >= the user's mean reviewed rating (ties,
/// up to 1e-9, approve).
BitVector approvalize(std::span<const double> completed, std::span<const Review> reviews);

}  // namespace proxyvote::bench
