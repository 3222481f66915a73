#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string_view>
#include <vector>

namespace proxyvote::bench {

using UserId = std::int64_t;
using ItemId = std::int64_t;

struct Rating {
  UserId user = 0;
  ItemId item = 0;
  double rating = 0.0;  // [0.5, 5.0]
};

struct RatingsTable {
  std::vector<Rating> entries;

  /// Distinct users, ascending.
  std::vector<UserId> users() const;
  /// Throws ModelError on duplicate (user, item) pairs or out-of-range ratings.
  void validate() const;
};

inline constexpr std::array<std::string_view, 19> kGenres = {
    "Action",  "Adventure", "Animation", "Children", "Comedy",  "Crime",    "Documentary",
    "Drama",   "Fantasy",   "Film-Noir", "Horror",   "IMAX",    "Musical",  "Mystery",
    "Romance", "Sci-Fi",    "Thriller",  "War",      "Western"};
// Unknown genre names share one trailing dimension.
inline constexpr std::size_t kOtherGenre = kGenres.size();
inline constexpr std::size_t kGenreDims = kGenres.size() + 1;

struct ItemFeatureRow {
  std::vector<double> tag;  // relevance per tag, in [0, 1]
  std::array<bool, kGenreDims> genre{};
  bool genreless = false;  // "(no genres listed)"
};

struct ItemFeatures {
  std::size_t tag_dim = 0;
  // Only items with both a movies.csv row and a full genome row.
  std::map<ItemId, ItemFeatureRow> items;

  const ItemFeatureRow& at(ItemId item) const;
  bool contains(ItemId item) const { return items.contains(item); }
  void validate() const;
};

struct Dataset {
  RatingsTable ratings;
  ItemFeatures features;
};

// Readers take the standard MovieLens headers:
//   ratings.csv        userId,movieId,rating,timestamp
//   genome-scores.csv  movieId,tagId,relevance
//   movies.csv         movieId,title,genres   (genres pipe-separated)
RatingsTable read_ratings(std::istream& in);
std::map<ItemId, std::vector<double>> read_genome(std::istream& in, std::size_t& tag_dim);
std::map<ItemId, ItemFeatureRow> read_movies(std::istream& in);

ItemFeatures join_features(std::map<ItemId, ItemFeatureRow> movies,
                           const std::map<ItemId, std::vector<double>>& genome,
                           std::size_t tag_dim);

Dataset ingest(const std::filesystem::path& ratings_path, const std::filesystem::path& genome_path,
               const std::filesystem::path& movies_path);

}  // namespace proxyvote::bench
