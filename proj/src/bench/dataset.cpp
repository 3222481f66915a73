#include "proxyvote/bench/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "proxyvote/bench/csv.hpp"
#include "proxyvote/errors.hpp"

namespace proxyvote::bench {
namespace {

constexpr std::array<std::string_view, 4> kRatingsHeader = {"userId", "movieId", "rating",
                                                            "timestamp"};
constexpr std::array<std::string_view, 3> kGenomeHeader = {"movieId", "tagId", "relevance"};
constexpr std::array<std::string_view, 3> kMoviesHeader = {"movieId", "title", "genres"};

constexpr double kMinRating = 0.5;
constexpr double kMaxRating = 5.0;

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<UserId> RatingsTable::users() const {
  std::vector<UserId> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.user);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void RatingsTable::validate() const {
  std::set<std::pair<UserId, ItemId>> seen;
  for (const auto& e : entries) {
    if (e.rating < kMinRating || e.rating > kMaxRating) {
      throw ModelError("rating out of range for user " + std::to_string(e.user));
    }
    if (!seen.emplace(e.user, e.item).second) {
      throw ModelError("duplicate rating for user " + std::to_string(e.user) + ", movie " +
                       std::to_string(e.item));
    }
  }
}

const ItemFeatureRow& ItemFeatures::at(ItemId item) const {
  auto it = items.find(item);
  if (it == items.end()) throw ModelError("no features for movie " + std::to_string(item));
  return it->second;
}

void ItemFeatures::validate() const {
  for (const auto& [id, row] : items) {
    if (row.tag.size() != tag_dim) {
      throw ModelError("tag dimension mismatch for movie " + std::to_string(id));
    }
    const bool any = std::any_of(row.genre.begin(), row.genre.end(), [](bool b) { return b; });
    if (!any && !row.genreless) {
      throw ModelError("movie " + std::to_string(id) + " has no genre");
    }
  }
}

RatingsTable read_ratings(std::istream& in) {
  RatingsTable table;
  std::set<std::pair<UserId, ItemId>> seen;
  for (auto& row : read_csv(in, kRatingsHeader)) {
    Rating r;
    r.user = parse_integer(row.fields[0], row.line);
    r.item = parse_integer(row.fields[1], row.line);
    r.rating = parse_double(row.fields[2], row.line);
    parse_integer(row.fields[3], row.line);
    if (r.rating < kMinRating || r.rating > kMaxRating) {
      throw RangeError("rating " + row.fields[2] + " outside [0.5, 5.0]", row.line);
    }
    if (!seen.emplace(r.user, r.item).second) {
      throw ParseError("duplicate (userId, movieId) pair", row.line);
    }
    table.entries.push_back(r);
  }
  return table;
}

std::map<ItemId, std::vector<double>> read_genome(std::istream& in, std::size_t& tag_dim) {
  auto rows = read_csv(in, kGenomeHeader);
  std::vector<long long> tags;
  for (const auto& row : rows) tags.push_back(parse_integer(row.fields[1], row.line));
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  tag_dim = tags.size();

  std::map<ItemId, std::vector<double>> out;
  std::map<ItemId, std::size_t> filled;
  std::map<ItemId, std::size_t> first_line;
  for (const auto& row : rows) {
    const ItemId item = parse_integer(row.fields[0], row.line);
    const long long tag = parse_integer(row.fields[1], row.line);
    const double relevance = parse_double(row.fields[2], row.line);
    if (relevance < 0.0 || relevance > 1.0) {
      throw RangeError("relevance " + row.fields[2] + " outside [0, 1]", row.line);
    }
    auto [it, inserted] = out.try_emplace(item, tag_dim, -1.0);
    if (inserted) first_line[item] = row.line;
    const auto slot = static_cast<std::size_t>(
        std::lower_bound(tags.begin(), tags.end(), tag) - tags.begin());
    if (it->second[slot] >= 0.0) throw ParseError("duplicate (movieId, tagId) pair", row.line);
    it->second[slot] = relevance;
    ++filled[item];
  }
  for (const auto& [item, count] : filled) {
    if (count != tag_dim) {
      throw ParseError("movie " + std::to_string(item) + " lacks some tag relevances",
                       first_line[item]);
    }
  }
  return out;
}

std::map<ItemId, ItemFeatureRow> read_movies(std::istream& in) {
  std::map<ItemId, ItemFeatureRow> out;
  for (const auto& row : read_csv(in, kMoviesHeader)) {
    const ItemId item = parse_integer(row.fields[0], row.line);
    ItemFeatureRow features;
    const std::string& genres = row.fields[2];
    if (genres == "(no genres listed)" || genres.empty()) {
      features.genreless = true;
    } else {
      std::stringstream ss(genres);
      std::string name;
      while (std::getline(ss, name, '|')) {
        auto it = std::find(kGenres.begin(), kGenres.end(), name);
        const auto dim = it == kGenres.end() ? kOtherGenre
                                             : static_cast<std::size_t>(it - kGenres.begin());
        features.genre[dim] = true;
      }
    }
    if (!out.emplace(item, std::move(features)).second) {
      throw ParseError("duplicate movieId", row.line);
    }
  }
  return out;
}

ItemFeatures join_features(std::map<ItemId, ItemFeatureRow> movies,
                           const std::map<ItemId, std::vector<double>>& genome,
                           std::size_t tag_dim) {
  ItemFeatures features;
  features.tag_dim = tag_dim;
  for (auto& [item, row] : movies) {
    auto it = genome.find(item);
    if (it == genome.end()) continue;
    row.tag = it->second;
    features.items.emplace(item, std::move(row));
  }
  features.validate();
  return features;
}

Dataset ingest(const std::filesystem::path& ratings_path, const std::filesystem::path& genome_path,
               const std::filesystem::path& movies_path) {
  Dataset data;
  {
    auto in = open(ratings_path);
    data.ratings = read_ratings(in);
  }
  std::size_t tag_dim = 0;
  std::map<ItemId, std::vector<double>> genome;
  {
    auto in = open(genome_path);
    genome = read_genome(in, tag_dim);
  }
  auto in = open(movies_path);
  data.features = join_features(read_movies(in), genome, tag_dim);
  return data;
}

}  // namespace proxyvote::bench
