#!/usr/bin/env python3
"""Writes the small MovieLens-schema dataset under data/mini/.

200 users, 40 movies with features (plus one movie without genome scores),
8 tags. Every user rates 2 to 4 movies and no movie is rated by more than
20 users. Output is a pure function of the seed.
"""

import argparse
import csv
import pathlib
import random

GENRES = [
    "Action", "Adventure", "Animation", "Children", "Comedy", "Crime",
    "Documentary", "Drama", "Fantasy", "Film-Noir", "Horror", "IMAX",
    "Musical", "Mystery", "Romance", "Sci-Fi", "Thriller", "War", "Western",
]
USERS = 200
MOVIES = 40
TAGS = 8
CLUSTERS = 4
MAX_RATERS = 20


def build(seed):
    rng = random.Random(seed)
    centers = [[rng.random() for _ in range(TAGS)] for _ in range(CLUSTERS)]
    cluster_genres = [rng.sample(GENRES, 3) for _ in range(CLUSTERS)]

    movies = []
    for j in range(MOVIES):
        c = j % CLUSTERS
        tag = [min(1.0, max(0.0, x + rng.gauss(0.0, 0.12))) for x in centers[c]]
        genres = rng.sample(cluster_genres[c], rng.randint(1, 2))
        movies.append({"id": 10 * (j + 1), "cluster": c, "tag": tag, "genres": genres,
                       "title": f"Movie {j + 1} ({1980 + j})"})
    movies[5]["genres"] = ["(no genres listed)"]
    movies[11]["genres"] = ["Noir-Western"]
    movies[17]["title"] = "Comma, The (1999)"

    counts = [0] * MOVIES
    ratings = []
    for u in range(USERS):
        uid = u + 1
        taste = rng.randrange(CLUSTERS)
        k = rng.randint(2, 4)
        open_movies = [j for j in range(MOVIES) if counts[j] < MAX_RATERS]
        rng.shuffle(open_movies)
        open_movies.sort(key=lambda j: counts[j])
        chosen = sorted(open_movies[:k])
        for j in chosen:
            counts[j] += 1
            base = 4.0 if movies[j]["cluster"] == taste else 2.5
            score = min(5.0, max(0.5, round((base + rng.gauss(0.0, 0.8)) * 2) / 2))
            ratings.append((uid, movies[j]["id"], score, 1500000000 + 7919 * len(ratings)))
    return movies, ratings


def write(out_dir, movies, ratings):
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "ratings.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["userId", "movieId", "rating", "timestamp"])
        for uid, mid, score, ts in ratings:
            w.writerow([uid, mid, f"{score:.1f}", ts])
    with open(out_dir / "genome-scores.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["movieId", "tagId", "relevance"])
        for m in movies:
            for t, x in enumerate(m["tag"]):
                w.writerow([m["id"], t + 1, f"{x:.5f}"])
    with open(out_dir / "movies.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["movieId", "title", "genres"])
        for m in movies:
            w.writerow([m["id"], m["title"], "|".join(m["genres"])])
        # no genome scores, so never sampled
        w.writerow([9999, "Unscored (2001)", "Drama"])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20240601)
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent / "data" / "mini")
    args = parser.parse_args()
    movies, ratings = build(args.seed)
    write(args.out, movies, ratings)


if __name__ == "__main__":
    main()
