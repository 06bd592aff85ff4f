#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tsuboi/permutation.hpp"

namespace tsuboi::testing {

/// Uniform permutation of {1..n}.
inline Permutation random_permutation(std::mt19937_64& rng, std::uint32_t n)
{
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

/// Random permutation with support at most max_support, placed on random
/// points below 3 * max_support.
inline Permutation random_sparse_permutation(std::mt19937_64& rng, std::uint32_t max_support)
{
  std::uniform_int_distribution<std::uint32_t> size_dist(0, max_support);
  std::uint32_t k = size_dist(rng);
  std::vector<Point> pool(3 * std::max<std::uint32_t>(max_support, 1));
  std::iota(pool.begin(), pool.end(), Point{1});
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  std::vector<Point> images = pool;
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<std::pair<Point, Point>> pairs;
  for (std::uint32_t i = 0; i < k; ++i)
    pairs.emplace_back(pool[i], images[i]);
  return Permutation::from_pairs(pairs);
}

} // namespace tsuboi::testing
