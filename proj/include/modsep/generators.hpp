#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "modsep/graph.hpp"

namespace modsep {

enum class Family {
    star,
    cycle,
    path,
    grid,
    torus_grid,
    apollonian,
    complete,
    random_cubic,
    two_triangles_bridge,
};

Family family_from_string(const std::string& name);
std::string family_name(Family f);

/// Deterministic graph generator spec: the same (family, size, seed)
/// always reproduces the identical adjacency structure.
///
/// size semantics: star -> leaf count m; cycle/path/complete -> vertex
/// count; grid/torus_grid -> side length k; apollonian -> subdivision
/// depth d (performs (3^d - 1)/2 random single-face insertions);
/// random_cubic -> vertex count (even, >= 4); two_triangles_bridge
/// ignores size.
struct GeneratorSpec {
    Family family = Family::path;
    long long size = 0;
    std::uint64_t seed = 0;
};

Graph generate(const GeneratorSpec& spec);

/// Uniform integer in [0, bound) from an mt19937_64 stream via rejection
/// sampling; unbiased and byte-reproducible for a fixed seed.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in [-1, 1).
double uniform_pm1(std::mt19937_64& rng);

}  // namespace modsep
