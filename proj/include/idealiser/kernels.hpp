#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "idealiser/lattice.hpp"

namespace idealiser::kernels {

/// How data-parallel box loops run. Both paths produce identical,
/// index-ordered results; `serial` is the reference used by tests.
enum class Exec { serial, parallel };

namespace serial {
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);
}  // namespace serial

namespace omp {
/// Exceptions thrown by `body` are captured and the one from the lowest
/// index is rethrown after the parallel region.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);
int max_threads();
}  // namespace omp

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body,
                    Exec exec = Exec::parallel);

/// Indices i in [0, count) with pred(i), increasing.
std::vector<std::size_t> select_indices(std::size_t count, const std::function<bool(std::size_t)>& pred,
                                        Exec exec = Exec::parallel);

/// All g in Z^d with |g|_inf <= radius, lexicographically increasing.
std::vector<GroupElement> box_points(std::size_t d, std::int64_t radius);

/// Points of `sub` inside the box, lexicographically increasing.
std::vector<GroupElement> box_points(const Lattice& sub, std::int64_t radius, Exec exec = Exec::parallel);

}  // namespace idealiser::kernels
