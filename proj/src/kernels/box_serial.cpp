#include "idealiser/errors.hpp"
#include "idealiser/kernels.hpp"

namespace idealiser::kernels {

namespace serial {

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace serial

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Exec exec) {
  if (exec == Exec::serial) {
    serial::for_each_index(count, body);
  } else {
    omp::for_each_index(count, body);
  }
}

std::vector<std::size_t> select_indices(std::size_t count, const std::function<bool(std::size_t)>& pred,
                                        Exec exec) {
  std::vector<char> keep(count, 0);
  for_each_index(count, [&](std::size_t i) { keep[i] = pred(i) ? 1 : 0; }, exec);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

std::vector<GroupElement> box_points(std::size_t d, std::int64_t radius) {
  if (radius < 0) throw DomainError("box radius must be non-negative");
  std::vector<GroupElement> out;
  GroupElement g(d);
  for (auto& c : g.coords) c = -radius;
  for (;;) {
    out.push_back(g);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (g.coords[k] < radius) {
        ++g.coords[k];
        for (std::size_t j = k + 1; j < d; ++j) g.coords[j] = -radius;
        break;
      }
      if (k == 0) return out;
    }
    if (d == 0) return out;
  }
}

std::vector<GroupElement> box_points(const Lattice& sub, std::int64_t radius, Exec exec) {
  auto all = box_points(sub.ambient(), radius);
  if (sub.rank() == sub.ambient()) {
    bool unimodular = true;
    for (std::size_t i = 0; i < sub.rank(); ++i)
      if (sub.basis_rows()[i][i] != 1) unimodular = false;
    if (unimodular) return all;
  }
  auto idx = select_indices(all.size(), [&](std::size_t i) { return sub.contains(all[i]); }, exec);
  std::vector<GroupElement> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

}  // namespace idealiser::kernels
