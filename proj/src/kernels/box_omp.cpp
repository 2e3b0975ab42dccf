#include <omp.h>

#include <exception>
#include <vector>

#include "idealiser/kernels.hpp"

namespace idealiser::kernels::omp {

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  const auto n = static_cast<long long>(count);
  std::vector<std::exception_ptr> errors(count);
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 4) reduction(|| : failed)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
      failed = true;
    }
  }
  if (!failed) return;
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace idealiser::kernels::omp
