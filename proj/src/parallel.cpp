#include "hindman/parallel.hpp"

#include <cstdlib>  // for getenv, strtoul

namespace hindman {

  std::size_t worker_count() {
    if (char const* env = std::getenv("HINDMAN_LAB_THREADS")) {
      char*      end   = nullptr;
      auto const value = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return value;
      }
    }
    auto const hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }

}  // namespace hindman
