#ifndef HINDMAN_TYPES_HPP_
#define HINDMAN_TYPES_HPP_

#include <cstdint>  // for uint32_t
#include <vector>   // for vector

namespace hindman {

  //! Elements of a FiniteSemigroup are identified by their index 0..n-1.
  using element_index = std::uint32_t;
  using color_index   = std::uint32_t;

  //! Sorted, duplicate-free list of element indices.
  using element_set = std::vector<element_index>;

}  // namespace hindman

#endif  // HINDMAN_TYPES_HPP_
