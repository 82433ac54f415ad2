#ifndef HINDMAN_CAYLEY_IO_HPP_
#define HINDMAN_CAYLEY_IO_HPP_

#include <iosfwd>  // for istream, ostream
#include <string>  // for string

#include "hindman/semigroup.hpp"  // for FiniteSemigroup

namespace hindman {

  // Text format, one item per line, '#' starts a comment:
  //
  //   cayley v1
  //   n=<int>
  //   labels <n tokens>
  //   row <i>: <n ids>      (n lines, i = 0..n-1 in order)

  void            write_cayley(std::ostream& os, FiniteSemigroup const& S);
  std::string     to_cayley(FiniteSemigroup const& S);

  //! Throws ParseError on malformed input; AssocViolation (message names
  //! the offending triple) or RangeError on a bad table.
  FiniteSemigroup read_cayley(std::istream& is);
  FiniteSemigroup read_cayley_file(std::string const& path);

}  // namespace hindman

#endif  // HINDMAN_CAYLEY_IO_HPP_
