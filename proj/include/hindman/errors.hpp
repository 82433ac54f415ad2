#ifndef HINDMAN_ERRORS_HPP_
#define HINDMAN_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

#include "hindman/types.hpp"  // for element_index

namespace hindman {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class AssocViolation : public Error {
   public:
    AssocViolation(element_index a, element_index b, element_index c,
                   std::string const& msg)
        : Error(msg), a(a), b(b), c(c) {}
    element_index a, b, c;
  };

  class RangeError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
  };

  class EscapesTruncation : public Error {
   public:
    EscapesTruncation(element_index base, std::string const& msg)
        : Error(msg), base(base) {}
    element_index base;
  };

  class NotIdempotent : public Error {
   public:
    explicit NotIdempotent(element_index e)
        : Error("element " + std::to_string(e) + " is not idempotent"),
          element(e) {}
    element_index element;
  };

  class NotAGroup : public Error {
   public:
    using Error::Error;
  };

  class OrderViolation : public Error {
   public:
    explicit OrderViolation(element_index g)
        : Error("element " + std::to_string(g) + " has order greater than 2"),
          element(g) {}
    element_index element;
  };

  class BadSpec : public Error {
   public:
    using Error::Error;
  };

  class BadPattern : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    CapExceeded(std::size_t n, std::size_t cap)
        : Error("sequence length " + std::to_string(n) + " exceeds cap "
                + std::to_string(cap)),
          n(n),
          cap(cap) {}
    std::size_t n, cap;
  };

  class StuckAt : public Error {
   public:
    explicit StuckAt(std::size_t step)
        : Error("no admissible element at step " + std::to_string(step)),
          step(step) {}
    std::size_t step;
  };

  class PrecondViolation : public Error {
   public:
    using Error::Error;
  };

  class NotOutsideS2 : public PrecondViolation {
   public:
    explicit NotOutsideS2(element_index x)
        : PrecondViolation("element " + std::to_string(x)
                           + " is a product (lies in S^2)"),
          element(x) {}
    element_index element;
  };

  class RamseyFail : public Error {
   public:
    explicit RamseyFail(std::size_t target)
        : Error("no monochromatic clique of size " + std::to_string(target)),
          target(target) {}
    std::size_t target;
  };

  class CaseInapplicable : public Error {
   public:
    using Error::Error;
  };

  class UnknownLemma : public Error {
   public:
    using Error::Error;
  };

}  // namespace hindman

#endif  // HINDMAN_ERRORS_HPP_
