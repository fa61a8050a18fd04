#ifndef QUANDELIER_ERROR_HPP_
#define QUANDELIER_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quandelier {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised by every enumeration that runs under a caller-supplied bound.
  // `reached` is the size at the moment the enumeration gave up (live
  // cosets, group elements, candidate maps, ...).  Exceeding a budget says
  // nothing about finiteness.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string what_exceeded, std::size_t reached)
        : Error(what_exceeded + " budget exceeded (reached "
                + std::to_string(reached) + ")"),
          what_(std::move(what_exceeded)),
          reached_(reached) {}

    std::string const& quantity() const noexcept {
      return what_;
    }
    std::size_t reached() const noexcept {
      return reached_;
    }

   private:
    std::string what_;
    std::size_t reached_;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t line = 0)
        : Error(line == 0 ? message
                          : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

}  // namespace quandelier

#endif  // QUANDELIER_ERROR_HPP_
