#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geodometer {

  // Base for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed ordinal notation, vertex text, graph spec or term tree.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  // A vertex count, path count or search-node budget was exhausted. Usually
  // means the truncation parameter was chosen too large.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // A computation on a ball needed information from beyond its radius.
  class ClippedBall : public Error {
   public:
    using Error::Error;
  };

  // A search horizon (maxlen, label horizon, ...) was too small to conclude.
  class HorizonTooSmall : public Error {
   public:
    using Error::Error;
  };

  // Arguments violate a documented precondition.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

}  // namespace geodometer
