#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace varlat {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class MissingImage : public Error {
   public:
    using Error::Error;
  };

  // Raised whenever a configured size bound (letters, nil exponent, carrier,
  // substitution instances, table order, lattice size) would be exceeded.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

    std::size_t position() const noexcept {
      return pos_;
    }

   private:
    std::size_t pos_;
  };

  class InvalidIndex : public Error {
   public:
    using Error::Error;
  };

  class NotPeriodic : public Error {
   public:
    using Error::Error;
  };

  class NonCanonical : public Error {
   public:
    using Error::Error;
  };

  class Unsupported : public Error {
   public:
    using Error::Error;
  };

  class NoZeroElement : public Error {
   public:
    using Error::Error;
  };

  class NotAssociative : public Error {
   public:
    using Error::Error;
  };

  class NotALattice : public Error {
   public:
    NotALattice(std::string const& msg, std::size_t a, std::size_t b)
        : Error(msg), witness_(a, b) {}

    std::pair<std::size_t, std::size_t> witness() const noexcept {
      return witness_;
    }

   private:
    std::pair<std::size_t, std::size_t> witness_;
  };

}  // namespace varlat
