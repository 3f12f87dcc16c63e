#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "varlat/caps.hpp"
#include "varlat/commwords.hpp"
#include "varlat/nilcalc.hpp"

namespace varlat {

  // A finite semigroup given by its multiplication table, row-major.
  class CayleyTable {
   public:
    // Checks associativity on all n^3 triples; throws NotAssociative.
    CayleyTable(std::size_t n, std::vector<std::uint32_t> table);

    // Skips the associativity check. Used for importing tables that are to
    // be inspected with check_associative.
    static CayleyTable unchecked(std::size_t n, std::vector<std::uint32_t> table);

    std::size_t size() const noexcept {
      return n_;
    }
    std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const noexcept {
      return table_[a * n_ + b];
    }
    // The two-sided absorbing element, if any.
    std::optional<std::uint32_t> zero() const noexcept {
      return zero_;
    }
    std::span<std::uint32_t const> data() const noexcept {
      return table_;
    }

   private:
    CayleyTable(std::size_t n, std::vector<std::uint32_t> table, bool check);

    std::size_t                  n_;
    std::vector<std::uint32_t>   table_;
    std::optional<std::uint32_t> zero_;
  };

  bool check_associative(CayleyTable const& t);

  // Value of w under an assignment of table elements to letters 0, 1, ...;
  // letters are multiplied in ascending order.
  std::uint32_t evaluate(CayleyTable const&             t,
                         CommWord const&                w,
                         std::span<std::uint32_t const> assignment);

  // Exhaustive substitution of all element tuples. A zero law needs a zero
  // element and throws NoZeroElement otherwise. Parallel over assignments.
  bool satisfies_in_table(CayleyTable const& t, Identity const& id);

  // First assignment (lexicographic, letter 0 slowest) refuting id.
  std::optional<std::vector<std::uint32_t>> find_counterexample(CayleyTable const& t,
                                                                Identity const& id);

  namespace serial {
    bool satisfies_in_table(CayleyTable const& t, Identity const& id);
    std::optional<std::vector<std::uint32_t>> find_counterexample(CayleyTable const& t,
                                                                  Identity const& id);
  }  // namespace serial

  // Multiplication of the classes of q; the zero class is element 0.
  CayleyTable quotient_to_table(FreeNilQuotient const& q, Caps const& caps = {});

  // {1, a, ..., a^m} with a^m a = a^m; element i is a^i.
  CayleyTable cyclic_monoid_table(unsigned m);

  // Z/d written additively.
  CayleyTable cyclic_group_table(unsigned d);

  // Plain-text block: the order n on the first line, then n rows of n
  // integers. Lines starting with '#' are ignored.
  std::string write_table(CayleyTable const& t);
  // Throws SyntaxError on malformed input. The result is not checked for
  // associativity.
  CayleyTable read_table(std::istream& in);

}  // namespace varlat
