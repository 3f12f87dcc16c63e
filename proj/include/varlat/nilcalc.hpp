#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "varlat/caps.hpp"
#include "varlat/commwords.hpp"

namespace varlat {

  // A commutative nil-variety: commutativity and x^p = 0 are implicit.
  struct NilBasis {
    unsigned              p = 1;
    std::vector<Identity> ids;
  };

  // Throws std::invalid_argument when p == 0.
  NilBasis make_basis(unsigned p, std::vector<Identity> ids);

  // N{p=4; x^2*y = x*y^2, x^2*y*z = 0}
  std::string to_string(NilBasis const& b);

  // The relatively free k-generated object of a nil-basis. Elements of the
  // carrier are exponent vectors in {0..p-1}^k encoded in base p; code 0 (the
  // all-zero vector) stands for the zero element. The partition into classes
  // is the least congruence containing every substitution instance of the
  // basis identities.
  class FreeNilQuotient {
   public:
    FreeNilQuotient(unsigned k, unsigned p, std::vector<std::uint32_t> class_of);

    unsigned k() const noexcept {
      return k_;
    }
    unsigned p() const noexcept {
      return p_;
    }
    std::size_t carrier_size() const noexcept {
      return class_of_.size();
    }
    std::size_t class_count() const noexcept {
      return rep_.size();
    }
    // The zero element always forms class 0.
    static constexpr std::uint32_t zero_class = 0;

    std::uint32_t class_of(std::size_t code) const {
      return class_of_[code];
    }
    // Class of a word over letters 0..k-1; letters >= k are rejected.
    std::uint32_t class_of(CommWord const& w) const;
    // Smallest carrier code in the class.
    std::size_t representative(std::uint32_t c) const {
      return rep_[c];
    }
    std::vector<unsigned> exponents(std::size_t code) const;
    std::uint32_t         multiply(std::uint32_t a, std::uint32_t b) const;
    // Carrier product; overflow in any coordinate yields code 0.
    std::size_t add_codes(std::size_t a, std::size_t b) const;

    std::vector<std::uint32_t> const& partition() const noexcept {
      return class_of_;
    }

   private:
    unsigned                   k_;
    unsigned                   p_;
    std::vector<std::size_t>   powers_;
    std::vector<std::uint32_t> class_of_;
    std::vector<std::size_t>   rep_;
  };

  struct QuotientOptions {
    // Shuffles the order in which generating pairs are merged. The result
    // must not depend on it.
    std::optional<std::uint64_t> shuffle_seed;
  };

  FreeNilQuotient free_quotient(NilBasis const&        b,
                                unsigned               k,
                                Caps const&            caps = {},
                                QuotientOptions const& opts = {});

  // Memoised free_quotient, safe to call from several threads.
  std::shared_ptr<FreeNilQuotient const> cached_quotient(NilBasis const& b,
                                                         unsigned        k,
                                                         Caps const& caps = {});

  bool entails(NilBasis const& b, Identity const& id, Caps const& caps = {});

  // Zero laws forced by id in every commutative nil-variety satisfying it.
  std::vector<Identity> split_zero(Identity const& id);

  struct Degree {
    enum class Kind { exact, above_bound, infinite };
    Kind     kind = Kind::exact;
    unsigned n    = 0;  // the degree, or the bound for above_bound

    static Degree exact(unsigned n) {
      return {Kind::exact, n};
    }
    static Degree above_bound(unsigned bound) {
      return {Kind::above_bound, bound};
    }
    static Degree infinite() {
      return {Kind::infinite, 0};
    }

    bool operator==(Degree const&) const = default;
  };

  std::string to_string(Degree const& d);

  // Least n <= bound with x_1...x_n = 0 entailed.
  Degree degree(NilBasis const& b, unsigned bound, Caps const& caps = {});

  // Minimal set, under ◁, of zero laws w = 0 with length(w) <= length_bound
  // entailed by b.
  std::vector<Identity> zr_generators(NilBasis const& b,
                                      unsigned        length_bound,
                                      Caps const&     caps = {});

  // a ⊆ b as varieties.
  bool nil_subvariety(NilBasis const& a, NilBasis const& b, Caps const& caps = {});

  // {x^2 y, x y^2}: the word set W read modulo commutativity.
  std::array<CommWord, 2> const& w_constant();

}  // namespace varlat
