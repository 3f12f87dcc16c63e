#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace varlat {

  // A letter is a small index. Letters 0, 1, 2 print as x, y, z and letter
  // i >= 3 prints as x{i-2}, so x1 is letter 3.
  struct Letter {
    std::uint32_t id = 0;

    auto operator<=>(Letter const&) const = default;
  };

  std::string to_string(Letter x);

  // A word of the free commutative semigroup, stored as a sorted list of
  // (letter, multiplicity) pairs. Never empty; multiplicities are positive.
  class CommWord {
   public:
    struct Factor {
      Letter   letter;
      unsigned exp;

      auto operator<=>(Factor const&) const = default;
    };

    // Throws std::invalid_argument on an empty list or a zero exponent.
    // Repeated letters are merged.
    explicit CommWord(std::vector<Factor> factors);
    CommWord(std::initializer_list<Factor> factors)
        : CommWord(std::vector<Factor>(factors)) {}

    static CommWord letter(Letter x, unsigned exp = 1);
    // x_0 x_1 ... x_{n-1}
    static CommWord product_of_letters(unsigned n);

    std::span<Factor const> factors() const noexcept {
      return factors_;
    }
    unsigned exponent(Letter x) const noexcept;
    // Largest letter id plus one.
    std::uint32_t letter_bound() const noexcept {
      return factors_.back().letter.id + 1;
    }

    auto operator<=>(CommWord const&) const = default;

   private:
    std::vector<Factor> factors_;
  };

  std::vector<Letter> content(CommWord const& u);
  unsigned            length(CommWord const& u);
  CommWord            mul(CommWord const& u, CommWord const& v);
  // Raises u to the n-th power, n >= 1.
  CommWord pow(CommWord const& u, unsigned n);

  using Substitution = std::map<Letter, CommWord>;

  // Throws MissingImage when some letter of u has no image.
  CommWord substitute(CommWord const& u, Substitution const& xi);

  // Commutative reading of u ◁ v: some substitution image of u divides v.
  bool embeds(CommWord const& u, CommWord const& v);

  std::string to_string(CommWord const& u);

  // Either u = v or the zero law w = 0 (shorthand for wx = xw = w).
  class Identity {
   public:
    static Identity equal(CommWord lhs, CommWord rhs);
    static Identity zero(CommWord w);

    bool is_zero_law() const noexcept {
      return !rhs_.has_value();
    }
    bool is_trivial() const noexcept {
      return rhs_.has_value() && *rhs_ == lhs_;
    }
    CommWord const& lhs() const noexcept {
      return lhs_;
    }
    // Precondition: !is_zero_law().
    CommWord const& rhs() const {
      return rhs_.value();
    }
    // Letters of both sides, ascending.
    std::vector<Letter> letters() const;

    // Renames the letters to 0, 1, ... in order of first appearance, reading
    // the left side first.
    Identity canonical() const;

    auto operator<=>(Identity const&) const = default;

   private:
    Identity(CommWord lhs, std::optional<CommWord> rhs)
        : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

    CommWord                lhs_;
    std::optional<CommWord> rhs_;
  };

  std::string to_string(Identity const& id);

  // Applies a renaming of letters; letters missing from the map are kept.
  CommWord rename(CommWord const& u, std::map<Letter, Letter> const& names);

}  // namespace varlat
