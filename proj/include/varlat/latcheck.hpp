#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "varlat/caps.hpp"
#include "varlat/varieties.hpp"

namespace varlat {

  // An explicit finite lattice: the order matrix plus join and meet tables
  // computed (and validated) on construction.
  class FiniteLattice {
   public:
    using Elem = std::uint32_t;

    // leq is row-major n x n, leq[a*n+b] != 0 iff a <= b. Throws
    // std::invalid_argument if it is not a partial order and NotALattice
    // (with a witness pair) if some pair lacks a join or a meet.
    static FiniteLattice build(std::size_t                n,
                               std::vector<std::uint8_t>  leq,
                               std::vector<std::string>   labels = {});

    std::size_t size() const noexcept {
      return n_;
    }
    bool leq(Elem a, Elem b) const noexcept {
      return leq_[a * n_ + b] != 0;
    }
    Elem join(Elem a, Elem b) const noexcept {
      return join_[a * n_ + b];
    }
    Elem meet(Elem a, Elem b) const noexcept {
      return meet_[a * n_ + b];
    }
    Elem bottom() const noexcept {
      return bottom_;
    }
    Elem top() const noexcept {
      return top_;
    }
    std::string label(Elem a) const;
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    std::vector<std::uint8_t> const& order() const noexcept {
      return leq_;
    }

   private:
    FiniteLattice() = default;

    std::size_t               n_ = 0;
    std::vector<std::uint8_t> leq_;
    std::vector<Elem>         join_, meet_;
    std::vector<std::string>  labels_;
    Elem                      bottom_ = 0, top_ = 0;
  };

  enum class ElementKind {
    distributive,
    standard,
    neutral,
    modular,
    upper_modular,
    lower_modular,
    codistributive,
    costandard
  };

  std::string                to_string(ElementKind k);
  std::optional<ElementKind> parse_element_kind(std::string const& s);
  std::vector<ElementKind> const& all_element_kinds();

  using Witness = std::pair<FiniteLattice::Elem, FiniteLattice::Elem>;

  // Lexicographically first (y, z) violating the defining condition of kind
  // at x. Parallel over y.
  std::optional<Witness> find_witness(FiniteLattice const& l,
                                      FiniteLattice::Elem  x,
                                      ElementKind          kind);
  bool has_property(FiniteLattice const& l, FiniteLattice::Elem x, ElementKind kind);

  namespace serial {
    std::optional<Witness> find_witness(FiniteLattice const& l,
                                        FiniteLattice::Elem  x,
                                        ElementKind          kind);
    bool has_property(FiniteLattice const& l, FiniteLattice::Elem x, ElementKind kind);
  }  // namespace serial

  // Neutrality through the median identity, used to cross-check the
  // definitional test.
  bool neutral_by_median(FiniteLattice const& l, FiniteLattice::Elem x);

  // Sublattice generated by the given elements, as a sorted element list.
  std::vector<FiniteLattice::Elem> generated(FiniteLattice const&                     l,
                                             std::vector<FiniteLattice::Elem> const& seeds);

  bool          is_distributive(FiniteLattice const& l);
  FiniteLattice dual(FiniteLattice const& l);
  // Element (a, b) has index a * |l2| + b.
  FiniteLattice product(FiniteLattice const& l1, FiniteLattice const& l2);
  FiniteLattice chain(std::size_t n);

  // An order isomorphism l1 -> l2 as an element map, if one exists.
  std::optional<std::vector<FiniteLattice::Elem>> find_isomorphism(FiniteLattice const& l1,
                                                                   FiniteLattice const& l2);

  // All lattices on n elements whose order extends 0 < 1 < ... < n-1
  // (every isomorphism type occurs at least once).
  std::vector<FiniteLattice> all_lattices(std::size_t n);
  // A lattice sampled uniformly from the ones above; deterministic in rng.
  FiniteLattice random_lattice(std::size_t n, std::mt19937_64& rng);

  struct GeneratedLattice {
    FiniteLattice            lattice;
    std::vector<VarietyDesc> elements;
  };

  // Closes the seeds under join and meet (deduplicated with equal) and
  // orders the result by inclusion. Throws CapExceeded beyond cap elements.
  GeneratedLattice generate_sublattice(std::vector<VarietyDesc> const& seeds,
                                       std::size_t                     cap,
                                       Caps const&                     caps = {});

  // Hasse diagram; edges are covers, drawn upwards.
  std::string to_dot(FiniteLattice const& l, std::string const& name = "lattice");

  // Plain text: n, then n rows of 0/1.
  std::string   write_order(FiniteLattice const& l);
  FiniteLattice read_order(std::istream& in);

}  // namespace varlat
