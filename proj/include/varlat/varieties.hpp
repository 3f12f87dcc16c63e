#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "varlat/caps.hpp"
#include "varlat/commwords.hpp"
#include "varlat/nilcalc.hpp"

namespace varlat {

  ////////////////////////////////////////////////////////////////////////
  // The subvariety lattice of I = var{x^2y = xy^2, x^2yz = 0, xy = yx}:
  // four chains L_n, K_n, J_n, I_n with tops L, K, J, I.
  ////////////////////////////////////////////////////////////////////////

  enum class Column : std::uint8_t { L = 0, K = 1, J = 2, I = 3 };

  char column_name(Column c);

  // A natural index or omega, the top of a column. No arithmetic on omega.
  class CatIndex {
   public:
    static constexpr CatIndex omega() {
      return CatIndex(UINT32_MAX);
    }
    static constexpr CatIndex finite(std::uint32_t n) {
      return CatIndex(n);
    }
    constexpr bool is_omega() const noexcept {
      return value_ == UINT32_MAX;
    }
    // Precondition: !is_omega().
    constexpr std::uint32_t value() const noexcept {
      return value_;
    }
    auto operator<=>(CatIndex const&) const = default;

   private:
    explicit constexpr CatIndex(std::uint32_t v) : value_(v) {}
    std::uint32_t value_;
  };

  struct CatalogElement {
    Column   column;
    CatIndex index;

    auto operator<=>(CatalogElement const&) const = default;
  };

  // Smallest finite index in each column: L 1, K 3, J 4, I 4.
  std::uint32_t min_index(Column c);

  // Throws InvalidIndex below the column minimum.
  CatalogElement make_catalog(Column c, CatIndex idx);

  // T, L_2, K, K_5, ...
  std::string to_string(CatalogElement const& e);

  NilBasis       catalog_basis(CatalogElement const& e);
  bool           catalog_leq(CatalogElement const& a, CatalogElement const& b);
  CatalogElement catalog_join(CatalogElement const& a, CatalogElement const& b);
  CatalogElement catalog_meet(CatalogElement const& a, CatalogElement const& b);

  // All elements with finite index <= max_index, plus the four tops.
  std::vector<CatalogElement> catalog_elements(std::uint32_t max_index);

  // The catalog element presenting the same variety as b, if there is one
  // with finite index within the degree bound (caps.max_letters).
  std::optional<CatalogElement> resolve_catalog(NilBasis const& b, Caps const& caps = {});

  ////////////////////////////////////////////////////////////////////////
  // Commutative varieties in decomposed form G(d) v C_m v N, or COM.
  ////////////////////////////////////////////////////////////////////////

  using NilPart = std::variant<CatalogElement, NilBasis>;

  NilBasis    nil_basis(NilPart const& n);
  std::string to_string(NilPart const& n);

  struct Composite {
    unsigned d = 1;  // exponent of the Abelian group part
    unsigned m = 0;  // C_m
    NilPart  nil = CatalogElement{Column::L, CatIndex::finite(1)};
    // True when (d, m, nil) are exactly (exp Gr(V), m(V), Nil(V)).
    bool canonical = false;
  };

  class VarietyDesc {
   public:
    static VarietyDesc com() {
      return VarietyDesc(std::monostate{});
    }

    // Builds G(d) v C_m v N. When m = 2 and N satisfies x^2 y = 0 the nil
    // part is replaced by N v L (Nil(C_2) = L), which names the same
    // variety. Throws std::invalid_argument when d == 0.
    static VarietyDesc composite(unsigned d, unsigned m, NilPart nil, Caps const& caps = {});

    bool is_com() const noexcept {
      return std::holds_alternative<std::monostate>(value_);
    }
    // Precondition: !is_com().
    Composite const& parts() const {
      return std::get<Composite>(value_);
    }
    bool canonical() const noexcept {
      return is_com() || std::get<Composite>(value_).canonical;
    }

   private:
    explicit VarietyDesc(std::variant<std::monostate, Composite> v) : value_(std::move(v)) {}
    std::variant<std::monostate, Composite> value_;
  };

  // COM | G(6) + C(2) + K | G(1) + C(0) + N{p=4; ...}
  std::string to_string(VarietyDesc const& v);

  VarietyDesc trivial_variety();
  VarietyDesc semilattices();

  bool satisfies(VarietyDesc const& v, Identity const& id, Caps const& caps = {});

  // Throw NotPeriodic for COM.
  unsigned gr(VarietyDesc const& v);
  unsigned m_index(VarietyDesc const& v);
  // m(V) recomputed through satisfies: the least j with
  // x^j y^p = x^(j+d) y^p, searched up to m + 1.
  unsigned m_index_by_probes(VarietyDesc const& v, Caps const& caps = {});

  Degree degree_of(VarietyDesc const& v, unsigned bound, Caps const& caps = {});
  // Degree recomputed through satisfies: least n <= bound for which
  // x_1...x_n = (x_1...x_n)^(t+1) holds for some t <= t_max.
  Degree degree_by_identity(VarietyDesc const& v,
                            unsigned           bound,
                            unsigned           t_max,
                            Caps const&        caps = {});

  // Both require canonical arguments (NonCanonical). Joins of nil parts that
  // leave the catalog throw Unsupported.
  VarietyDesc join(VarietyDesc const& a, VarietyDesc const& b, Caps const& caps = {});
  VarietyDesc meet(VarietyDesc const& a, VarietyDesc const& b, Caps const& caps = {});
  bool        equal(VarietyDesc const& a, VarietyDesc const& b, Caps const& caps = {});
  // a ⊆ b.
  bool leq(VarietyDesc const& a, VarietyDesc const& b, Caps const& caps = {});

  enum class Modularity { no, necessary_condition_holds, top };
  enum class Clause { none, i, ii, iii };

  std::string to_string(Modularity m);
  std::string to_string(Clause c);

  struct ClassReport {
    bool       upper_modular  = false;
    bool       codistributive = false;
    bool       costandard     = false;
    bool       neutral        = false;
    Modularity modular        = Modularity::no;
    Clause     matched_clause = Clause::none;

    bool operator==(ClassReport const&) const = default;
  };

  ClassReport classify(VarietyDesc const& v, Caps const& caps = {});

}  // namespace varlat
