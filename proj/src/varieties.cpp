#include "varlat/varieties.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "varlat/error.hpp"
#include "varlat/models.hpp"

namespace varlat {

  namespace {

    Letter const X{0}, Y{1}, Z{2};

    CommWord word(std::initializer_list<CommWord::Factor> f) {
      return CommWord(f);
    }

    Identity const& x2y_zero() {
      static Identity const id = Identity::zero(word({{X, 2}, {Y, 1}}));
      return id;
    }
    Identity const& x2yz_zero() {
      static Identity const id = Identity::zero(word({{X, 2}, {Y, 1}, {Z, 1}}));
      return id;
    }
    Identity const& x2y_xy2() {
      static Identity const id
          = Identity::equal(word({{X, 2}, {Y, 1}}), word({{X, 1}, {Y, 2}}));
      return id;
    }
    Identity const& x2_zero() {
      static Identity const id = Identity::zero(CommWord::letter(X, 2));
      return id;
    }
    Identity const& x3_zero() {
      static Identity const id = Identity::zero(CommWord::letter(X, 3));
      return id;
    }

    CatalogElement const l_top{Column::L, CatIndex::omega()};

  }  // namespace

  char column_name(Column c) {
    switch (c) {
      case Column::L: return 'L';
      case Column::K: return 'K';
      case Column::J: return 'J';
      case Column::I: return 'I';
    }
    return '?';
  }

  std::uint32_t min_index(Column c) {
    switch (c) {
      case Column::L: return 1;
      case Column::K: return 3;
      case Column::J:
      case Column::I: return 4;
    }
    return 1;
  }

  CatalogElement make_catalog(Column c, CatIndex idx) {
    if (!idx.is_omega() && idx.value() < min_index(c)) {
      throw InvalidIndex(std::string(1, column_name(c)) + "_"
                         + std::to_string(idx.value()) + " is not defined; the least index is "
                         + std::to_string(min_index(c)));
    }
    return CatalogElement{c, idx};
  }

  std::string to_string(CatalogElement const& e) {
    if (e.column == Column::L && e.index == CatIndex::finite(1)) {
      return "T";
    }
    std::string out(1, column_name(e.column));
    if (!e.index.is_omega()) {
      out += "_" + std::to_string(e.index.value());
    }
    return out;
  }

  NilBasis catalog_basis(CatalogElement const& e) {
    make_catalog(e.column, e.index);
    if (e.column == Column::L && e.index == CatIndex::finite(1)) {
      return NilBasis{1, {}};
    }
    NilBasis b;
    switch (e.column) {
      case Column::L: b = NilBasis{2, {x2_zero()}}; break;
      case Column::K: b = NilBasis{3, {x2y_zero()}}; break;
      case Column::J: b = NilBasis{3, {x2y_xy2(), x2yz_zero(), x3_zero()}}; break;
      case Column::I: b = NilBasis{4, {x2y_xy2(), x2yz_zero()}}; break;
    }
    if (!e.index.is_omega()) {
      b.ids.push_back(Identity::zero(CommWord::product_of_letters(e.index.value())));
    }
    return b;
  }

  bool catalog_leq(CatalogElement const& a, CatalogElement const& b) {
    return a.column <= b.column && a.index <= b.index;
  }

  // Componentwise on (column rank, index). The column minimum indices grow
  // with the rank, so both results are valid elements.
  CatalogElement catalog_join(CatalogElement const& a, CatalogElement const& b) {
    return CatalogElement{std::max(a.column, b.column), std::max(a.index, b.index)};
  }

  CatalogElement catalog_meet(CatalogElement const& a, CatalogElement const& b) {
    return CatalogElement{std::min(a.column, b.column), std::min(a.index, b.index)};
  }

  std::vector<CatalogElement> catalog_elements(std::uint32_t max_index) {
    std::vector<CatalogElement> out;
    for (auto c : {Column::L, Column::K, Column::J, Column::I}) {
      for (std::uint32_t n = min_index(c); n <= max_index; ++n) {
        out.push_back({c, CatIndex::finite(n)});
      }
      out.push_back({c, CatIndex::omega()});
    }
    return out;
  }

  std::optional<CatalogElement> resolve_catalog(NilBasis const& b, Caps const& caps) {
    if (b.p > caps.max_p) {
      throw CapExceeded("nil exponent exceeds cap");
    }
    Column col;
    if (entails(b, x2_zero(), caps)) {
      col = Column::L;
    } else if (entails(b, x2y_zero(), caps)) {
      col = Column::K;
    } else if (entails(b, x2y_xy2(), caps) && entails(b, x2yz_zero(), caps)) {
      col = entails(b, x3_zero(), caps) ? Column::J : Column::I;
    } else {
      return std::nullopt;
    }
    // Search the degree only as far as the carrier cap allows.
    unsigned    bound = 0;
    std::size_t size  = 1;
    while (bound < caps.max_letters && size * b.p <= caps.max_carrier) {
      size *= b.p;
      ++bound;
    }
    Degree const   deg = degree(b, bound, caps);
    CatIndex const idx
        = deg.kind == Degree::Kind::exact ? CatIndex::finite(deg.n) : CatIndex::omega();
    if (!idx.is_omega() && idx.value() < min_index(col)) {
      return std::nullopt;
    }
    CatalogElement const e{col, idx};
    NilBasis const       eb = catalog_basis(e);
    if (nil_subvariety(b, eb, caps) && nil_subvariety(eb, b, caps)) {
      return e;
    }
    return std::nullopt;
  }

  NilBasis nil_basis(NilPart const& n) {
    if (auto const* e = std::get_if<CatalogElement>(&n)) {
      return catalog_basis(*e);
    }
    return std::get<NilBasis>(n);
  }

  std::string to_string(NilPart const& n) {
    if (auto const* e = std::get_if<CatalogElement>(&n)) {
      return to_string(*e);
    }
    return to_string(std::get<NilBasis>(n));
  }

  ////////////////////////////////////////////////////////////////////////
  // VarietyDesc
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool nil_leq(NilPart const& a, NilPart const& b, Caps const& caps) {
      auto const* ea = std::get_if<CatalogElement>(&a);
      auto const* eb = std::get_if<CatalogElement>(&b);
      if (ea && eb) {
        return catalog_leq(*ea, *eb);
      }
      return nil_subvariety(nil_basis(a), nil_basis(b), caps);
    }

    // Distinct catalog elements present distinct varieties, so equality of
    // catalog parts is structural.
    bool nil_equal(NilPart const& a, NilPart const& b, Caps const& caps) {
      auto const* ea = std::get_if<CatalogElement>(&a);
      auto const* eb = std::get_if<CatalogElement>(&b);
      if (ea && eb) {
        return *ea == *eb;
      }
      NilBasis const ba = nil_basis(a), bb = nil_basis(b);
      return nil_subvariety(ba, bb, caps) && nil_subvariety(bb, ba, caps);
    }

    std::optional<CatalogElement> as_catalog(NilPart const& n, Caps const& caps) {
      if (auto const* e = std::get_if<CatalogElement>(&n)) {
        return *e;
      }
      return resolve_catalog(std::get<NilBasis>(n), caps);
    }

    NilPart nil_join(NilPart const& a, NilPart const& b, Caps const& caps) {
      auto const ea = as_catalog(a, caps);
      auto const eb = as_catalog(b, caps);
      if (ea && eb) {
        return catalog_join(*ea, *eb);
      }
      if (nil_leq(a, b, caps)) {
        return b;
      }
      if (nil_leq(b, a, caps)) {
        return a;
      }
      throw Unsupported("join of " + to_string(a) + " and " + to_string(b)
                        + " leaves the catalog");
    }

    NilPart nil_meet(NilPart const& a, NilPart const& b, Caps const& caps) {
      auto const* ea = std::get_if<CatalogElement>(&a);
      auto const* eb = std::get_if<CatalogElement>(&b);
      if (ea && eb) {
        return catalog_meet(*ea, *eb);
      }
      if (nil_leq(a, b, caps)) {
        return a;
      }
      if (nil_leq(b, a, caps)) {
        return b;
      }
      NilBasis ba = nil_basis(a), bb = nil_basis(b);
      ba.p        = std::min(ba.p, bb.p);
      ba.ids.insert(ba.ids.end(), bb.ids.begin(), bb.ids.end());
      return ba;
    }

  }  // namespace

  VarietyDesc VarietyDesc::composite(unsigned d, unsigned m, NilPart nil, Caps const& caps) {
    if (d == 0) {
      throw std::invalid_argument("group exponent must be positive");
    }
    NilBasis   basis   = nil_basis(nil);
    bool const in_k    = entails(basis, x2y_zero(), caps);
    NilPart const lpart = l_top;
    if (m == 2 && in_k && !nil_leq(lpart, nil, caps)) {
      // C_2 contains L, so N may be enlarged to N v L without changing V.
      if (auto e = as_catalog(nil, caps)) {
        nil   = catalog_join(*e, l_top);
        basis = nil_basis(nil);
      }
    }
    Composite c;
    c.d         = d;
    c.m         = m;
    c.canonical = (d == 1 && m <= 1)
                  || (m <= 2 && in_k && (m < 2 || nil_leq(lpart, nil, caps)));
    c.nil       = std::move(nil);
    return VarietyDesc(std::move(c));
  }

  std::string to_string(VarietyDesc const& v) {
    if (v.is_com()) {
      return "COM";
    }
    auto const& c = v.parts();
    return "G(" + std::to_string(c.d) + ") + C(" + std::to_string(c.m) + ") + "
           + to_string(c.nil);
  }

  VarietyDesc trivial_variety() {
    return VarietyDesc::composite(1, 0, CatalogElement{Column::L, CatIndex::finite(1)});
  }

  VarietyDesc semilattices() {
    return VarietyDesc::composite(1, 1, CatalogElement{Column::L, CatIndex::finite(1)});
  }

  namespace {

    // Abelian groups of exponent d: exponents agree modulo d. A zero law
    // w = 0 means wx = w, which only the trivial group satisfies.
    bool holds_in_group(unsigned d, Identity const& id) {
      if (id.is_zero_law()) {
        return d == 1;
      }
      for (auto x : id.letters()) {
        if (id.lhs().exponent(x) % d != id.rhs().exponent(x) % d) {
          return false;
        }
      }
      return true;
    }

    void require_periodic(VarietyDesc const& v) {
      if (v.is_com()) {
        throw NotPeriodic("COM is not periodic");
      }
    }

    void require_canonical(VarietyDesc const& v) {
      if (!v.canonical()) {
        throw NonCanonical(to_string(v)
                           + " is not in canonical form; its components need not be "
                             "its invariants");
      }
    }

  }  // namespace

  bool satisfies(VarietyDesc const& v, Identity const& id, Caps const& caps) {
    if (v.is_com()) {
      return !id.is_zero_law() && id.lhs() == id.rhs();
    }
    auto const& c = v.parts();
    return holds_in_group(c.d, id) && satisfies_in_table(cyclic_monoid_table(c.m), id)
           && entails(nil_basis(c.nil), id, caps);
  }

  unsigned gr(VarietyDesc const& v) {
    require_periodic(v);
    return v.parts().d;
  }

  unsigned m_index(VarietyDesc const& v) {
    require_periodic(v);
    return v.parts().m;
  }

  unsigned m_index_by_probes(VarietyDesc const& v, Caps const& caps) {
    require_periodic(v);
    auto const&    c = v.parts();
    unsigned const p = nil_basis(c.nil).p;
    for (unsigned j = 0; j <= c.m + 1; ++j) {
      CommWord const yp = CommWord::letter(Y, p);
      CommWord const lhs = j == 0 ? yp : mul(CommWord::letter(X, j), yp);
      CommWord const rhs = mul(CommWord::letter(X, j + c.d), yp);
      if (satisfies(v, Identity::equal(lhs, rhs), caps)) {
        return j;
      }
    }
    return c.m + 1;
  }

  Degree degree_of(VarietyDesc const& v, unsigned bound, Caps const& caps) {
    if (v.is_com()) {
      return Degree::infinite();
    }
    return degree(nil_basis(v.parts().nil), bound, caps);
  }

  Degree degree_by_identity(VarietyDesc const& v,
                            unsigned           bound,
                            unsigned           t_max,
                            Caps const&        caps) {
    if (v.is_com()) {
      return Degree::infinite();
    }
    for (unsigned n = 1; n <= bound; ++n) {
      CommWord const w = CommWord::product_of_letters(n);
      for (unsigned t = 1; t <= t_max; ++t) {
        if (satisfies(v, Identity::equal(w, pow(w, t + 1)), caps)) {
          return Degree::exact(n);
        }
      }
    }
    return Degree::above_bound(bound);
  }

  VarietyDesc join(VarietyDesc const& a, VarietyDesc const& b, Caps const& caps) {
    require_canonical(a);
    require_canonical(b);
    if (a.is_com() || b.is_com()) {
      return VarietyDesc::com();
    }
    auto const& x = a.parts();
    auto const& y = b.parts();
    return VarietyDesc::composite(
        std::lcm(x.d, y.d), std::max(x.m, y.m), nil_join(x.nil, y.nil, caps), caps);
  }

  VarietyDesc meet(VarietyDesc const& a, VarietyDesc const& b, Caps const& caps) {
    require_canonical(a);
    require_canonical(b);
    if (a.is_com()) {
      return b;
    }
    if (b.is_com()) {
      return a;
    }
    auto const& x = a.parts();
    auto const& y = b.parts();
    return VarietyDesc::composite(
        std::gcd(x.d, y.d), std::min(x.m, y.m), nil_meet(x.nil, y.nil, caps), caps);
  }

  bool equal(VarietyDesc const& a, VarietyDesc const& b, Caps const& caps) {
    require_canonical(a);
    require_canonical(b);
    if (a.is_com() || b.is_com()) {
      return a.is_com() && b.is_com();
    }
    auto const& x = a.parts();
    auto const& y = b.parts();
    return x.d == y.d && x.m == y.m && nil_equal(x.nil, y.nil, caps);
  }

  bool leq(VarietyDesc const& a, VarietyDesc const& b, Caps const& caps) {
    require_canonical(a);
    require_canonical(b);
    if (b.is_com()) {
      return true;
    }
    if (a.is_com()) {
      return false;
    }
    auto const& x = a.parts();
    auto const& y = b.parts();
    return y.d % x.d == 0 && x.m <= y.m && nil_leq(x.nil, y.nil, caps);
  }

  std::string to_string(Modularity m) {
    switch (m) {
      case Modularity::no: return "no";
      case Modularity::necessary_condition_holds: return "necessary-condition-holds";
      case Modularity::top: return "top";
    }
    return {};
  }

  std::string to_string(Clause c) {
    switch (c) {
      case Clause::none: return "none";
      case Clause::i: return "(i)";
      case Clause::ii: return "(ii)";
      case Clause::iii: return "(iii)";
    }
    return {};
  }

  // The clause tests read the components directly, also for non-canonical
  // descriptors. This stays exact: Gr and m(.) of G v C_m v N are d and m
  // whatever N is, and a variety of the form (iii) has Nil(V) inside K, so
  // a nil part refuting x^2 y = 0 rules (iii) out; m >= 2 rules out (ii).
  ClassReport classify(VarietyDesc const& v, Caps const& caps) {
    ClassReport r;
    if (v.is_com()) {
      r.upper_modular = r.codistributive = r.costandard = true;
      r.modular        = Modularity::top;
      r.matched_clause = Clause::i;
      return r;
    }
    auto const&    c      = v.parts();
    NilBasis const n      = nil_basis(c.nil);
    bool const     in_k   = entails(n, x2y_zero(), caps);
    bool const     band   = c.d == 1 && c.m <= 1;
    bool const     clause3 = c.m <= 2 && in_k;
    bool const     clause2
        = band && entails(n, x2yz_zero(), caps) && entails(n, x2y_xy2(), caps);

    r.upper_modular = r.codistributive = clause2 || clause3;
    r.costandard                       = clause2;
    r.neutral                          = band && in_k;
    r.modular = band ? Modularity::necessary_condition_holds : Modularity::no;
    r.matched_clause = clause2 ? Clause::ii : (clause3 ? Clause::iii : Clause::none);
    return r;
  }

}  // namespace varlat
