#include "varlat/latcheck.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "varlat/error.hpp"

namespace varlat {

  using Elem = FiniteLattice::Elem;

  FiniteLattice FiniteLattice::build(std::size_t               n,
                                     std::vector<std::uint8_t> leq,
                                     std::vector<std::string>  labels) {
    if (n == 0 || leq.size() != n * n) {
      throw std::invalid_argument("order matrix must be a non-empty n x n matrix");
    }
    if (!labels.empty() && labels.size() != n) {
      throw std::invalid_argument("one label per element expected");
    }
    auto le = [&](std::size_t a, std::size_t b) {
      return leq[a * n + b] != 0;
    };
    for (std::size_t a = 0; a < n; ++a) {
      if (!le(a, a)) {
        throw std::invalid_argument("order is not reflexive");
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && le(a, b) && le(b, a)) {
          throw std::invalid_argument("order is not antisymmetric");
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (le(a, b) && le(b, c) && !le(a, c)) {
            throw std::invalid_argument("order is not transitive");
          }
        }
      }
    }

    FiniteLattice l;
    l.n_   = n;
    l.leq_ = std::move(leq);
    l.join_.assign(n * n, 0);
    l.meet_.assign(n * n, 0);
    std::vector<Elem> bounds;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a; b < n; ++b) {
        for (int up = 0; up < 2; ++up) {
          bounds.clear();
          for (Elem c = 0; c < n; ++c) {
            if (up ? (l.leq(a, c) && l.leq(b, c)) : (l.leq(c, a) && l.leq(c, b))) {
              bounds.push_back(c);
            }
          }
          auto const best = std::find_if(bounds.begin(), bounds.end(), [&](Elem c) {
            return std::all_of(bounds.begin(), bounds.end(), [&](Elem d) {
              return up ? l.leq(c, d) : l.leq(d, c);
            });
          });
          if (best == bounds.end()) {
            throw NotALattice(std::string("elements ") + std::to_string(a) + " and "
                                  + std::to_string(b) + " have no "
                                  + (up ? "least upper bound" : "greatest lower bound"),
                              a,
                              b);
          }
          auto& table                        = up ? l.join_ : l.meet_;
          table[a * n + b] = table[b * n + a] = *best;
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      l.bottom_ = l.meet(l.bottom_, a);
      l.top_    = l.join(l.top_, a);
    }
    l.labels_ = std::move(labels);
    return l;
  }

  std::string FiniteLattice::label(Elem a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
  }

  std::string to_string(ElementKind k) {
    switch (k) {
      case ElementKind::distributive: return "distributive";
      case ElementKind::standard: return "standard";
      case ElementKind::neutral: return "neutral";
      case ElementKind::modular: return "modular";
      case ElementKind::upper_modular: return "upper-modular";
      case ElementKind::lower_modular: return "lower-modular";
      case ElementKind::codistributive: return "codistributive";
      case ElementKind::costandard: return "costandard";
    }
    return {};
  }

  std::vector<ElementKind> const& all_element_kinds() {
    static std::vector<ElementKind> const kinds{ElementKind::distributive,
                                                ElementKind::standard,
                                                ElementKind::neutral,
                                                ElementKind::modular,
                                                ElementKind::upper_modular,
                                                ElementKind::lower_modular,
                                                ElementKind::codistributive,
                                                ElementKind::costandard};
    return kinds;
  }

  std::optional<ElementKind> parse_element_kind(std::string const& s) {
    for (auto k : all_element_kinds()) {
      if (to_string(k) == s) {
        return k;
      }
    }
    return std::nullopt;
  }

  std::vector<Elem> generated(FiniteLattice const& l, std::vector<Elem> const& seeds) {
    std::vector<std::uint8_t> in(l.size(), 0);
    std::vector<Elem>         out;
    for (auto s : seeds) {
      if (!in[s]) {
        in[s] = 1;
        out.push_back(s);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        for (Elem e : {l.join(out[i], out[j]), l.meet(out[i], out[j])}) {
          if (!in[e]) {
            in[e] = 1;
            out.push_back(e);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {

    bool distributive_on(FiniteLattice const& l, std::vector<Elem> const& s) {
      for (Elem a : s) {
        for (Elem b : s) {
          for (Elem c : s) {
            if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool violates(FiniteLattice const& l, Elem x, ElementKind kind, Elem y, Elem z) {
      switch (kind) {
        case ElementKind::distributive:
          return l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), l.join(x, z));
        case ElementKind::codistributive:
          return l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z));
        case ElementKind::standard:
          return l.meet(l.join(x, y), z) != l.join(l.meet(x, z), l.meet(y, z));
        case ElementKind::costandard:
          return l.join(l.meet(x, y), z) != l.meet(l.join(x, z), l.join(y, z));
        case ElementKind::modular:
          return l.leq(y, z) && l.meet(l.join(x, y), z) != l.join(l.meet(x, z), y);
        case ElementKind::upper_modular:
          return l.leq(y, x) && l.meet(x, l.join(y, z)) != l.join(y, l.meet(x, z));
        case ElementKind::lower_modular:
          return l.leq(x, y) && l.join(x, l.meet(y, z)) != l.meet(y, l.join(x, z));
        case ElementKind::neutral:
          return !distributive_on(l, generated(l, {x, y, z}));
      }
      return false;
    }

  }  // namespace

  namespace serial {

    std::optional<Witness> find_witness(FiniteLattice const& l, Elem x, ElementKind kind) {
      auto const n = static_cast<Elem>(l.size());
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (violates(l, x, kind, y, z)) {
            return Witness{y, z};
          }
        }
      }
      return std::nullopt;
    }

    bool has_property(FiniteLattice const& l, Elem x, ElementKind kind) {
      return !serial::find_witness(l, x, kind).has_value();
    }

  }  // namespace serial

  std::optional<Witness> find_witness(FiniteLattice const& l, Elem x, ElementKind kind) {
    auto const          n    = static_cast<std::int64_t>(l.size());
    std::uint64_t const none = l.size() * l.size();
    std::uint64_t       best = none;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (std::int64_t y = 0; y < n; ++y) {
      for (std::int64_t z = 0; z < n; ++z) {
        if (violates(l, x, kind, static_cast<Elem>(y), static_cast<Elem>(z))) {
          best = std::min<std::uint64_t>(best, y * n + z);
          break;
        }
      }
    }
    if (best == none) {
      return std::nullopt;
    }
    return Witness{static_cast<Elem>(best / n), static_cast<Elem>(best % n)};
  }

  bool has_property(FiniteLattice const& l, Elem x, ElementKind kind) {
    return !find_witness(l, x, kind).has_value();
  }

  bool neutral_by_median(FiniteLattice const& l, Elem x) {
    auto const n = static_cast<Elem>(l.size());
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        Elem const lower = l.join(l.join(l.meet(x, y), l.meet(y, z)), l.meet(z, x));
        Elem const upper = l.meet(l.meet(l.join(x, y), l.join(y, z)), l.join(z, x));
        if (lower != upper) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_distributive(FiniteLattice const& l) {
    std::vector<Elem> all(l.size());
    for (Elem a = 0; a < l.size(); ++a) {
      all[a] = a;
    }
    return distributive_on(l, all);
  }

  FiniteLattice dual(FiniteLattice const& l) {
    std::size_t const         n = l.size();
    std::vector<std::uint8_t> leq(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        leq[a * n + b] = l.leq(b, a);
      }
    }
    return FiniteLattice::build(n, std::move(leq), l.labels());
  }

  FiniteLattice product(FiniteLattice const& l1, FiniteLattice const& l2) {
    std::size_t const         n1 = l1.size(), n2 = l2.size(), n = n1 * n2;
    std::vector<std::uint8_t> leq(n * n);
    std::vector<std::string>  labels(n);
    for (Elem a = 0; a < n; ++a) {
      labels[a] = "(" + l1.label(a / n2) + ", " + l2.label(a % n2) + ")";
      for (Elem b = 0; b < n; ++b) {
        leq[a * n + b] = l1.leq(a / n2, b / n2) && l2.leq(a % n2, b % n2);
      }
    }
    return FiniteLattice::build(n, std::move(leq), std::move(labels));
  }

  FiniteLattice chain(std::size_t n) {
    std::vector<std::uint8_t> leq(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        leq[a * n + b] = 1;
      }
    }
    return FiniteLattice::build(n, std::move(leq));
  }

  namespace {

    struct IsoSearch {
      FiniteLattice const&  a;
      FiniteLattice const&  b;
      std::vector<unsigned> down_a, up_a, down_b, up_b;
      std::vector<Elem>     map;
      std::vector<uint8_t>  used;

      static void counts(FiniteLattice const&   l,
                         std::vector<unsigned>& down,
                         std::vector<unsigned>& up) {
        down.assign(l.size(), 0);
        up.assign(l.size(), 0);
        for (Elem x = 0; x < l.size(); ++x) {
          for (Elem y = 0; y < l.size(); ++y) {
            down[x] += l.leq(y, x);
            up[x] += l.leq(x, y);
          }
        }
      }

      bool extend(Elem i) {
        if (i == a.size()) {
          return true;
        }
        for (Elem c = 0; c < b.size(); ++c) {
          if (used[c] || down_a[i] != down_b[c] || up_a[i] != up_b[c]) {
            continue;
          }
          bool ok = true;
          for (Elem j = 0; j < i && ok; ++j) {
            ok = a.leq(i, j) == b.leq(c, map[j]) && a.leq(j, i) == b.leq(map[j], c);
          }
          if (!ok) {
            continue;
          }
          map[i]  = c;
          used[c] = 1;
          if (extend(i + 1)) {
            return true;
          }
          used[c] = 0;
        }
        return false;
      }
    };

  }  // namespace

  std::optional<std::vector<Elem>> find_isomorphism(FiniteLattice const& l1,
                                                    FiniteLattice const& l2) {
    if (l1.size() != l2.size()) {
      return std::nullopt;
    }
    IsoSearch s{l1, l2, {}, {}, {}, {}, std::vector<Elem>(l1.size()), std::vector<uint8_t>(l2.size())};
    IsoSearch::counts(l1, s.down_a, s.up_a);
    IsoSearch::counts(l2, s.down_b, s.up_b);
    if (!s.extend(0)) {
      return std::nullopt;
    }
    return s.map;
  }

  namespace {

    // Orders on 0..n-1 with bottom 0, top n-1, and i < j whenever i <= j
    // holds for distinct middle elements; mask selects the middle pairs.
    std::optional<FiniteLattice> lattice_from_mask(std::size_t n, std::uint64_t mask) {
      std::vector<std::uint8_t> leq(n * n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        leq[a * n + a]           = 1;
        leq[0 * n + a]           = 1;
        leq[a * n + (n - 1)]     = 1;
      }
      std::size_t bit = 0;
      for (std::size_t i = 1; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j, ++bit) {
          if (mask >> bit & 1) {
            leq[i * n + j] = 1;
          }
        }
      }
      // Only transitively closed masks are kept, so each order appears once.
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) {
              return std::nullopt;
            }
          }
        }
      }
      try {
        return FiniteLattice::build(n, std::move(leq));
      } catch (NotALattice const&) {
        return std::nullopt;
      }
    }

    std::size_t middle_pairs(std::size_t n) {
      return n < 3 ? 0 : (n - 2) * (n - 3) / 2;
    }

  }  // namespace

  std::vector<FiniteLattice> all_lattices(std::size_t n) {
    if (n == 0 || n > 9) {
      throw std::invalid_argument("all_lattices supports 1 to 9 elements");
    }
    std::vector<FiniteLattice> out;
    std::uint64_t const        masks = std::uint64_t(1) << middle_pairs(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      if (auto l = lattice_from_mask(n, mask)) {
        out.push_back(std::move(*l));
      }
    }
    return out;
  }

  FiniteLattice random_lattice(std::size_t n, std::mt19937_64& rng) {
    if (n == 0 || n > 12) {
      throw std::invalid_argument("random_lattice supports 1 to 12 elements");
    }
    std::uniform_int_distribution<std::uint64_t> dist(
        0, (std::uint64_t(1) << middle_pairs(n)) - 1);
    while (true) {
      if (auto l = lattice_from_mask(n, dist(rng))) {
        return std::move(*l);
      }
    }
  }

  GeneratedLattice generate_sublattice(std::vector<VarietyDesc> const& seeds,
                                       std::size_t                     cap,
                                       Caps const&                     caps) {
    std::vector<VarietyDesc> elems;
    auto                     add = [&](VarietyDesc v) {
      for (auto const& e : elems) {
        if (equal(e, v, caps)) {
          return;
        }
      }
      if (elems.size() == cap) {
        throw CapExceeded("generated sublattice exceeds " + std::to_string(cap)
                          + " elements");
      }
      elems.push_back(std::move(v));
    };
    for (auto const& s : seeds) {
      if (!s.canonical()) {
        throw NonCanonical(to_string(s) + " is not in canonical form");
      }
      add(s);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        VarietyDesc const a = elems[i], b = elems[j];
        add(join(a, b, caps));
        add(meet(a, b, caps));
      }
    }
    std::size_t const         n = elems.size();
    std::vector<std::uint8_t> order(n * n);
    std::vector<std::string>  labels;
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(to_string(elems[a]));
      for (std::size_t b = 0; b < n; ++b) {
        order[a * n + b] = leq(elems[a], elems[b], caps);
      }
    }
    return {FiniteLattice::build(n, std::move(order), std::move(labels)), std::move(elems)};
  }

  namespace {

    std::string escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }

  }  // namespace

  std::string to_dot(FiniteLattice const& l, std::string const& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
    auto const n = static_cast<Elem>(l.size());
    for (Elem a = 0; a < n; ++a) {
      out << "  n" << a << " [label=\"" << escape(l.label(a)) << "\"];\n";
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (a == b || !l.leq(a, b)) {
          continue;
        }
        bool cover = true;
        for (Elem c = 0; c < n && cover; ++c) {
          cover = c == a || c == b || !(l.leq(a, c) && l.leq(c, b));
        }
        if (cover) {
          out << "  n" << a << " -> n" << b << ";\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string write_order(FiniteLattice const& l) {
    std::ostringstream out;
    out << l.size() << '\n';
    for (Elem a = 0; a < l.size(); ++a) {
      for (Elem b = 0; b < l.size(); ++b) {
        out << (b == 0 ? "" : " ") << int(l.leq(a, b));
      }
      out << '\n';
    }
    return out.str();
  }

  FiniteLattice read_order(std::istream& in) {
    std::vector<long long> values;
    std::string            line;
    while (std::getline(in, line)) {
      auto const first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      std::istringstream row(line);
      long long          v;
      while (row >> v) {
        values.push_back(v);
      }
      if (!row.eof()) {
        throw SyntaxError("expected integers in order block", 0);
      }
    }
    if (values.empty() || values[0] <= 0) {
      throw SyntaxError("order block must start with a positive size", 0);
    }
    auto const n = static_cast<std::size_t>(values[0]);
    if (values.size() != 1 + n * n) {
      throw SyntaxError("expected " + std::to_string(n * n) + " order entries", 0);
    }
    std::vector<std::uint8_t> leq;
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] != 0 && values[i] != 1) {
        throw SyntaxError("order entries must be 0 or 1", 0);
      }
      leq.push_back(static_cast<std::uint8_t>(values[i]));
    }
    return FiniteLattice::build(n, std::move(leq));
  }

}  // namespace varlat
