#include "varlat/models.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "varlat/error.hpp"

namespace varlat {

  CayleyTable::CayleyTable(std::size_t n, std::vector<std::uint32_t> table, bool check)
      : n_(n), table_(std::move(table)) {
    if (n_ == 0 || table_.size() != n_ * n_) {
      throw std::invalid_argument("table must be a non-empty n x n matrix");
    }
    for (auto v : table_) {
      if (v >= n_) {
        throw std::invalid_argument("table entry out of range");
      }
    }
    if (check && !check_associative(*this)) {
      throw NotAssociative("table is not associative");
    }
    for (std::uint32_t z = 0; z < n_; ++z) {
      bool absorbs = true;
      for (std::uint32_t a = 0; a < n_ && absorbs; ++a) {
        absorbs = (*this)(a, z) == z && (*this)(z, a) == z;
      }
      if (absorbs) {
        zero_ = z;
        break;
      }
    }
  }

  CayleyTable::CayleyTable(std::size_t n, std::vector<std::uint32_t> table)
      : CayleyTable(n, std::move(table), true) {}

  CayleyTable CayleyTable::unchecked(std::size_t n, std::vector<std::uint32_t> table) {
    return CayleyTable(n, std::move(table), false);
  }

  bool check_associative(CayleyTable const& t) {
    auto const n = static_cast<std::uint32_t>(t.size());
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        std::uint32_t const ab = t(a, b);
        for (std::uint32_t c = 0; c < n; ++c) {
          if (t(ab, c) != t(a, t(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::uint32_t evaluate(CayleyTable const&             t,
                         CommWord const&                w,
                         std::span<std::uint32_t const> assignment) {
    std::optional<std::uint32_t> acc;
    for (auto const& [x, e] : w.factors()) {
      std::uint32_t const v = assignment[x.id];
      for (unsigned i = 0; i < e; ++i) {
        acc = acc ? t(*acc, v) : v;
      }
    }
    return *acc;
  }

  namespace {

    struct Problem {
      Identity      id;
      unsigned      letters;
      std::uint64_t total;
      std::uint32_t zero;
    };

    Problem prepare(CayleyTable const& t, Identity const& raw) {
      Identity      id = raw.canonical();
      auto const    j  = static_cast<unsigned>(id.letters().size());
      std::uint64_t total = 1;
      for (unsigned i = 0; i < j; ++i) {
        if (total > (std::uint64_t(1) << 40) / t.size()) {
          throw CapExceeded("too many assignments for exhaustive evaluation");
        }
        total *= t.size();
      }
      std::uint32_t zero = 0;
      if (id.is_zero_law()) {
        if (!t.zero()) {
          throw NoZeroElement("zero law on a table without a zero element");
        }
        zero = *t.zero();
      }
      return {std::move(id), j, total, zero};
    }

    void decode(std::uint64_t idx, std::size_t n, std::vector<std::uint32_t>& a) {
      for (std::size_t i = a.size(); i-- > 0;) {
        a[i] = static_cast<std::uint32_t>(idx % n);
        idx /= n;
      }
    }

    bool holds_at(CayleyTable const&                t,
                  Problem const&                    pb,
                  std::vector<std::uint32_t> const& a) {
      std::uint32_t const l = evaluate(t, pb.id.lhs(), a);
      if (pb.id.is_zero_law()) {
        return l == pb.zero;
      }
      return l == evaluate(t, pb.id.rhs(), a);
    }

    constexpr std::uint64_t block = 1 << 14;

  }  // namespace

  namespace serial {

    std::optional<std::vector<std::uint32_t>> find_counterexample(CayleyTable const& t,
                                                                  Identity const& id) {
      Problem const              pb = prepare(t, id);
      std::vector<std::uint32_t> a(pb.letters);
      for (std::uint64_t idx = 0; idx < pb.total; ++idx) {
        decode(idx, t.size(), a);
        if (!holds_at(t, pb, a)) {
          return a;
        }
      }
      return std::nullopt;
    }

    bool satisfies_in_table(CayleyTable const& t, Identity const& id) {
      return !serial::find_counterexample(t, id).has_value();
    }

  }  // namespace serial

  std::optional<std::vector<std::uint32_t>> find_counterexample(CayleyTable const& t,
                                                                Identity const& id) {
    Problem const pb = prepare(t, id);
    // Blocks are scanned in order so that the first refuting assignment is
    // the same one the serial scan reports.
    for (std::uint64_t start = 0; start < pb.total; start += block) {
      std::uint64_t const end  = std::min(pb.total, start + block);
      std::uint64_t       best = pb.total;
#pragma omp parallel
      {
        std::vector<std::uint32_t> a(pb.letters);
#pragma omp for schedule(static) reduction(min : best)
        for (std::uint64_t idx = start; idx < end; ++idx) {
          if (idx < best) {
            decode(idx, t.size(), a);
            if (!holds_at(t, pb, a)) {
              best = idx;
            }
          }
        }
      }
      if (best < pb.total) {
        std::vector<std::uint32_t> a(pb.letters);
        decode(best, t.size(), a);
        return a;
      }
    }
    return std::nullopt;
  }

  bool satisfies_in_table(CayleyTable const& t, Identity const& id) {
    return !find_counterexample(t, id).has_value();
  }

  CayleyTable quotient_to_table(FreeNilQuotient const& q, Caps const& caps) {
    std::size_t const n = q.class_count();
    if (n > caps.max_table) {
      throw CapExceeded("quotient has " + std::to_string(n)
                        + " classes, above the table cap " + std::to_string(caps.max_table));
    }
    std::vector<std::uint32_t> table(n * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        table[a * n + b] = q.multiply(a, b);
      }
    }
    return CayleyTable::unchecked(n, std::move(table));
  }

  CayleyTable cyclic_monoid_table(unsigned m) {
    std::size_t const          n = m + 1;
    std::vector<std::uint32_t> table(n * n);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        table[i * n + j] = std::min<std::uint32_t>(i + j, m);
      }
    }
    return CayleyTable::unchecked(n, std::move(table));
  }

  CayleyTable cyclic_group_table(unsigned d) {
    std::vector<std::uint32_t> table(std::size_t(d) * d);
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        table[i * d + j] = (i + j) % d;
      }
    }
    return CayleyTable::unchecked(d, std::move(table));
  }

  std::string write_table(CayleyTable const& t) {
    std::ostringstream out;
    out << t.size() << '\n';
    for (std::uint32_t a = 0; a < t.size(); ++a) {
      for (std::uint32_t b = 0; b < t.size(); ++b) {
        out << (b == 0 ? "" : " ") << t(a, b);
      }
      out << '\n';
    }
    return out.str();
  }

  CayleyTable read_table(std::istream& in) {
    std::vector<long long> values;
    std::string            line;
    std::size_t            offset = 0;
    while (std::getline(in, line)) {
      auto const first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') {
        std::istringstream row(line);
        long long          v;
        while (row >> v) {
          values.push_back(v);
        }
        if (!row.eof()) {
          throw SyntaxError("expected integers in table block", offset);
        }
      }
      offset += line.size() + 1;
    }
    if (values.empty() || values[0] <= 0) {
      throw SyntaxError("table block must start with a positive order", 0);
    }
    auto const n = static_cast<std::size_t>(values[0]);
    if (values.size() != 1 + n * n) {
      throw SyntaxError("expected " + std::to_string(n * n) + " table entries", offset);
    }
    std::vector<std::uint32_t> table;
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] < 0 || static_cast<std::size_t>(values[i]) >= n) {
        throw SyntaxError("table entry out of range", offset);
      }
      table.push_back(static_cast<std::uint32_t>(values[i]));
    }
    return CayleyTable::unchecked(n, std::move(table));
  }

}  // namespace varlat
