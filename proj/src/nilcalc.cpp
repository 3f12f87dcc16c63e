#include "varlat/nilcalc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "varlat/error.hpp"

namespace varlat {

  NilBasis make_basis(unsigned p, std::vector<Identity> ids) {
    if (p == 0) {
      throw std::invalid_argument("nil exponent must be at least 1");
    }
    return NilBasis{p, std::move(ids)};
  }

  std::string to_string(NilBasis const& b) {
    std::string out = "N{p=" + std::to_string(b.p);
    for (std::size_t i = 0; i < b.ids.size(); ++i) {
      out += (i == 0 ? "; " : ", ");
      out += to_string(b.ids[i]);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeNilQuotient
  ////////////////////////////////////////////////////////////////////////

  FreeNilQuotient::FreeNilQuotient(unsigned                   k,
                                   unsigned                   p,
                                   std::vector<std::uint32_t> class_of)
      : k_(k), p_(p), powers_(k + 1, 1), class_of_(std::move(class_of)) {
    for (unsigned i = 1; i <= k; ++i) {
      powers_[i] = powers_[i - 1] * p;
    }
    std::uint32_t n = 0;
    for (auto c : class_of_) {
      n = std::max(n, c + 1);
    }
    rep_.assign(n, class_of_.size());
    for (std::size_t i = 0; i < class_of_.size(); ++i) {
      rep_[class_of_[i]] = std::min(rep_[class_of_[i]], i);
    }
  }

  std::vector<unsigned> FreeNilQuotient::exponents(std::size_t code) const {
    std::vector<unsigned> e(k_);
    for (unsigned c = 0; c < k_; ++c) {
      e[c] = static_cast<unsigned>((code / powers_[c]) % p_);
    }
    return e;
  }

  std::size_t FreeNilQuotient::add_codes(std::size_t a, std::size_t b) const {
    if (a == 0 || b == 0) {
      return 0;
    }
    std::size_t out = 0;
    for (unsigned c = 0; c < k_; ++c) {
      std::size_t const s = (a / powers_[c]) % p_ + (b / powers_[c]) % p_;
      if (s >= p_) {
        return 0;
      }
      out += s * powers_[c];
    }
    return out;
  }

  std::uint32_t FreeNilQuotient::multiply(std::uint32_t a, std::uint32_t b) const {
    return class_of_[add_codes(rep_[a], rep_[b])];
  }

  std::uint32_t FreeNilQuotient::class_of(CommWord const& w) const {
    std::size_t code = 0;
    for (auto const& [x, e] : w.factors()) {
      if (x.id >= k_) {
        throw std::out_of_range("word uses a letter outside the generators");
      }
      if (e >= p_) {
        return zero_class;
      }
      code += e * powers_[x.id];
    }
    return class_of_[code];
  }

  namespace {

    std::size_t carrier_size_or_throw(unsigned k, unsigned p, Caps const& caps) {
      if (k == 0) {
        throw std::invalid_argument("free quotient needs at least one generator");
      }
      if (k > caps.max_letters) {
        throw CapExceeded("letter count " + std::to_string(k) + " exceeds cap "
                          + std::to_string(caps.max_letters));
      }
      if (p > caps.max_p) {
        throw CapExceeded("nil exponent " + std::to_string(p) + " exceeds cap "
                          + std::to_string(caps.max_p));
      }
      std::size_t n = 1;
      for (unsigned i = 0; i < k; ++i) {
        n *= p;
        if (n > caps.max_carrier) {
          throw CapExceeded("carrier " + std::to_string(p) + "^"
                            + std::to_string(k) + " exceeds cap "
                            + std::to_string(caps.max_carrier));
        }
      }
      return n;
    }

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t(0));
      }

      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      // Returns false when already joined.
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent_[b] = a;
        return true;
      }

     private:
      std::vector<std::size_t> parent_;
    };

    using Pair = std::pair<std::size_t, std::size_t>;

    // Emits the generating pairs of the congruence for one identity over k
    // generators with nil exponent p.
    class InstanceEnumerator {
     public:
      InstanceEnumerator(unsigned           k,
                         unsigned           p,
                         std::size_t        limit,
                         std::vector<Pair>& out)
          : k_(k), p_(p), limit_(limit), out_(out), powers_(k, 1) {
        for (unsigned i = 1; i < k; ++i) {
          powers_[i] = powers_[i - 1] * p;
        }
      }

      void run(Identity const& raw) {
        if (raw.is_trivial()) {
          return;
        }
        Identity const id = raw.canonical();
        nletters_         = static_cast<unsigned>(id.letters().size());
        ml_.assign(nletters_, 0);
        mr_.assign(nletters_, 0);
        for (auto const& [x, e] : id.lhs().factors()) {
          ml_[x.id] = e;
        }
        if (id.is_zero_law()) {
          run_zero_law();
          return;
        }
        for (auto const& [x, e] : id.rhs().factors()) {
          mr_[x.id] = e;
        }
        pl_.assign(k_, 0);
        pr_.assign(k_, 0);
        equal_from(0, true, true);
      }

     private:
      void emit(std::size_t a, std::size_t b) {
        if (++count_ > limit_) {
          throw CapExceeded("substitution instances exceed cap "
                            + std::to_string(limit_));
        }
        if (a != b) {
          out_.emplace_back(a, b);
        }
      }

      std::size_t code(std::vector<unsigned> const& v) const {
        std::size_t c = 0;
        for (unsigned i = 0; i < k_; ++i) {
          c += v[i] * powers_[i];
        }
        return c;
      }

      // For w = 0 it suffices to send each letter to a single generator: any
      // other image of w is a translate of one of these.
      void run_zero_law() {
        std::vector<unsigned> img(nletters_, 0);
        std::vector<unsigned> v(k_, 0);
        while (true) {
          std::fill(v.begin(), v.end(), 0);
          bool overflow = false;
          for (unsigned i = 0; i < nletters_ && !overflow; ++i) {
            v[img[i]] += ml_[i];
            overflow = v[img[i]] >= p_;
          }
          if (!overflow) {
            emit(code(v), 0);
          }
          unsigned i = 0;
          while (i < nletters_ && img[i] == k_ - 1) {
            img[i++] = 0;
          }
          if (i == nletters_) {
            return;
          }
          ++img[i];
        }
      }

      static bool in_box(std::vector<unsigned> const& img,
                         std::vector<unsigned> const& bound) {
        for (std::size_t c = 0; c < img.size(); ++c) {
          if (img[c] > bound[c]) {
            return false;
          }
        }
        return true;
      }

      bool fits(std::vector<unsigned> const& partial,
                unsigned                     mult,
                std::vector<unsigned> const& img) const {
        for (unsigned c = 0; c < k_; ++c) {
          if (partial[c] + mult * img[c] >= p_) {
            return false;
          }
        }
        return true;
      }

      std::vector<unsigned> box(std::vector<unsigned> const& partial,
                                unsigned                     mult) const {
        std::vector<unsigned> b(k_);
        for (unsigned c = 0; c < k_; ++c) {
          b[c] = (p_ - 1 - partial[c]) / mult;
        }
        return b;
      }

      template <typename F>
      void for_each_nonzero(std::vector<unsigned> const& bound, F&& f) {
        std::vector<unsigned> img(k_, 0);
        while (true) {
          unsigned c = 0;
          while (c < k_ && img[c] == bound[c]) {
            img[c++] = 0;
          }
          if (c == k_) {
            return;
          }
          ++img[c];
          f(img);
        }
      }

      void descend(unsigned                     i,
                   std::vector<unsigned> const& img,
                   bool                         alive_l,
                   bool                         alive_r) {
        unsigned const a  = ml_[i];
        unsigned const b  = mr_[i];
        bool const     nl = alive_l && (a == 0 || fits(pl_, a, img));
        bool const     nr = alive_r && (b == 0 || fits(pr_, b, img));
        for (unsigned c = 0; c < k_; ++c) {
          pl_[c] += a * img[c];
          pr_[c] += b * img[c];
        }
        equal_from(i + 1, nl, nr);
        for (unsigned c = 0; c < k_; ++c) {
          pl_[c] -= a * img[c];
          pr_[c] -= b * img[c];
        }
      }

      // Enumerates images letter by letter, keeping only those that leave at
      // least one side non-zero. Images killing every side that depends on
      // the letter are all represented by a single "zero image".
      void equal_from(unsigned i, bool alive_l, bool alive_r) {
        if (i == nletters_) {
          emit(alive_l ? code(pl_) : 0, alive_r ? code(pr_) : 0);
          return;
        }
        unsigned const a     = ml_[i];
        unsigned const b     = mr_[i];
        bool const     dep_l = alive_l && a > 0;
        bool const     dep_r = alive_r && b > 0;
        bool const     indep = (alive_l && a == 0) || (alive_r && b == 0);

        std::vector<unsigned> box_l, box_r;
        if (dep_l) {
          box_l = box(pl_, a);
          for_each_nonzero(box_l, [&](std::vector<unsigned> const& img) {
            descend(i, img, alive_l, alive_r);
          });
        }
        if (dep_r) {
          box_r = box(pr_, b);
          for_each_nonzero(box_r, [&](std::vector<unsigned> const& img) {
            if (!dep_l || !in_box(img, box_l)) {
              descend(i, img, alive_l, alive_r);
            }
          });
        }
        if (indep) {
          equal_from(i + 1, alive_l && a == 0, alive_r && b == 0);
        }
      }

      unsigned                 k_;
      unsigned                 p_;
      std::size_t              limit_;
      std::size_t              count_ = 0;
      std::vector<Pair>&       out_;
      std::vector<std::size_t> powers_;
      unsigned                 nletters_ = 0;
      std::vector<unsigned>    ml_, mr_, pl_, pr_;
    };

  }  // namespace

  FreeNilQuotient free_quotient(NilBasis const&        b,
                                unsigned               k,
                                Caps const&            caps,
                                QuotientOptions const& opts) {
    if (b.p == 0) {
      throw std::invalid_argument("nil exponent must be at least 1");
    }
    std::size_t const n = carrier_size_or_throw(k, b.p, caps);
    if (b.p == 1) {
      return FreeNilQuotient(k, 1, std::vector<std::uint32_t>(1, 0));
    }
    std::vector<std::size_t> powers(k, 1);
    for (unsigned i = 1; i < k; ++i) {
      powers[i] = powers[i - 1] * b.p;
    }

    std::vector<Pair>  pending;
    InstanceEnumerator gen(k, b.p, caps.max_instances, pending);
    for (auto const& id : b.ids) {
      gen.run(id);
    }
    if (opts.shuffle_seed) {
      std::mt19937_64 rng(*opts.shuffle_seed);
      std::shuffle(pending.begin(), pending.end(), rng);
    }

    auto translate = [&](std::size_t code, unsigned g) -> std::size_t {
      if (code == 0 || (code / powers[g]) % b.p == b.p - 1) {
        return 0;
      }
      return code + powers[g];
    };

    // Congruence closure: every merge of (a, b) schedules (ag, bg) for each
    // generator g.
    UnionFind uf(n);
    while (!pending.empty()) {
      auto const [x, y] = pending.back();
      pending.pop_back();
      if (!uf.unite(x, y)) {
        continue;
      }
      for (unsigned g = 0; g < k; ++g) {
        std::size_t const tx = translate(x, g), ty = translate(y, g);
        if (tx != ty) {
          pending.emplace_back(tx, ty);
        }
      }
    }

    std::vector<std::uint32_t> class_of(n);
    std::vector<std::uint32_t> id_of_root(n, UINT32_MAX);
    std::uint32_t              next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t const r = uf.find(i);
      if (id_of_root[r] == UINT32_MAX) {
        id_of_root[r] = next++;
      }
      class_of[i] = id_of_root[r];
    }
    return FreeNilQuotient(k, b.p, std::move(class_of));
  }

  std::shared_ptr<FreeNilQuotient const> cached_quotient(NilBasis const& b,
                                                         unsigned        k,
                                                         Caps const&     caps) {
    static std::mutex mtx;
    static std::map<std::string, std::shared_ptr<FreeNilQuotient const>> cache;

    carrier_size_or_throw(k, b.p, caps);
    NilBasis canon{b.p, {}};
    for (auto const& id : b.ids) {
      canon.ids.push_back(id.canonical());
    }
    std::string const key = to_string(canon) + "#" + std::to_string(k);
    {
      std::lock_guard<std::mutex> lock(mtx);
      auto                        it = cache.find(key);
      if (it != cache.end()) {
        return it->second;
      }
    }
    auto q = std::make_shared<FreeNilQuotient const>(free_quotient(b, k, caps));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(q)).first->second;
  }

  bool entails(NilBasis const& b, Identity const& id, Caps const& caps) {
    if (id.is_trivial()) {
      return true;
    }
    Identity const canon = id.canonical();
    auto const     k     = static_cast<unsigned>(canon.letters().size());
    auto const     q     = cached_quotient(b, k, caps);
    auto const     lhs   = q->class_of(canon.lhs());
    if (canon.is_zero_law()) {
      return lhs == FreeNilQuotient::zero_class;
    }
    return lhs == q->class_of(canon.rhs());
  }

  std::vector<Identity> split_zero(Identity const& id) {
    if (id.is_zero_law() || id.is_trivial()) {
      return {};
    }
    CommWord const& u      = id.lhs();
    CommWord const& v      = id.rhs();
    auto const      both   = std::vector<Identity>{Identity::zero(u), Identity::zero(v)};
    if (content(u) != content(v)) {
      return both;
    }
    // An embedding of equal length is a renaming of letters (for instance
    // x^2 y -> x y^2), which forces nothing; a strictly longer target lets the
    // identity be iterated past the nil exponent.
    unsigned const lu = length(u), lv = length(v);
    if ((lu < lv && embeds(u, v)) || (lv < lu && embeds(v, u))) {
      return both;
    }
    return {};
  }

  std::string to_string(Degree const& d) {
    switch (d.kind) {
      case Degree::Kind::exact: return std::to_string(d.n);
      case Degree::Kind::above_bound: return ">" + std::to_string(d.n);
      case Degree::Kind::infinite: return "infinite";
    }
    return {};
  }

  Degree degree(NilBasis const& b, unsigned bound, Caps const& caps) {
    if (bound > caps.max_letters) {
      throw CapExceeded("degree bound " + std::to_string(bound)
                        + " exceeds letter cap " + std::to_string(caps.max_letters));
    }
    for (unsigned n = 1; n <= bound; ++n) {
      if (entails(b, Identity::zero(CommWord::product_of_letters(n)), caps)) {
        return Degree::exact(n);
      }
    }
    return Degree::above_bound(bound);
  }

  namespace {

    void partitions(unsigned                            n,
                    unsigned                            max_part,
                    std::vector<unsigned>&              cur,
                    std::vector<std::vector<unsigned>>& out) {
      if (n == 0) {
        out.push_back(cur);
        return;
      }
      for (unsigned part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions(n - part, part, cur, out);
        cur.pop_back();
      }
    }

  }  // namespace

  std::vector<Identity> zr_generators(NilBasis const& b,
                                      unsigned        length_bound,
                                      Caps const&     caps) {
    std::vector<CommWord> zeros;
    for (unsigned n = 1; n <= length_bound; ++n) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned>              cur;
      partitions(n, n, cur, parts);
      for (auto const& part : parts) {
        std::vector<CommWord::Factor> f;
        for (std::uint32_t i = 0; i < part.size(); ++i) {
          f.push_back({Letter{i}, part[i]});
        }
        CommWord w(std::move(f));
        if (entails(b, Identity::zero(w), caps)) {
          zeros.push_back(std::move(w));
        }
      }
    }
    std::vector<Identity> out;
    for (auto const& w : zeros) {
      bool const redundant = std::any_of(
          zeros.begin(), zeros.end(), [&w](CommWord const& other) {
            return other != w && embeds(other, w);
          });
      if (!redundant) {
        out.push_back(Identity::zero(w));
      }
    }
    return out;
  }

  bool nil_subvariety(NilBasis const& a, NilBasis const& b, Caps const& caps) {
    if (!entails(a, Identity::zero(CommWord::letter(Letter{0}, b.p)), caps)) {
      return false;
    }
    return std::all_of(b.ids.begin(), b.ids.end(), [&](Identity const& id) {
      return entails(a, id, caps);
    });
  }

  std::array<CommWord, 2> const& w_constant() {
    static std::array<CommWord, 2> const w{
        CommWord{{Letter{0}, 2}, {Letter{1}, 1}},
        CommWord{{Letter{0}, 1}, {Letter{1}, 2}}};
    return w;
  }

}  // namespace varlat
