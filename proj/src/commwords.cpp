#include "varlat/commwords.hpp"

#include <algorithm>
#include <stdexcept>

#include "varlat/error.hpp"

namespace varlat {

  std::string to_string(Letter x) {
    switch (x.id) {
      case 0: return "x";
      case 1: return "y";
      case 2: return "z";
      default: return "x" + std::to_string(x.id - 2);
    }
  }

  CommWord::CommWord(std::vector<Factor> factors) {
    if (factors.empty()) {
      throw std::invalid_argument("a commutative word must be non-empty");
    }
    std::sort(factors.begin(), factors.end());
    for (auto const& f : factors) {
      if (f.exp == 0) {
        throw std::invalid_argument("exponents must be positive");
      }
      if (!factors_.empty() && factors_.back().letter == f.letter) {
        factors_.back().exp += f.exp;
      } else {
        factors_.push_back(f);
      }
    }
  }

  CommWord CommWord::letter(Letter x, unsigned exp) {
    return CommWord({Factor{x, exp}});
  }

  CommWord CommWord::product_of_letters(unsigned n) {
    std::vector<Factor> f;
    for (std::uint32_t i = 0; i < n; ++i) {
      f.push_back({Letter{i}, 1});
    }
    return CommWord(std::move(f));
  }

  unsigned CommWord::exponent(Letter x) const noexcept {
    auto it = std::lower_bound(
        factors_.begin(), factors_.end(), x, [](Factor const& f, Letter l) {
          return f.letter < l;
        });
    return (it != factors_.end() && it->letter == x) ? it->exp : 0;
  }

  std::vector<Letter> content(CommWord const& u) {
    std::vector<Letter> out;
    for (auto const& f : u.factors()) {
      out.push_back(f.letter);
    }
    return out;
  }

  unsigned length(CommWord const& u) {
    unsigned n = 0;
    for (auto const& f : u.factors()) {
      n += f.exp;
    }
    return n;
  }

  CommWord mul(CommWord const& u, CommWord const& v) {
    std::vector<CommWord::Factor> f(u.factors().begin(), u.factors().end());
    f.insert(f.end(), v.factors().begin(), v.factors().end());
    return CommWord(std::move(f));
  }

  CommWord pow(CommWord const& u, unsigned n) {
    if (n == 0) {
      throw std::invalid_argument("power of a word must be positive");
    }
    std::vector<CommWord::Factor> f(u.factors().begin(), u.factors().end());
    for (auto& x : f) {
      x.exp *= n;
    }
    return CommWord(std::move(f));
  }

  CommWord substitute(CommWord const& u, Substitution const& xi) {
    std::vector<CommWord::Factor> f;
    for (auto const& [x, e] : u.factors()) {
      auto it = xi.find(x);
      if (it == xi.end()) {
        throw MissingImage("no image for letter " + to_string(x));
      }
      for (auto const& g : it->second.factors()) {
        f.push_back({g.letter, g.exp * e});
      }
    }
    return CommWord(std::move(f));
  }

  namespace {

    // Depth-first search over image vectors for the letters of u. `budget`
    // holds what is left of v, indexed like `targets`.
    bool embeds_from(std::span<CommWord::Factor const> src,
                     std::size_t                       i,
                     std::vector<unsigned>&            budget) {
      if (i == src.size()) {
        return true;
      }
      unsigned const        e = src[i].exp;
      std::size_t const     k = budget.size();
      std::vector<unsigned> img(k, 0);
      std::vector<unsigned> bound(k);
      for (std::size_t c = 0; c < k; ++c) {
        bound[c] = budget[c] / e;
      }
      // Odometer over 0 <= img <= bound, skipping the zero vector.
      while (true) {
        std::size_t c = 0;
        while (c < k && img[c] == bound[c]) {
          img[c] = 0;
          ++c;
        }
        if (c == k) {
          return false;
        }
        ++img[c];
        for (std::size_t j = 0; j < k; ++j) {
          budget[j] -= e * img[j];
        }
        bool const found = embeds_from(src, i + 1, budget);
        for (std::size_t j = 0; j < k; ++j) {
          budget[j] += e * img[j];
        }
        if (found) {
          return true;
        }
      }
    }

  }  // namespace

  bool embeds(CommWord const& u, CommWord const& v) {
    if (length(u) > length(v)) {
      return false;
    }
    std::vector<unsigned> budget;
    for (auto const& f : v.factors()) {
      budget.push_back(f.exp);
    }
    return embeds_from(u.factors(), 0, budget);
  }

  std::string to_string(CommWord const& u) {
    std::string out;
    for (auto const& [x, e] : u.factors()) {
      if (!out.empty()) {
        out += '*';
      }
      out += to_string(x);
      if (e > 1) {
        out += '^' + std::to_string(e);
      }
    }
    return out;
  }

  Identity Identity::equal(CommWord lhs, CommWord rhs) {
    return Identity(std::move(lhs), std::move(rhs));
  }

  Identity Identity::zero(CommWord w) {
    return Identity(std::move(w), std::nullopt);
  }

  std::vector<Letter> Identity::letters() const {
    auto out = content(lhs_);
    if (rhs_) {
      auto r = content(*rhs_);
      out.insert(out.end(), r.begin(), r.end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
  }

  CommWord rename(CommWord const& u, std::map<Letter, Letter> const& names) {
    std::vector<CommWord::Factor> f;
    for (auto const& [x, e] : u.factors()) {
      auto it = names.find(x);
      f.push_back({it == names.end() ? x : it->second, e});
    }
    return CommWord(std::move(f));
  }

  Identity Identity::canonical() const {
    std::map<Letter, Letter> names;
    auto                     visit = [&names](CommWord const& w) {
      for (auto const& f : w.factors()) {
        if (!names.contains(f.letter)) {
          std::uint32_t const next = static_cast<std::uint32_t>(names.size());
          names.emplace(f.letter, Letter{next});
        }
      }
    };
    visit(lhs_);
    if (rhs_) {
      visit(*rhs_);
      return Identity(rename(lhs_, names), rename(*rhs_, names));
    }
    return Identity(rename(lhs_, names), std::nullopt);
  }

  std::string to_string(Identity const& id) {
    return to_string(id.lhs()) + " = "
           + (id.is_zero_law() ? std::string("0") : to_string(id.rhs()));
  }

}  // namespace varlat
