#include "varlat/text.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "varlat/error.hpp"

namespace varlat {

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view s) : s_(s) {}

      void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
      }

      bool accept(char c) {
        if (peek() == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      bool accept(std::string_view word) {
        skip();
        if (s_.substr(pos_, word.size()) == word) {
          pos_ += word.size();
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      [[noreturn]] void fail(std::string const& msg) {
        throw SyntaxError(msg, pos_);
      }

      void finish() {
        if (peek() != '\0') {
          fail(std::string("unexpected '") + s_[pos_] + "'");
        }
      }

      std::size_t pos() {
        skip();
        return pos_;
      }

      unsigned integer() {
        skip();
        std::size_t const start = pos_;
        unsigned long     v     = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
          if (v > 1'000'000'000) {
            fail("number too large");
          }
          ++pos_;
        }
        if (pos_ == start) {
          fail("expected a number");
        }
        return static_cast<unsigned>(v);
      }

      // A lowercase letter followed by optional digits.
      std::optional<std::string> name() {
        skip();
        if (pos_ >= s_.size() || !std::islower(static_cast<unsigned char>(s_[pos_]))) {
          return std::nullopt;
        }
        std::size_t const start = pos_++;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
        return std::string(s_.substr(start, pos_ - start));
      }

      CommWord word(std::map<std::string, Letter>& names) {
        std::vector<CommWord::Factor> factors;
        while (true) {
          auto n = name();
          if (!n) {
            fail(factors.empty() ? "expected a letter" : "expected a letter after '*'");
          }
          auto const [it, fresh]
              = names.try_emplace(*n, Letter{static_cast<std::uint32_t>(names.size())});
          unsigned exp = 1;
          if (accept('^')) {
            exp = integer();
            if (exp == 0) {
              fail("exponent must be positive");
            }
          }
          factors.push_back({it->second, exp});
          if (accept('*')) {
            continue;
          }
          char const c = peek();
          if (!std::islower(static_cast<unsigned char>(c))) {
            break;
          }
        }
        return CommWord(std::move(factors));
      }

      Identity identity() {
        std::map<std::string, Letter> names;
        CommWord                      lhs = word(names);
        expect('=');
        if (peek() == '=') {
          fail("unexpected '='");
        }
        if (accept('0')) {
          return Identity::zero(std::move(lhs));
        }
        return Identity::equal(std::move(lhs), word(names));
      }

      NilBasis basis() {
        if (!accept("N{")) {
          fail("expected 'N{'");
        }
        if (!accept("p")) {
          fail("expected 'p='");
        }
        expect('=');
        std::size_t const at = pos();
        unsigned const    p  = integer();
        if (p == 0) {
          pos_ = at;
          fail("nil exponent must be positive");
        }
        std::vector<Identity> ids;
        if (accept(';')) {
          do {
            ids.push_back(identity());
          } while (accept(','));
        }
        expect('}');
        return NilBasis{p, std::move(ids)};
      }

     private:
      std::string_view s_;
      std::size_t      pos_ = 0;
    };

    std::optional<Column> column_of(char c) {
      switch (c) {
        case 'L': return Column::L;
        case 'K': return Column::K;
        case 'J': return Column::J;
        case 'I': return Column::I;
        default: return std::nullopt;
      }
    }

  }  // namespace

  CommWord parse_word(std::string_view text) {
    Parser                        p(text);
    std::map<std::string, Letter> names;
    CommWord                      w = p.word(names);
    p.finish();
    return w;
  }

  Identity parse_identity(std::string_view text) {
    Parser   p(text);
    Identity id = p.identity();
    p.finish();
    return id;
  }

  NilBasis parse_basis(std::string_view text) {
    Parser   p(text);
    NilBasis b = p.basis();
    p.finish();
    return b;
  }

  VarietyDesc parse_variety(std::string_view text, Caps const& caps) {
    Parser p(text);
    if (p.accept("COM")) {
      p.finish();
      return VarietyDesc::com();
    }
    unsigned               d = 1, m = 0;
    std::optional<NilPart> nil;
    auto                   add_nil = [&](NilPart part) {
      if (!nil) {
        nil = std::move(part);
        return;
      }
      auto const* a = std::get_if<CatalogElement>(&*nil);
      auto const* b = std::get_if<CatalogElement>(&part);
      if (!a || !b) {
        p.fail("a nil basis cannot be combined with another nil part");
      }
      nil = catalog_join(*a, *b);
    };
    do {
      if (p.accept("SL")) {
        m = std::max(m, 1u);
      } else if (p.peek() == 'N') {
        add_nil(p.basis());
      } else if (p.accept("G(")) {
        unsigned const g = p.integer();
        if (g == 0) {
          p.fail("group exponent must be positive");
        }
        p.expect(')');
        d = std::lcm(d, g);
      } else if (p.accept("C(")) {
        m = std::max(m, p.integer());
        p.expect(')');
      } else if (p.accept('T')) {
        add_nil(CatalogElement{Column::L, CatIndex::finite(1)});
      } else if (auto col = column_of(p.peek())) {
        p.accept(p.peek());
        CatIndex idx = CatIndex::omega();
        if (p.accept('_')) {
          idx = CatIndex::finite(p.integer());
        }
        add_nil(make_catalog(*col, idx));
      } else {
        p.fail("expected a variety component");
      }
    } while (p.accept('+'));
    p.finish();
    return VarietyDesc::composite(
        d, m, nil.value_or(CatalogElement{Column::L, CatIndex::finite(1)}), caps);
  }

}  // namespace varlat
