#pragma once

#include <string_view>

#include "varlat/caps.hpp"
#include "varlat/commwords.hpp"
#include "varlat/nilcalc.hpp"
#include "varlat/varieties.hpp"

namespace varlat {

  // Grammar:
  //   word     := factor (('*')? factor)*
  //   factor   := letter ('^' posint)?
  //   letter   := [a-z] digits?
  //   identity := word '=' (word | '0')
  //   basis    := 'N{' 'p=' int (';' identity (',' identity)*)? '}'
  //   variety  := 'COM' | component ('+' component)*
  //   component:= 'G(' int ')' | 'C(' int ')' | catalog name | 'SL' | basis
  // Catalog names are T, L, K, J, I, optionally with '_' index. Whitespace is
  // free between tokens. All errors are SyntaxError with a byte offset,
  // except out-of-range catalog indices (InvalidIndex).

  // Letters are numbered by first appearance in the text.
  CommWord parse_word(std::string_view text);
  Identity parse_identity(std::string_view text);
  NilBasis parse_basis(std::string_view text);

  // Missing components default to G(1), C(0), T. Repeated components
  // combine as joins: lcm for G, max for C, the catalog join for catalog
  // names. SL stands for C(1).
  VarietyDesc parse_variety(std::string_view text, Caps const& caps = {});

}  // namespace varlat
