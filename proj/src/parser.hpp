// Recursive-descent parser for the shared concrete syntax.
//
// Precedence, low to high: <->, -> (right associative), |, &, ~.
// The prefix operators C, D(...), I(...), D^{...}(...) and the boxes bind
// like ~.  Sugar is expanded during parsing:
//
//   [u]f   -> (f & C f)            <u>f   -> ~[u]~f
//   [u']f  -> (f & I(f;;f))        <u'>f  -> ~[u']~f
//   <U>f   -> ~[U]~f
//   #T     -> (_t | ~_t)           #F     -> (_t & ~_t)
//   a <-> b -> ((a -> b) & (b -> a))

#pragma once

#include <string_view>

#include "formula.hpp"
#include "fragment.hpp"

namespace pdl {

// Parses the whole text; throws ParseError with the offending offset.
FormulaId parse_formula(std::string_view text);

// Parses a maximal formula prefix; *consumed receives the number of bytes
// read.  Used by the derivation-file reader, where a formula is followed
// by its justification on the same line.
FormulaId parse_formula_prefix(std::string_view text, std::size_t* consumed);

// parse_formula + fragment validation.
FormulaId parse(std::string_view text, Fragment frag);

}  // namespace pdl
