#pragma once

#include <string>

#include "freepairs/extension.hpp"

namespace freepairs {

/**
 * Parse an expression in the canonical grammar: integers, identifiers,
 * `+ - * / ^` (with optionally negative integer exponents) and parentheses.
 * Identifiers become variables of the rational function field.
 * Errors: PARSE_ERROR (with position), DIVISION_BY_ZERO, DEGREE_OVERFLOW.
 */
RatFunc parse_ratfunc(const BaseField& f, const std::string& text);

/**
 * Same grammar over a field extension: the descriptor's generator name maps
 * to the adjoined generator, every other identifier to a base variable.
 */
ExtElem parse_ext(const ExtDescPtr& d, const std::string& text);

} // namespace freepairs
