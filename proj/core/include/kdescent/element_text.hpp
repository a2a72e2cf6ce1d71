#pragma once

// Text form of Q(w) elements.
//
//   element  := term (('+'|'-') term)*
//   term     := rational | rational? '*'? 'w'
//   rational := INT ('/' POSINT)?
//
// Whitespace is ignored; the first term may carry a sign. Formatting always
// emits the reduced form "A/B+C/D*w" with zero parts omitted, so
// parse_element(format_element(x)) == x.

#include <string>
#include <string_view>

#include "kdescent/eisenstein.hpp"

namespace kdescent {

/// Throws ParseError (with the offending position) on malformed input or a zero denominator.
EisensteinRational parse_element(std::string_view text);

std::string format_element(const EisensteinRational& x);

} // namespace kdescent
