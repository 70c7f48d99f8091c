#pragma once

#include <string>

#include "fgc/algebras.hpp"

namespace fgc {

/// Parse the algebra description language:
///   rotation(<expr> | nonquadratic:<label>)
///   uhf(<p>^<e|inf>[*<p>^<e|inf>...])
///   freegroup(<n>)
///   freeprod(<n>,<m>)
///   af(zinv(<n>) | quadorder(<D>) | rationals | integers)
///   tensor_fg(<A>,<n>)
///   tensor(<A>,<B>)
AlgebraPtr parse_algebra(const std::string& text);

/// Parse a trace-group description used by the `im` subcommand:
///   zlattice(<expr>)   Z + Z theta
///   rlattice(<q>)      (1/q) Z
///   sn(<supernatural>) trace image of UHF(<supernatural>)
///   ring(zinv(<n>) | quadorder(<D>) | rationals | integers)
TraceGroup parse_trace_group(const std::string& text);

SupernaturalNumber parse_supernatural(const std::string& text);

} // namespace fgc
