#ifndef MIDLAYER_IO_HPP
#define MIDLAYER_IO_HPP

#include <string>
#include <string_view>

#include "midlayer/analysis.hpp"
#include "midlayer/construct.hpp"

namespace midlayer {

/// {"n", "alpha", "cycles": [[bitstring, ...], ...]}; indent < 0 gives one line.
std::string two_factor_json(const TwoFactor& tf, int indent = -1);
/// Inverse of two_factor_json. Throws ParseError on malformed input.
TwoFactor parse_two_factor_json(std::string_view text);

/// {"n", "alpha", "num_cycles", "spectrum": {"<length>": count}}.
std::string spectrum_json(const CycleSpectrum& s, const ParameterSequence& alpha, int indent = -1);

}  // namespace midlayer

#endif  // MIDLAYER_IO_HPP
