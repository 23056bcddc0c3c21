#include "midlayer/io.hpp"

#include "json.hpp"

namespace midlayer {

using nlohmann::json;

std::string two_factor_json(const TwoFactor& tf, int indent) {
  json cycles = json::array();
  for (const auto& c : tf.cycles) {
    json cycle = json::array();
    for (Word v : c) cycle.push_back(bits::to_string(v, tf.bit_length()));
    cycles.push_back(std::move(cycle));
  }
  json j = {{"n", tf.n}, {"alpha", tf.alpha.str()}, {"cycles", std::move(cycles)}};
  return j.dump(indent);
}

TwoFactor parse_two_factor_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    TwoFactor tf;
    tf.n = j.at("n").get<int>();
    tf.alpha = ParameterSequence::parse(j.at("alpha").get<std::string>());
    if (tf.alpha.target_n() != tf.n) throw ParseError("alpha length does not match n");
    for (const auto& c : j.at("cycles")) {
      std::vector<Word> cycle;
      for (const auto& v : c) {
        const Bitstring b = Bitstring::parse(v.get<std::string>());
        if (b.length() != tf.bit_length()) throw ParseError("vertex " + b.str() + " has the wrong length");
        cycle.push_back(b.word());
      }
      tf.cycles.push_back(std::move(cycle));
    }
    return tf;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed 2-factor JSON: ") + e.what());
  }
}

std::string spectrum_json(const CycleSpectrum& s, const ParameterSequence& alpha, int indent) {
  json spec = json::object();
  for (const auto& [len, count] : s.counts) spec[std::to_string(len)] = count;
  json j = {{"n", s.n}, {"alpha", alpha.str()}, {"num_cycles", s.num_cycles()}, {"spectrum", std::move(spec)}};
  return j.dump(indent);
}

}  // namespace midlayer
