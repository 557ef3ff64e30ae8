#include "wordorder/channel.hpp"

#include <stdexcept>

#include "wordorder/lexicon.hpp"

namespace wordorder {

void NoiseParams::validate() const {
  if (!(flip_probability >= 0.0 && flip_probability <= 1.0)) {
    throw std::invalid_argument("flip probability must lie in [0, 1]");
  }
}

void apply_noise_in_place(std::span<std::string> tokens, const NoiseParams& params,
                          RandomStream& rng) {
  const std::size_t letters = kAlphabet.size();
  for (auto& token : tokens) {
    for (char& c : token) {
      const std::size_t self = alphabet_index(c);
      if (self == letters) throw std::invalid_argument("token contains a letter outside the alphabet");
      if (!rng.bernoulli(params.flip_probability)) continue;
      if (params.exclude_self) {
        std::size_t r = rng.uniform_index(letters - 1);
        if (r >= self) ++r;
        c = kAlphabet[r];
      } else {
        c = kAlphabet[rng.uniform_index(letters)];
      }
    }
  }
}

std::vector<std::string> apply_noise(std::span<const std::string> tokens, const NoiseParams& params,
                                     RandomStream& rng) {
  std::vector<std::string> out(tokens.begin(), tokens.end());
  apply_noise_in_place(out, params, rng);
  return out;
}

}  // namespace wordorder
