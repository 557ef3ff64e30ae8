#include "wordorder/random.hpp"

namespace wordorder {

RandomStream RandomStream::derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = mix64(seed);
  for (auto key : path) state = mix64(state ^ mix64(key + 0x632BE59BD9B4E019ULL));
  return RandomStream(state);
}

double RandomStream::uniform() {
  return std::generate_canonical<double, 53>(engine_);
}

std::size_t RandomStream::uniform_index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(engine_);
}

double RandomStream::normal(double mean, double stddev) {
  std::normal_distribution<double> dist(mean, stddev);
  return dist(engine_);
}

}  // namespace wordorder
