#include "ppx/core/rng.hpp"

#include <limits>

namespace ppx {

CounterRng CounterRng::keyed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t key = 0x5050582d726e67ULL;  // "PPX-rng"
  for (std::uint64_t part : parts) key = mix64(key ^ mix64(part + kGamma));
  return CounterRng(key);
}

std::uint64_t CounterRng::below(std::uint64_t n) {
  // Rejection keeps the result exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % n;
}

std::int64_t CounterRng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

CounterRng CounterRng::derive(std::uint64_t tag) const {
  return CounterRng(mix64(key_ ^ mix64(tag ^ 0xd1b54a32d192ed03ULL)));
}

}  // namespace ppx
