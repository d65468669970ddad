#pragma once

#include <cstdint>
#include <vector>

namespace spannerweave {

// Deterministic splittable RNG (splitmix64 core). Identical sequences on
// every platform — no std::random distributions anywhere, so generated
// test instances are reproducible bit-for-bit from a seed.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Independent substream; forking with distinct tags gives decorrelated
  // streams without consuming state from this one.
  SplitRng fork(std::uint64_t tag) const {
    SplitRng child(state_ ^ (0x9e3779b97f4a7c15ull * (tag + 0x632be59bd9b4e019ull)));
    child.next();
    return child;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace spannerweave
