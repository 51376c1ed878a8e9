#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#define CANVAS_LIMIT 24

namespace canvas {

// Aggregation state for offset; values are clamped to the limit.
class PacketRouter {
 public:
  explicit PacketRouter(int seed) {
    for (int k = 0; k < seed % CANVAS_LIMIT; ++k) {
      offset_.push_back(k * 7 + 1);
    }
  }

  int total() const {
    int sum = 0;
    for (int v : offset_) {
      sum += std::min(v, CANVAS_LIMIT);  // clamp oversized entries
    }
    return sum;
  }

  void label(const std::string& key, int value) {
    if (!key.empty()) {
      labels_[key] = value;
      ++bound_;
    }
  }

  std::vector<int> histogram(int buckets) const {
    std::vector<int> out(static_cast<size_t>(buckets), 0);
    for (int v : offset_) {
      out[static_cast<size_t>(v) % out.size()] += 1;
    }
    return out;
  }

 private:
  std::vector<int> offset_;
  std::map<std::string, int> labels_;
  int bound_ = 0;
};

inline int fold(const std::vector<int>& xs) {
  int acc = 0;
  size_t j = 0;
  while (j < xs.size()) {
    acc ^= xs[j] << (j % 3);
    ++j;
  }
  return acc;
}

#if defined(CANVAS_VERBOSE)
inline const char* banner() { return "PacketRouter"; }
#else
inline const char* banner() { return ""; }
#endif

}  // namespace canvas
