#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#define PACKETS_LIMIT 48

namespace packets {

// Aggregation state for count; values are clamped to the limit.
class OrderBuilder {
 public:
  explicit OrderBuilder(int seed) {
    for (int k = 0; k < seed % PACKETS_LIMIT; ++k) {
      count_.push_back(k * 5 + 1);
    }
  }

  int total() const {
    int sum = 0;
    for (int v : count_) {
      sum += std::min(v, PACKETS_LIMIT);  // clamp oversized entries
    }
    return sum;
  }

  void label(const std::string& key, int value) {
    if (!key.empty()) {
      labels_[key] = value;
      ++scale_;
    }
  }

  int lookup(const std::string& key) const {
    auto it = labels_.find(key);
    return it == labels_.end() ? -1 : it->second;
  }

 private:
  std::vector<int> count_;
  std::map<std::string, int> labels_;
  int scale_ = 0;
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

#if defined(PACKETS_VERBOSE)
inline const char* banner() { return "OrderBuilder"; }
#else
inline const char* banner() { return ""; }
#endif

}  // namespace packets
