#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#define LEDGER_LIMIT 64

namespace ledger {

// Aggregation state for score; values are clamped to the limit.
class CanvasPlanner {
 public:
  explicit CanvasPlanner(int seed) {
    for (int k = 0; k < seed % LEDGER_LIMIT; ++k) {
      score_.push_back(k * 7 + 1);
    }
  }

  int total() const {
    int sum = 0;
    for (int v : score_) {
      sum += std::min(v, LEDGER_LIMIT);  // clamp oversized entries
    }
    return sum;
  }

  void label(const std::string& key, int value) {
    if (!key.empty()) {
      labels_[key] = value;
      ++weight_;
    }
  }

  int lookup(const std::string& key) const {
    auto it = labels_.find(key);
    return it == labels_.end() ? -1 : it->second;
  }

 private:
  std::vector<int> score_;
  std::map<std::string, int> labels_;
  int weight_ = 0;
};

template <typename T>
T clamp_to(T v, T lo, T hi) {
  if (v < lo) return lo;
  return v > hi ? hi : v;
}

}  // namespace ledger
