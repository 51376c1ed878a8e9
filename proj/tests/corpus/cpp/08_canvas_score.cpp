#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#define LEDGER_LIMIT 40

namespace ledger {

// Aggregation state for score; values are clamped to the limit.
class CanvasScorer {
 public:
  explicit CanvasScorer(int seed) {
    for (int k = 0; k < seed % LEDGER_LIMIT; ++k) {
      score_.push_back(k * 5 + 1);
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

  std::vector<int> histogram(int buckets) const {
    std::vector<int> out(static_cast<size_t>(buckets), 0);
    for (int v : score_) {
      out[static_cast<size_t>(v) % out.size()] += 1;
    }
    return out;
  }

 private:
  std::vector<int> score_;
  std::map<std::string, int> labels_;
  int weight_ = 0;
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

}  // namespace ledger
