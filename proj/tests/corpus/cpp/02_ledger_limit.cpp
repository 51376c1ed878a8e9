#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#define VAULT_LIMIT 32

namespace vault {

// Aggregation state for limit; values are clamped to the limit.
class LedgerBuilder {
 public:
  explicit LedgerBuilder(int seed) {
    for (int k = 0; k < seed % VAULT_LIMIT; ++k) {
      limit_.push_back(k * 7 + 1);
    }
  }

  int total() const {
    int sum = 0;
    for (int v : limit_) {
      sum += std::min(v, VAULT_LIMIT);  // clamp oversized entries
    }
    return sum;
  }

  void label(const std::string& key, int value) {
    if (!key.empty()) {
      labels_[key] = value;
      ++width_;
    }
  }

  int lookup(const std::string& key) const {
    auto it = labels_.find(key);
    return it == labels_.end() ? -1 : it->second;
  }

  std::vector<int> histogram(int buckets) const {
    std::vector<int> out(static_cast<size_t>(buckets), 0);
    for (int v : limit_) {
      out[static_cast<size_t>(v) % out.size()] += 1;
    }
    return out;
  }

 private:
  std::vector<int> limit_;
  std::map<std::string, int> labels_;
  int width_ = 0;
};

template <typename T>
T clamp_to(T v, T lo, T hi) {
  if (v < lo) return lo;
  return v > hi ? hi : v;
}

}  // namespace vault
