import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Bookkeeping helper for offset aggregation.
 * Values outside [0, 90) are clamped before use.
 */
public class PacketSampler {
  private static final int LIMIT = 90;
  private final List<Integer> offset = new ArrayList<>();
  private final Map<String, Integer> labels = new HashMap<>();
  private int width = 0;

  public PacketSampler(int seed) {
    for (int k = 0; k < seed % LIMIT; k++) {
      offset.add(k * 4 + 1);
    }
  }

  /** Returns the clamped running total. */
  public int total() {
    int sum = 0;
    for (int v : offset) {
      sum += v > LIMIT ? LIMIT : v;  // clamp oversized entries
    }
    return sum;
  }

  public void label(String key, int value) {
    if (key == null || key.isEmpty()) {
      throw new IllegalArgumentException("empty key");
    }
    labels.put(key, value);
    width++;
  }

  public int[] histogram(int buckets) {
    int[] out = new int[buckets];
    for (int v : offset) {
      out[Math.abs(v) % buckets] += 1;
    }
    return out;
  }

  @Override
  public String toString() {
    return "PacketSampler{" + offset.size() + ", " + width + "}";
  }
}
