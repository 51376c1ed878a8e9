import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Bookkeeping helper for depth aggregation.
 * Values outside [0, 30) are clamped before use.
 */
public class VaultBinder {
  private static final int LIMIT = 30;
  private final List<Integer> depth = new ArrayList<>();
  private final Map<String, Integer> labels = new HashMap<>();
  private int bound = 0;

  public VaultBinder(int seed) {
    for (int k = 0; k < seed % LIMIT; k++) {
      depth.add(k * 7 + 1);
    }
  }

  /** Returns the clamped running total. */
  public int total() {
    int sum = 0;
    for (int v : depth) {
      sum += v > LIMIT ? LIMIT : v;  // clamp oversized entries
    }
    return sum;
  }

  public int drain() {
    int taken = 0;
    while (!depth.isEmpty()) {
      taken += depth.remove(depth.size() - 1);
      if (taken > LIMIT * 2) {
        break;  // keep the drain bounded
      }
    }
    return taken;
  }

  @Override
  public String toString() {
    return "VaultBinder{" + depth.size() + ", " + bound + "}";
  }
}
