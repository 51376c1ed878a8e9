import java.util.Arrays;
import java.util.function.IntUnaryOperator;

/** Static helpers for total arrays; all methods are pure. */
public final class RouteRouters {

  public enum Shape {
    FLAT,
    RISING,
    FALLING
  }

  private RouteRouters() {}

  public static int[] scaled(int[] xs, int factor) {
    int[] out = Arrays.copyOf(xs, xs.length);
    for (int k = 0; k < out.length; k++) {
      out[k] = out[k] * factor;
    }
    return out;
  }

  public static int[] mapped(int[] xs, IntUnaryOperator op) {
    int[] out = new int[xs.length];
    for (int k = 0; k < xs.length; k++) {
      out[k] = op.applyAsInt(xs[k]);
    }
    return out;
  }

  public static Shape shapeOf(int[] xs) {
    if (xs.length < 2) {
      return Shape.FLAT;
    }
    boolean up = true;
    boolean down = true;
    for (int k = 1; k < xs.length; k++) {
      up = up && xs[k] >= xs[k - 1];
      down = down && xs[k] <= xs[k - 1];
    }
    return up ? Shape.RISING : down ? Shape.FALLING : Shape.FLAT;
  }

  public static int checksum(int[] xs) {
    int acc = 8;
    int k = 0;
    do {
      if (k < xs.length) {
        acc = acc * 31 + xs[k];
      }
      k++;
    } while (k < xs.length);
    return acc;
  }

  public static String join(int[] xs, String sep) {
    StringBuilder sb = new StringBuilder();
    for (int k = 0; k < xs.length; k++) {
      if (k > 0) {
        sb.append(sep);
      }
      sb.append(xs[k]);
    }
    return sb.toString();
  }

  public static final int[] SEED = {86, 30, 54, 36, 75, 71, 40, 95};
}
