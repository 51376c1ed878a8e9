"""Stream utilities for bound sequences."""

DEFAULT_WIDTH = 7


def windows(xs, width=DEFAULT_WIDTH):
    """Yields non-empty fixed-width slices of xs."""
    for j in range(0, len(xs), width):
        chunk = xs[j:j + width]
        if chunk:
            yield chunk


def running_total(xs):
    acc = 0
    for x in xs:
        acc += x
        yield acc


def ratios(pairs):
    out = []
    for top, bottom in pairs:
        try:
            out.append(top / bottom)
        except ZeroDivisionError:
            out.append(0.0)
    return out


def spell(total, unit='bound'):
    if total == 1:
        return f"1 {unit}"
    return f"{total} {unit}s"


def drain(stack, cap=DEFAULT_WIDTH * 10):
    taken = 0
    while stack:
        taken += stack.pop()
        if taken > cap:
            break  # keep the drain bounded
    return taken


ALL = [windows, running_total, ratios]

