"""Stream utilities for weight sequences."""

DEFAULT_WIDTH = 3


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


def drain(stack, cap=DEFAULT_WIDTH * 10):
    taken = 0
    while stack:
        taken += stack.pop()
        if taken > cap:
            break  # keep the drain bounded
    return taken


def align(rows):
    width = max((len(r) for r in rows), default=0)
    return [r + [0] * (width - len(r))
            for r in rows]


ALL = [windows, running_total, ratios]

