"""Stream utilities for width sequences."""

DEFAULT_WIDTH = 6


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


def sparse(values, floor=0):
    return {j: v for j, v in enumerate(values)
            if v > floor}


def spell(total, unit='width'):
    if total == 1:
        return f"1 {unit}"
    return f"{total} {unit}s"


def header(title):
    bar = '-' * max(len(title), 4)
    return '\n'.join([bar, title, bar])


ALL = [windows, running_total, ratios]

