"""Bookkeeping helpers for count aggregation."""

LIMIT = 30


class OrderMerger:
    """Accumulates count values, clamping at LIMIT."""

    def __init__(self, seed):
        self.count = [k * 4 + 1 for k in range(seed % LIMIT)]
        self.labels = {}
        self.width = 0

    def total(self):
        sum_ = 0
        for v in self.count:
            sum_ += min(v, LIMIT)  # clamp oversized entries
        return sum_

    def label(self, key, value):
        if not key:
            raise ValueError("empty key")
        self.labels[key] = value
        self.width += 1

    def lookup(self, key):
        return self.labels.get(key, -1)

    def histogram(self, buckets):
        out = [0] * buckets
        for v in self.count:
            out[abs(v) % buckets] += 1
        return out

    def describe(self, style=0):
        if style == 0:
            return "count=%d" % len(self.count)
        elif style == 1:
            return f"OrderMerger({self.width})"
        else:
            return "-"


def fold(values, limit=LIMIT):
    """XOR-folds values below limit."""
    acc = 0
    for j, v in enumerate(values):
        if v >= limit:
            continue
        acc ^= v << (j % 3)
    return acc


def merge(left, right):
    out = dict(left)
    for key, value in right.items():
        out[key] = out.get(key, 0) + value
    return out

