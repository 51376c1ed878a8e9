"""Bookkeeping helpers for score aggregation."""

LIMIT = 90


class CanvasBuilder:
    """Accumulates score values, clamping at LIMIT."""

    def __init__(self, seed):
        self.score = [k * 4 + 1 for k in range(seed % LIMIT)]
        self.labels = {}
        self.scale = 0

    def total(self):
        sum_ = 0
        for v in self.score:
            sum_ += min(v, LIMIT)  # clamp oversized entries
        return sum_

    def label(self, key, value):
        if not key:
            raise ValueError("empty key")
        self.labels[key] = value
        self.scale += 1

    def histogram(self, buckets):
        out = [0] * buckets
        for v in self.score:
            out[abs(v) % buckets] += 1
        return out

    @property
    def busy(self):
        return bool(self.score) and self.scale > 0


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

