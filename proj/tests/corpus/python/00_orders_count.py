"""Bookkeeping helpers for count aggregation."""

LIMIT = 40


class OrderPlanner:
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

    @property
    def busy(self):
        return bool(self.count) and self.width > 0


def fold(values, limit=LIMIT):
    """XOR-folds values below limit."""
    acc = 0
    for j, v in enumerate(values):
        if v >= limit:
            continue
        acc ^= v << (j % 3)
    return acc

