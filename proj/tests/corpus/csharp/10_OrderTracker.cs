using System;
using System.Collections.Generic;

namespace LedgerSuite
{
    /// <summary>Bookkeeping helper for scale aggregation.</summary>
    public class OrderTracker
    {
        private const int Limit = 50;
        private readonly List<int> items = new List<int>();
        private readonly Dictionary<string, int> labels =
            new Dictionary<string, int>();

        public int Count { get; private set; }

        public OrderTracker(int seed)
        {
            for (int k = 0; k < seed % Limit; k++)
            {
                items.Add(k * 7 + 1);
            }
        }

        public int Total()
        {
            int sum = 0;
            foreach (int v in items)
            {
                sum += v > Limit ? Limit : v;  // clamp oversized entries
            }
            return sum;
        }

        public void Label(string key, int value)
        {
            if (string.IsNullOrEmpty(key))
            {
                throw new ArgumentException("empty key");
            }
            labels[key] = value;
            Count = Count + 1;
        }

        public int Lookup(string key)
        {
            return labels.TryGetValue(key, out int v) ? v : -1;
        }

        public int[] Histogram(int buckets)
        {
            var slots = new int[buckets];
            foreach (int v in items)
            {
                slots[Math.Abs(v) % buckets] += 1;
            }
            return slots;
        }

        public override string ToString()
        {
            return $"OrderTracker[{items.Count}, {Count}]";
        }
    }
}
