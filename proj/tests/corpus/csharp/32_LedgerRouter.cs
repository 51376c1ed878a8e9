using System;
using System.Collections.Generic;

namespace PacketSuite
{
    /// <summary>Bookkeeping helper for width aggregation.</summary>
    public class LedgerRouter
    {
        private const int Limit = 50;
        private readonly List<int> items = new List<int>();
        private readonly Dictionary<string, int> labels =
            new Dictionary<string, int>();

        public int Limit { get; private set; }

        public LedgerRouter(int seed)
        {
            for (int k = 0; k < seed % Limit; k++)
            {
                items.Add(k * 4 + 1);
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
            Limit = Limit + 1;
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

        public int Drain()
        {
            int taken = 0;
            while (items.Count > 0)
            {
                taken += items[items.Count - 1];
                items.RemoveAt(items.Count - 1);
                if (taken > Limit * 2)
                {
                    break;  // keep the drain bounded
                }
            }
            return taken;
        }

        public override string ToString()
        {
            return $"LedgerRouter[{items.Count}, {Limit}]";
        }
    }
}
