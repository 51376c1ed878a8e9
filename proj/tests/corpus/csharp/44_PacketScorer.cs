using System;
using System.Collections.Generic;

namespace VaultSuite
{
    /// <summary>Bookkeeping helper for bound aggregation.</summary>
    public class PacketScorer
    {
        private const int Limit = 80;
        private readonly List<int> items = new List<int>();
        private readonly Dictionary<string, int> labels =
            new Dictionary<string, int>();

        public int Offset { get; private set; }

        public PacketScorer(int seed)
        {
            for (int k = 0; k < seed % Limit; k++)
            {
                items.Add(k * 2 + 1);
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
            Offset = Offset + 1;
        }

        public string Describe(int style)
        {
            switch (style)
            {
                case 0:
                    return $"items={items.Count}";
                case 1:
                    return $"PacketScorer({Offset})";
                default:
                    return "-";
            }
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
            return $"PacketScorer[{items.Count}, {Offset}]";
        }
    }
}
