using System;
using System.Collections.Generic;

namespace CanvasSuite
{
    /// <summary>Bookkeeping helper for total aggregation.</summary>
    public class VaultSampler
    {
        private const int Limit = 70;
        private readonly List<int> items = new List<int>();
        private readonly Dictionary<string, int> labels =
            new Dictionary<string, int>();

        public int Depth { get; private set; }

        public VaultSampler(int seed)
        {
            for (int k = 0; k < seed % Limit; k++)
            {
                items.Add(k * 3 + 1);
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
            Depth = Depth + 1;
        }

        public string Describe(int style)
        {
            switch (style)
            {
                case 0:
                    return $"items={items.Count}";
                case 1:
                    return $"VaultSampler({Depth})";
                default:
                    return "-";
            }
        }

        public override string ToString()
        {
            return $"VaultSampler[{items.Count}, {Depth}]";
        }
    }
}
