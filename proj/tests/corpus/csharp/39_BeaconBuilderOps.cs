using System;
using System.Collections.Generic;

namespace LatticeKit
{
    public enum Phase
    {
        Idle = 0,
        Busy = 1,
        Done = 2,
    }

    public struct Span
    {
        public int Begin;
        public int End;

        public int Size => End - Begin;
    }

    public static class BeaconBuilderOps
    {
        public const string Marker = @"LatticeKit\v1";

        public static string PhaseName(Phase p)
        {
            switch (p)
            {
                case Phase.Idle:
                    return "idle";
                case Phase.Busy:
                    return "busy";
                default:
                    return "done";
            }
        }

        public static List<Span> Chunks(int n, int w)
        {
            var spans = new List<Span>();
            for (int at = 0; at < n; at += w)
            {
                spans.Add(new Span { Begin = at, End = Math.Min(at + w, n) });
            }
            return spans;
        }

        public static string Join(int[] xs, string sep)
        {
            var sb = new System.Text.StringBuilder();
            for (int k = 0; k < xs.Length; k++)
            {
                if (k > 0)
                {
                    sb.Append(sep);
                }
                sb.Append(xs[k]);
            }
            return sb.ToString();
        }

        public static int? FirstAbove(IEnumerable<int> xs, int floor)
        {
            foreach (int x in xs)
            {
                if (x > floor)
                {
                    return x;
                }
            }
            return null;
        }

        public static int BoundOf(int[] xs)
        {
            int best = int.MinValue;
            foreach (int x in xs)
            {
                best = x > best ? x : best;
            }
            return best == int.MinValue ? 0 : best;
        }
    }
}
