#pragma once

#include <string>
#include <vector>

namespace adaregret {

/// Closed integer range, in rounds or in marker indices depending on context.
struct Interval {
  long start = 1;
  long end = 1;
  long length() const { return end - start + 1; }
  bool operator==(const Interval&) const = default;
};

/// The unique dyadic interval starting at t among those keeping only the
/// longest interval per starting round: with t = i * 2^k and i odd,
/// returns [t, t + 2^k - 1].
Interval cgc_interval_at(long t);

/// All dyadic intervals [i*2^k, (i+1)*2^k - 1] starting at t (one per k
/// dividing t), truncated at the horizon. Used for diagram dumps only.
std::vector<Interval> gc_intervals_at(long t, long horizon);

/// Consecutive chain covering a query range; the last interval may overshoot
/// the right endpoint.
struct CoverSequence {
  std::vector<Interval> intervals;
  long v() const { return static_cast<long>(intervals.size()); }
};

/// Greedy chain of unique-start dyadic intervals covering [r, s];
/// its length is at most ceil(log2(s - r + 2)).
CoverSequence cgc_cover(long r, long s);

/// Same chain in marker-index space.
CoverSequence marker_cover(long p, long q);

/// With m = i * 2^k (i odd), the expert created at marker m expires when the
/// marker counter is about to reach (i+1) * 2^k.
long cgc_end_index(long m);

/// Upper bound ceil(log2(n)) for the cover length of a range with s-r+2 = n.
long cover_length_limit(long r, long s);

/// Bracket diagram of the interval rows up to a horizon; kind is "gc" or "cgc".
std::string render_intervals(const std::string& kind, long horizon);

/// One-line rendering of the greedy cover chain and its length bound.
std::string render_cover(long r, long s);

}  // namespace adaregret
