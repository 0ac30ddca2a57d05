#include "adaregret/intervals.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace adaregret {

namespace {

long two_adic_valuation(long t) {
  return std::countr_zero(static_cast<unsigned long>(t));
}

}  // namespace

Interval cgc_interval_at(long t) {
  if (t < 1) throw std::invalid_argument("cgc_interval_at: t must be >= 1");
  const long len = 1L << two_adic_valuation(t);
  return {t, t + len - 1};
}

std::vector<Interval> gc_intervals_at(long t, long horizon) {
  if (t < 1 || t > horizon) throw std::invalid_argument("gc_intervals_at: need 1 <= t <= horizon");
  std::vector<Interval> out;
  for (long k = 0; k <= two_adic_valuation(t); ++k) {
    const long len = 1L << k;
    out.push_back({t, std::min(t + len - 1, horizon)});
  }
  return out;
}

CoverSequence cgc_cover(long r, long s) {
  if (r < 1 || r > s) throw std::invalid_argument("cgc_cover: need 1 <= r <= s");
  CoverSequence cover;
  long start = r;
  for (;;) {
    Interval iv = cgc_interval_at(start);
    cover.intervals.push_back(iv);
    if (iv.end >= s) break;
    start = iv.end + 1;
  }
  return cover;
}

CoverSequence marker_cover(long p, long q) {
  if (p < 1 || p > q) throw std::invalid_argument("marker_cover: need 1 <= p <= q");
  return cgc_cover(p, q);
}

long cgc_end_index(long m) {
  if (m < 1) throw std::invalid_argument("cgc_end_index: m must be >= 1");
  return m + (1L << two_adic_valuation(m));
}

long cover_length_limit(long r, long s) {
  if (r < 1 || r > s) throw std::invalid_argument("cover_length_limit: need 1 <= r <= s");
  return static_cast<long>(std::ceil(std::log2(static_cast<double>(s - r + 2))));
}

namespace {

constexpr int kColWidth = 4;

void draw(std::string& row, long start, long end, long horizon) {
  auto col = [](long t) { return static_cast<std::size_t>((t - 1) * kColWidth); };
  row[col(start)] = '[';
  if (end <= horizon) {
    row[col(end) + 2] = ']';
  }
  for (std::size_t c = col(start) + 1; c < col(std::min(end, horizon)) + 2; ++c) {
    if (row[c] == ' ') row[c] = '-';
  }
}

}  // namespace

std::string render_intervals(const std::string& kind, long horizon) {
  if (kind != "gc" && kind != "cgc") throw std::invalid_argument("render_intervals: kind must be gc or cgc");
  if (horizon < 1 || horizon > (1L << 16)) {
    throw std::invalid_argument("render_intervals: horizon out of range");
  }
  const bool compact = (kind == "cgc");
  std::ostringstream os;
  os << "t    ";
  for (long t = 1; t <= horizon; ++t) {
    std::string n = std::to_string(t);
    os << n << std::string(kColWidth - n.size(), ' ');
  }
  os << '\n';
  long max_k = 0;
  while ((1L << (max_k + 1)) <= horizon) ++max_k;
  for (long k = 0; k <= max_k; ++k) {
    const long len = 1L << k;
    std::string row(static_cast<std::size_t>(horizon) * kColWidth, ' ');
    bool any = false;
    for (long i = 1; i * len <= horizon; ++i) {
      if (compact && i % 2 == 0) continue;
      draw(row, i * len, (i + 1) * len - 1, horizon);
      any = true;
    }
    if (!any) continue;
    std::string label = (compact ? "C" : "I") + std::to_string(k);
    os << label << std::string(5 - label.size(), ' ') << row << '\n';
  }
  return os.str();
}

std::string render_cover(long r, long s) {
  CoverSequence cover = cgc_cover(r, s);
  std::ostringstream os;
  for (std::size_t i = 0; i < cover.intervals.size(); ++i) {
    if (i) os << ", ";
    os << cover.intervals[i].start << ".." << cover.intervals[i].end;
  }
  os << "  v=" << cover.v() << " <= " << cover_length_limit(r, s);
  return os.str();
}

}  // namespace adaregret
