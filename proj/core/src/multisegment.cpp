#include "ladders/multisegment.hpp"

#include <algorithm>

#include "ladders/errors.hpp"

namespace ladders {

namespace {

void check_same_line(const Line& line, const std::vector<Segment>& segments) {
  for (const Segment& s : segments)
    if (s.line() != line)
      throw MixedLines("segment on line '" + s.line().label +
                       "' in a multisegment on line '" + line.label + "'");
}

}  // namespace

Multisegment::Multisegment(Line line) : line_(std::move(line)) {}

Multisegment::Multisegment(Line line, std::vector<Segment> segments)
    : line_(std::move(line)), segments_(std::move(segments)) {
  check_same_line(line_, segments_);
  std::sort(segments_.begin(), segments_.end());
}

int Multisegment::rank() const {
  int total = 0;
  for (const Segment& s : segments_) total += s.length();
  return line_.r * total;
}

Multisegment Multisegment::shifted(Exponent k) const {
  std::vector<Segment> out;
  out.reserve(segments_.size());
  for (const Segment& s : segments_) out.push_back(s.shifted(k));
  return Multisegment(line_, std::move(out));
}

bool Multisegment::on_integral_grid() const {
  for (const Segment& s : segments_)
    if (!integral_difference(s.a(), segments_.front().a())) return false;
  return true;
}

std::strong_ordering operator<=>(const Multisegment& x, const Multisegment& y) {
  if (auto c = x.segments_ <=> y.segments_; c != 0) return c;
  return x.line_.label <=> y.line_.label;
}

OrderedMultisegment::OrderedMultisegment(Line line,
                                         std::vector<Segment> segments)
    : line_(std::move(line)), segments_(std::move(segments)) {
  check_same_line(line_, segments_);
}

bool OrderedMultisegment::is_standard() const {
  for (std::size_t i = 0; i < segments_.size(); ++i)
    for (std::size_t j = i + 1; j < segments_.size(); ++j)
      if (precedes(segments_[i], segments_[j])) return false;
  return true;
}

bool OrderedMultisegment::is_ladder_order() const {
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    if (!(segments_[i].a() > segments_[i + 1].a())) return false;
    if (!(segments_[i].b() > segments_[i + 1].b())) return false;
  }
  return true;
}

Multisegment OrderedMultisegment::multiset() const {
  return Multisegment(line_, segments_);
}

namespace {

// Lexicographic comparison of sequences by the per-segment key
// (-end, -beginning); ties fall back to the canonical segment order so the
// result is total.
bool sequence_key_less(const OrderedMultisegment& x,
                       const OrderedMultisegment& y) {
  const auto& xs = x.segments();
  const auto& ys = y.segments();
  for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) {
    auto kx = std::pair(-xs[i].b().twice(), -xs[i].a().twice());
    auto ky = std::pair(-ys[i].b().twice(), -ys[i].a().twice());
    if (kx != ky) return kx < ky;
  }
  return xs.size() < ys.size();
}

}  // namespace

std::vector<OrderedMultisegment> standard_orders(const Multisegment& m) {
  std::vector<OrderedMultisegment> out;
  std::vector<Segment> segs = m.segments();
  if (segs.empty()) {
    out.emplace_back(m.line(), segs);
    return out;
  }
  std::sort(segs.begin(), segs.end());
  do {
    OrderedMultisegment candidate(m.line(), segs);
    if (candidate.is_standard()) out.push_back(std::move(candidate));
  } while (std::next_permutation(segs.begin(), segs.end()));
  std::sort(out.begin(), out.end(), sequence_key_less);
  return out;
}

std::optional<OrderedMultisegment> ladder_order(const Multisegment& m) {
  std::vector<Segment> segs = m.segments();
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
    return std::pair(x.a(), x.b()) > std::pair(y.a(), y.b());
  });
  OrderedMultisegment order(m.line(), std::move(segs));
  if (!order.is_ladder_order()) return std::nullopt;
  return order;
}

std::optional<Multisegment> speh_halve(const Multisegment& m) {
  std::vector<Segment> work = m.segments();  // ascending (a, b)
  std::vector<Segment> half;
  while (!work.empty()) {
    Segment d = work.front();
    work.erase(work.begin());
    auto it = std::find(work.begin(), work.end(), d.nu());
    if (it == work.end()) return std::nullopt;
    work.erase(it);
    half.push_back(std::move(d));
  }
  return Multisegment(m.line(), std::move(half));
}

bool adjacent_nu_paired(const OrderedMultisegment& order) {
  const auto& segs = order.segments();
  if (segs.size() % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < segs.size(); i += 2)
    if (segs[i] != segs[i + 1].nu()) return false;
  return true;
}

std::vector<std::optional<Multisegment>> kernel_components(
    const OrderedMultisegment& order) {
  if (!order.is_ladder_order())
    throw NotALadder("kernel components require a ladder order");
  const auto& segs = order.segments();
  std::vector<std::optional<Multisegment>> out;
  if (segs.size() < 2) return out;
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    const Segment& top = segs[i];
    const Segment& next = segs[i + 1];
    if (top.a() > next.b() + 1) {
      out.emplace_back(std::nullopt);  // the component vanishes
      continue;
    }
    std::vector<Segment> pieces;
    for (std::size_t j = 0; j < segs.size(); ++j)
      if (j != i && j != i + 1) pieces.push_back(segs[j]);
    pieces.emplace_back(order.line(), next.a(), top.b());
    if (top.a() <= next.b())  // otherwise [a_i, b_{i+1}] is empty and dropped
      pieces.emplace_back(order.line(), top.a(), next.b());
    out.emplace_back(Multisegment(order.line(), std::move(pieces)));
  }
  return out;
}

std::vector<Segment> jacquet_decomposition(const Segment& d,
                                           const std::vector<int>& parts) {
  const int r = d.line().r;
  long total = 0;
  for (int p : parts) {
    if (p <= 0) throw RankMismatch("block sizes must be positive");
    if (p % r != 0)
      throw Indivisible("block size " + std::to_string(p) +
                        " is not a multiple of r = " + std::to_string(r) +
                        "; the restriction vanishes");
    total += p;
  }
  if (total != static_cast<long>(r) * d.length())
    throw RankMismatch("block sizes sum to " + std::to_string(total) +
                       ", expected " + std::to_string(r * d.length()));
  std::vector<Segment> out;
  Exponent end = d.b();
  for (int p : parts) {
    const int len = p / r;
    Exponent begin = end - (len - 1);
    out.emplace_back(d.line(), begin, end);
    end = begin - 1;
  }
  return out;
}

}  // namespace ladders
