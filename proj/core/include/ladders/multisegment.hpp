#pragma once

#include <optional>
#include <vector>

#include "ladders/segment.hpp"

namespace ladders {

/// A finite multiset of segments on one line, kept in canonical (a, b) order.
class Multisegment {
 public:
  explicit Multisegment(Line line);
  Multisegment(Line line, std::vector<Segment> segments);

  [[nodiscard]] const Line& line() const { return line_; }
  [[nodiscard]] const std::vector<Segment>& segments() const {
    return segments_;
  }
  [[nodiscard]] bool empty() const { return segments_.empty(); }
  [[nodiscard]] int size() const { return static_cast<int>(segments_.size()); }

  /// n = r * sum of lengths: the rank of the group the multisegment
  /// parameterizes a representation of.
  [[nodiscard]] int rank() const;

  [[nodiscard]] Multisegment shifted(Exponent k) const;

  /// True when all pairwise exponent differences are integers.
  [[nodiscard]] bool on_integral_grid() const;

  friend bool operator==(const Multisegment& x, const Multisegment& y) {
    return x.line_ == y.line_ && x.segments_ == y.segments_;
  }
  friend std::strong_ordering operator<=>(const Multisegment& x,
                                          const Multisegment& y);

 private:
  Line line_;
  std::vector<Segment> segments_;
};

/// A sequence of segments on one line; the order carries meaning.
class OrderedMultisegment {
 public:
  OrderedMultisegment(Line line, std::vector<Segment> segments);

  [[nodiscard]] const Line& line() const { return line_; }
  [[nodiscard]] const std::vector<Segment>& segments() const {
    return segments_;
  }
  [[nodiscard]] bool empty() const { return segments_.empty(); }
  [[nodiscard]] int size() const { return static_cast<int>(segments_.size()); }

  /// Standard form: Delta_i does not precede Delta_j for any i < j.
  [[nodiscard]] bool is_standard() const;

  /// Strictly decreasing beginnings and strictly decreasing ends.
  [[nodiscard]] bool is_ladder_order() const;

  [[nodiscard]] Multisegment multiset() const;

  friend bool operator==(const OrderedMultisegment& x,
                         const OrderedMultisegment& y) {
    return x.line_ == y.line_ && x.segments_ == y.segments_;
  }

 private:
  Line line_;
  std::vector<Segment> segments_;
};

/// All orderings of m in standard form, deduplicated as sequences (copies of
/// equal segments do not multiply the output).  The result is sorted
/// lexicographically by the per-segment key (-end, -beginning), so the
/// strictly-decreasing-ends order comes first when it is standard.  Never
/// empty; the empty multisegment yields the single empty order.
std::vector<OrderedMultisegment> standard_orders(const Multisegment& m);

/// The unique order with strictly decreasing beginnings and ends, when m is a
/// ladder; absent otherwise.
std::optional<OrderedMultisegment> ladder_order(const Multisegment& m);

/// The half m' with m = m' + nu m', when m is of Speh type; absent otherwise.
/// Greedy: repeatedly remove the (a, b)-minimal segment and one copy of its
/// nu-shift.  The global minimum can never lie in nu m', so the greedy choice
/// is forced and the algorithm is exact.
std::optional<Multisegment> speh_halve(const Multisegment& m);

/// True when the order pairs adjacent segments as Delta_{2i-1} = nu Delta_{2i}
/// (requires an even number of segments).
bool adjacent_nu_paired(const OrderedMultisegment& order);

/// For a ladder order (Delta_1, ..., Delta_t), the t-1 multisegments obtained
/// by replacing Delta_i, Delta_{i+1} with Delta_i* = [a_{i+1}, b_i] and
/// Delta_{i+1}* = [a_i, b_{i+1}].  An entry is nullopt when a_i > b_{i+1} + 1
/// (the component vanishes); when a_i = b_{i+1} + 1 the empty Delta_{i+1}* is
/// dropped.  Throws NotALadder unless the input is a ladder order.
std::vector<std::optional<Multisegment>> kernel_components(
    const OrderedMultisegment& order);

/// The segments [c_i, d_i] with d_1 = e(d), d_{i+1} = c_i - 1, and
/// r(d_i - c_i + 1) = parts_i.  Throws Indivisible when a part is not a
/// multiple of the line's r (the restriction vanishes), RankMismatch when the
/// parts do not sum to r * length.
std::vector<Segment> jacquet_decomposition(const Segment& d,
                                           const std::vector<int>& parts);

}  // namespace ladders
