#include "ladders/zelevinsky.hpp"

#include <algorithm>
#include <vector>

#include "ladders/errors.hpp"

namespace ladders {

/*
  One pass of the chain construction:

    (i)   among the remaining segments, take the maximal end e1; among the
          segments ending at e1, take the one with maximal beginning;
    (ii)  having chosen a segment ending at e, look for an unchosen segment
          ending at e - 1 that precedes it (equivalently, with a strictly
          smaller beginning); among those take the one with maximal beginning
          and continue the chain;
    (iii) if the chain collected ends e1, e1-1, ..., e1-k+1, emit [e1-k+1, e1];
    (iv)  shorten every chosen segment by dropping its end point, discard the
          ones that become empty, and repeat until nothing is left.

  Tie-breaks are fixed to "maximal beginning" for determinism; the choice does
  not affect the resulting multiset.
*/
Multisegment mw_dual(const Multisegment& m) {
  if (m.empty()) return m;
  const int base = m.segments().front().a().twice();
  struct Item {
    int a;
    int b;
    bool chosen;
  };
  std::vector<Item> work;
  work.reserve(m.segments().size());
  for (const Segment& s : m.segments()) {
    if ((s.a().twice() - base) % 2 != 0)
      throw MixedGrid("multisegment mixes two integral exponent grids");
    work.push_back({(s.a().twice() - base) / 2, (s.b().twice() - base) / 2, false});
  }

  std::vector<Segment> dual;
  while (!work.empty()) {
    for (Item& it : work) it.chosen = false;
    int cur = 0;
    for (std::size_t i = 1; i < work.size(); ++i)
      if (std::pair(work[i].b, work[i].a) > std::pair(work[cur].b, work[cur].a))
        cur = static_cast<int>(i);
    work[cur].chosen = true;
    const int e1 = work[cur].b;
    int chain_length = 1;
    for (;;) {
      int next = -1;
      for (std::size_t i = 0; i < work.size(); ++i) {
        const Item& it = work[i];
        if (it.chosen || it.b != work[cur].b - 1 || it.a >= work[cur].a)
          continue;
        if (next < 0 || it.a > work[next].a) next = static_cast<int>(i);
      }
      if (next < 0) break;
      work[next].chosen = true;
      cur = next;
      ++chain_length;
    }
    dual.emplace_back(m.line(),
                      Exponent::half_integer(base + 2 * (e1 - chain_length + 1)),
                      Exponent::half_integer(base + 2 * e1));
    std::vector<Item> rest;
    rest.reserve(work.size());
    for (Item& it : work) {
      if (it.chosen) --it.b;
      if (it.b >= it.a) rest.push_back(it);
    }
    work = std::move(rest);
  }
  return Multisegment(m.line(), std::move(dual));
}

}  // namespace ladders
