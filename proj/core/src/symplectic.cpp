#include "ladders/symplectic.hpp"

#include <algorithm>
#include <functional>

#include "ladders/errors.hpp"

namespace ladders {

IndexShape::IndexShape(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  offsets_.reserve(sizes_.size());
  for (int k : sizes_) {
    if (k <= 0) throw Error("index shape entries must be positive");
    offsets_.push_back(total_);
    total_ += k;
  }
}

int IndexShape::flat(PieceIndex p) const {
  return offsets_[p.i - 1] + (p.j - 1);
}

PieceIndex IndexShape::unflat(int flat) const {
  int i = 0;
  while (i + 1 < static_cast<int>(offsets_.size()) && offsets_[i + 1] <= flat)
    ++i;
  return PieceIndex{i + 1, flat - offsets_[i] + 1};
}

DecomposedMultisegment::DecomposedMultisegment(
    OrderedMultisegment order, std::vector<std::vector<Segment>> pieces)
    : order_(std::move(order)), pieces_(std::move(pieces)) {
  if (pieces_.size() != order_.segments().size())
    throw Error("decomposition must cover every segment of the order");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Segment& whole = order_.segments()[i];
    const auto& row = pieces_[i];
    if (row.empty()) throw Error("empty decomposition row");
    if (row.front().b() != whole.b() || row.back().a() != whole.a())
      throw Error("decomposition does not span its segment");
    for (std::size_t j = 0; j + 1 < row.size(); ++j)
      if (row[j + 1].b() != row[j].a() - 1)
        throw Error("decomposition pieces must abut");
  }
}

IndexShape DecomposedMultisegment::shape() const {
  std::vector<int> sizes;
  sizes.reserve(pieces_.size());
  for (const auto& row : pieces_) sizes.push_back(static_cast<int>(row.size()));
  return IndexShape(std::move(sizes));
}

GoodDecomposition::GoodDecomposition(DecomposedMultisegment decomposition,
                                     std::vector<int> tau_flat)
    : decomposition_(std::move(decomposition)), tau_(std::move(tau_flat)) {
  const IndexShape shape = decomposition_.shape();
  if (static_cast<int>(tau_.size()) != shape.total())
    throw Error("involution size does not match the index set");
  for (int u = 0; u < shape.total(); ++u) {
    if (tau_[u] < 0 || tau_[u] >= shape.total() || tau_[tau_[u]] != u)
      throw Error("tau is not an involution");
    if (tau_[u] == u) throw Error("tau must be fixed-point free");
    const PieceIndex p = shape.unflat(u);
    const PieceIndex q = shape.unflat(tau_[u]);
    if (p < q && decomposition_.piece(p) != decomposition_.piece(q).nu())
      throw Error("paired pieces must differ by a nu-shift");
  }
  for (int i = 1; i <= shape.blocks(); ++i)
    for (int j = 1; j + 1 <= shape.pieces(i); ++j) {
      const PieceIndex lo = shape.unflat(tau_[shape.flat({i, j + 1})]);
      const PieceIndex hi = shape.unflat(tau_[shape.flat({i, j})]);
      if (!(lo.i < hi.i))
        throw Error("tau images within a segment must descend in blocks");
    }
}

PieceIndex GoodDecomposition::tau(PieceIndex p) const {
  const IndexShape shape = decomposition_.shape();
  return shape.unflat(tau_[shape.flat(p)]);
}

std::vector<std::pair<PieceIndex, PieceIndex>> GoodDecomposition::pairs()
    const {
  const IndexShape shape = decomposition_.shape();
  std::vector<std::pair<PieceIndex, PieceIndex>> out;
  for (int u = 0; u < shape.total(); ++u)
    if (u < tau_[u]) out.emplace_back(shape.unflat(u), shape.unflat(tau_[u]));
  return out;
}

namespace {

// Compositions of n in lexicographic order: (1,1,...,1) first, (n) last.
std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      rec(rest - first);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

// Pieces of a segment for one composition; piece 1 carries the end.
std::vector<Segment> pieces_from(const Segment& seg,
                                 const std::vector<int>& comp) {
  std::vector<Segment> out;
  out.reserve(comp.size());
  Exponent end = seg.b();
  for (int len : comp) {
    Exponent begin = end - (len - 1);
    out.emplace_back(seg.line(), begin, end);
    end = begin - 1;
  }
  return out;
}

struct PairingSearch {
  const DecomposedMultisegment& decomposition;
  IndexShape shape;
  std::vector<Segment> flat_pieces;
  std::vector<int> row_of;
  std::vector<int> col_of;
  std::vector<int> tau;
  std::vector<GoodDecomposition>* out;

  explicit PairingSearch(const DecomposedMultisegment& d,
                         std::vector<GoodDecomposition>* sink)
      : decomposition(d), shape(d.shape()), out(sink) {
    flat_pieces.reserve(shape.total());
    for (int u = 0; u < shape.total(); ++u) {
      const PieceIndex p = shape.unflat(u);
      flat_pieces.push_back(d.piece(p));
      row_of.push_back(p.i);
      col_of.push_back(p.j);
    }
    tau.assign(shape.total(), -1);
  }

  // The block-descent constraint (1), checked for the two within-segment
  // neighbours of u once both images are known.
  bool descent_ok(int u) const {
    const int i = row_of[u];
    const int j = col_of[u];
    if (j > 1) {
      const int left = shape.flat({i, j - 1});
      if (tau[left] >= 0 && !(row_of[tau[u]] < row_of[tau[left]])) return false;
    }
    if (j < shape.pieces(i)) {
      const int right = shape.flat({i, j + 1});
      if (tau[right] >= 0 && !(row_of[tau[right]] < row_of[tau[u]]))
        return false;
    }
    return true;
  }

  void run() {
    int u = 0;
    while (u < shape.total() && tau[u] >= 0) ++u;
    if (u == shape.total()) {
      out->emplace_back(decomposition, tau);
      return;
    }
    for (int v = u + 1; v < shape.total(); ++v) {
      if (tau[v] >= 0) continue;
      // condition (3): the earlier piece is the nu-shift of the later one
      if (flat_pieces[u] != flat_pieces[v].nu()) continue;
      tau[u] = v;
      tau[v] = u;
      if (descent_ok(u) && descent_ok(v)) run();
      tau[u] = -1;
      tau[v] = -1;
    }
  }
};

}  // namespace

std::vector<GoodDecomposition> good_decompositions(
    const OrderedMultisegment& order) {
  if (!order.is_standard())
    throw NotStandardOrder("certificates are defined on standard orders");
  if (order.line().sc_distinguished)
    throw DistinguishedLineUnsupported(
        "line '" + order.line().label +
        "' declares a distinguished supercuspidal; certificates over such "
        "lines are not supported");

  std::vector<GoodDecomposition> out;
  const auto& segs = order.segments();

  std::vector<std::vector<std::vector<int>>> menus;
  menus.reserve(segs.size());
  for (const Segment& s : segs) menus.push_back(compositions_of(s.length()));

  std::vector<std::size_t> pick(segs.size(), 0);
  for (;;) {
    std::vector<std::vector<Segment>> pieces;
    pieces.reserve(segs.size());
    int total = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      pieces.push_back(pieces_from(segs[i], menus[i][pick[i]]));
      total += static_cast<int>(pieces.back().size());
    }
    if (total % 2 == 0) {
      DecomposedMultisegment decomposition(order, std::move(pieces));
      PairingSearch search(decomposition, &out);
      search.run();
    }
    // odometer over the menus, rightmost fastest
    std::size_t pos = segs.size();
    while (pos > 0) {
      --pos;
      if (++pick[pos] < menus[pos].size()) break;
      pick[pos] = 0;
      if (pos == 0) return out;
    }
    if (segs.empty()) return out;
  }
}

bool is_symplectic(const Multisegment& m) {
  for (const OrderedMultisegment& order : standard_orders(m))
    if (good_decompositions(order).empty()) return false;
  return true;
}

SpehImplicationReport verify_speh_implication(const Line& line,
                                              int max_segments, int lo,
                                              int hi) {
  std::vector<Segment> pool;
  for (int a = lo; a <= hi; ++a)
    for (int b = a; b <= hi; ++b)
      pool.emplace_back(line, Exponent::integer(a), Exponent::integer(b));

  SpehImplicationReport report;
  std::vector<Segment> current;
  std::function<void(std::size_t)> visit = [&](std::size_t from) {
    Multisegment m(line, current);
    ++report.total;
    const bool symplectic = is_symplectic(m);
    const bool speh = speh_halve(m).has_value();
    if (symplectic) ++report.symplectic;
    if (speh) ++report.speh_type;
    if (symplectic && speh) ++report.symplectic_and_speh;
    if (symplectic && !speh) report.counterexamples.push_back(m);
    if (static_cast<int>(current.size()) == max_segments) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      visit(i);  // multisets: repetition allowed
      current.pop_back();
    }
  };
  visit(0);
  return report;
}

}  // namespace ladders
