#pragma once

#include <vector>

#include "ladders/multisegment.hpp"

namespace ladders {

/// A position (i, j) in a decomposed multisegment: piece j of segment i,
/// both 1-based.  Lexicographic order is the linear order on the index set;
/// (i1, j1) << (i2, j2) means i1 < i2.
struct PieceIndex {
  int i = 0;
  int j = 0;

  friend bool operator==(const PieceIndex&, const PieceIndex&) = default;
  friend auto operator<=>(const PieceIndex&, const PieceIndex&) = default;
};

/// The shape (k_1, ..., k_k) of a decomposition, with flat <-> (i, j)
/// conversion in lexicographic order.
class IndexShape {
 public:
  explicit IndexShape(std::vector<int> sizes);

  [[nodiscard]] int blocks() const { return static_cast<int>(sizes_.size()); }
  [[nodiscard]] int pieces(int i) const { return sizes_[i - 1]; }
  [[nodiscard]] int total() const { return total_; }

  [[nodiscard]] int flat(PieceIndex p) const;
  [[nodiscard]] PieceIndex unflat(int flat) const;

  friend bool operator==(const IndexShape&, const IndexShape&) = default;

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
};

/// An ordered multisegment together with a decomposition of each segment:
/// piece (i, 1) carries the end of Delta_i, piece (i, k_i) carries its
/// beginning, and consecutive pieces abut (e(Delta_{i,j+1}) = b(Delta_{i,j}) - 1).
class DecomposedMultisegment {
 public:
  DecomposedMultisegment(OrderedMultisegment order,
                         std::vector<std::vector<Segment>> pieces);

  [[nodiscard]] const OrderedMultisegment& order() const { return order_; }
  [[nodiscard]] const std::vector<std::vector<Segment>>& pieces() const {
    return pieces_;
  }
  [[nodiscard]] IndexShape shape() const;
  [[nodiscard]] const Segment& piece(PieceIndex p) const {
    return pieces_[p.i - 1][p.j - 1];
  }

  friend bool operator==(const DecomposedMultisegment&,
                         const DecomposedMultisegment&) = default;

 private:
  OrderedMultisegment order_;
  std::vector<std::vector<Segment>> pieces_;
};

/// A distinction certificate: a decomposition plus a fixed-point-free
/// involution tau on its index set such that
///   (1) tau(i, j+1) << tau(i, j) within every segment,
///   (2) tau moves every index, and
///   (3) the piece at (i, j) is the nu-shift of the piece at tau(i, j)
///       whenever (i, j) precedes tau(i, j).
/// Construction re-validates all three conditions.
class GoodDecomposition {
 public:
  GoodDecomposition(DecomposedMultisegment decomposition,
                    std::vector<int> tau_flat);

  [[nodiscard]] const DecomposedMultisegment& decomposition() const {
    return decomposition_;
  }
  [[nodiscard]] PieceIndex tau(PieceIndex p) const;

  /// Pairs (u, tau(u)) with u < tau(u), in lexicographic order of u.
  [[nodiscard]] std::vector<std::pair<PieceIndex, PieceIndex>> pairs() const;

  friend bool operator==(const GoodDecomposition&,
                         const GoodDecomposition&) = default;

 private:
  DecomposedMultisegment decomposition_;
  std::vector<int> tau_;
};

/// All certificates for one standard order, enumerated deterministically:
/// decompositions run through the compositions of each segment length in
/// lexicographic order, and pairings are built by backtracking from the
/// lexicographically minimal unpaired index, trying nu-shift partners in
/// lexicographic order.  Throws NotStandardOrder for non-standard input and
/// DistinguishedLineUnsupported when the line's supercuspidal is itself
/// flagged distinguished (that case stays open).
std::vector<GoodDecomposition> good_decompositions(
    const OrderedMultisegment& order);

/// True when every standard order of m admits a good decomposition.
bool is_symplectic(const Multisegment& m);

struct SpehImplicationReport {
  long long total = 0;
  long long symplectic = 0;
  long long speh_type = 0;
  long long symplectic_and_speh = 0;
  std::vector<Multisegment> counterexamples;  // symplectic but not Speh type

  [[nodiscard]] bool clean() const { return counterexamples.empty(); }
};

/// Exhaustively enumerates the multisegments on `line` with at most
/// `max_segments` segments supported in the integer window [lo, hi] and
/// checks that every symplectic one is of Speh type.
SpehImplicationReport verify_speh_implication(const Line& line,
                                              int max_segments, int lo,
                                              int hi);

}  // namespace ladders
