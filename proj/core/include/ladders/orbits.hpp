#pragma once

#include <string>
#include <vector>

namespace ladders {

/// A composition (n_1, ..., n_k) of n; all parts positive.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int size() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int total() const { return total_; }
  [[nodiscard]] int part(int i) const { return parts_[i - 1]; }  // 1-based

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// An involution of {1, ..., k} acting on the blocks of a composition.
class BlockInvolution {
 public:
  /// images[i-1] is the image of i (1-based values).  Must square to the
  /// identity.
  explicit BlockInvolution(std::vector<int> images);

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int image(int i) const { return images_[i - 1]; }
  [[nodiscard]] bool is_identity() const;

  /// Pairs (i, tau(i)) with i < tau(i), ascending.
  [[nodiscard]] std::vector<std::pair<int, int>> two_cycles() const;

  friend bool operator==(const BlockInvolution&,
                         const BlockInvolution&) = default;

 private:
  std::vector<int> images_;
};

/// All involutions tau of S_k with n_{tau(i)} = n_i, in a deterministic
/// order (identity first).
std::vector<BlockInvolution> s2_of(const Composition& alpha);

/// The block-pattern representative of an admissible orbit: one J_{n_i}
/// marker in block position (tau(i), i) per column i.
class OrbitRep {
 public:
  struct Marker {
    int row;
    int col;
    int size;  // the J_{n_col} block dimension

    friend bool operator==(const Marker&, const Marker&) = default;
  };

  OrbitRep(Composition alpha, BlockInvolution tau);

  [[nodiscard]] const Composition& composition() const { return alpha_; }
  [[nodiscard]] const BlockInvolution& tau() const { return tau_; }

  /// Markers ordered by column.
  [[nodiscard]] std::vector<Marker> markers() const;

 private:
  Composition alpha_;
  BlockInvolution tau_;
};

/// Throws InvalidInvolution unless tau is size-compatible with alpha.
OrbitRep admissible_rep(const Composition& alpha, const BlockInvolution& tau);

/// The exponent of |Nrd(g_i)| in the relative modulus character on the
/// stabilizer Levi: 1 when i < tau(i), 0 otherwise (the swapped partner's
/// coordinate is determined and carries no independent exponent).
std::vector<int> character_exponents(const Composition& alpha,
                                     const BlockInvolution& tau);

/// The exponent -(n - 2r + 1) carried by the G_r factor of the stabilizer of
/// a rank-r isotropic flag inside the (k, n-k) parabolic.  Requires
/// 0 <= r <= k <= n - k.
int maximal_parabolic_exponent(int n, int k, int r);

/// Cycle notation, e.g. "(1 3)(2 4)"; the identity prints as "e".
std::string format_cycles(const BlockInvolution& tau);

/// Parses cycle notation ("(1 3)(2 4)", "e" or "id") for an involution on
/// {1, ..., k}.
BlockInvolution parse_cycles(const std::string& text, int k);

}  // namespace ladders
