#include "ladders/orbits.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "ladders/errors.hpp"

namespace ladders {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error("a composition needs at least one part");
  for (int p : parts_) {
    if (p <= 0) throw Error("composition parts must be positive");
    total_ += p;
  }
}

BlockInvolution::BlockInvolution(std::vector<int> images)
    : images_(std::move(images)) {
  const int k = static_cast<int>(images_.size());
  for (int i = 1; i <= k; ++i) {
    const int j = images_[i - 1];
    if (j < 1 || j > k || images_[j - 1] != i)
      throw InvalidInvolution("the map does not square to the identity");
  }
}

bool BlockInvolution::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image(i) != i) return false;
  return true;
}

std::vector<std::pair<int, int>> BlockInvolution::two_cycles() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= size(); ++i)
    if (i < image(i)) out.emplace_back(i, image(i));
  return out;
}

std::vector<BlockInvolution> s2_of(const Composition& alpha) {
  const int k = alpha.size();
  std::vector<BlockInvolution> out;
  std::vector<int> img(k, 0);
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < k && img[i] != 0) ++i;
    if (i == k) {
      out.emplace_back(img);
      return;
    }
    img[i] = i + 1;  // fixed point first, so the identity comes out first
    rec();
    img[i] = 0;
    for (int j = i + 1; j < k; ++j) {
      if (img[j] != 0 || alpha.part(j + 1) != alpha.part(i + 1)) continue;
      img[i] = j + 1;
      img[j] = i + 1;
      rec();
      img[i] = 0;
      img[j] = 0;
    }
  };
  rec();
  return out;
}

namespace {

void check_compatible(const Composition& alpha, const BlockInvolution& tau) {
  if (tau.size() != alpha.size())
    throw InvalidInvolution("involution acts on " + std::to_string(tau.size()) +
                            " blocks, composition has " +
                            std::to_string(alpha.size()));
  for (int i = 1; i <= alpha.size(); ++i)
    if (alpha.part(tau.image(i)) != alpha.part(i))
      throw InvalidInvolution("involution swaps blocks of different sizes");
}

}  // namespace

OrbitRep::OrbitRep(Composition alpha, BlockInvolution tau)
    : alpha_(std::move(alpha)), tau_(std::move(tau)) {
  check_compatible(alpha_, tau_);
}

std::vector<OrbitRep::Marker> OrbitRep::markers() const {
  std::vector<Marker> out;
  out.reserve(alpha_.size());
  for (int col = 1; col <= alpha_.size(); ++col)
    out.push_back({tau_.image(col), col, alpha_.part(col)});
  return out;
}

OrbitRep admissible_rep(const Composition& alpha, const BlockInvolution& tau) {
  return OrbitRep(alpha, tau);
}

std::vector<int> character_exponents(const Composition& alpha,
                                     const BlockInvolution& tau) {
  check_compatible(alpha, tau);
  std::vector<int> out(alpha.size(), 0);
  for (int i = 1; i <= alpha.size(); ++i)
    if (i < tau.image(i)) out[i - 1] = 1;
  return out;
}

int maximal_parabolic_exponent(int n, int k, int r) {
  if (!(0 <= r && r <= k && k <= n - k))
    throw InvalidRange("need 0 <= r <= k <= n - k, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k) + " r=" + std::to_string(r));
  return -(n - 2 * r + 1);
}

std::string format_cycles(const BlockInvolution& tau) {
  std::string out;
  for (auto [i, j] : tau.two_cycles())
    out += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
  return out.empty() ? "e" : out;
}

BlockInvolution parse_cycles(const std::string& text, int k) {
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) img[i] = i + 1;

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (text.compare(pos, 1, "e") == 0 || text.compare(pos, 2, "id") == 0) {
    pos += text[pos] == 'e' ? 1 : 2;
    skip_ws();
    if (pos != text.size())
      throw Error("trailing input after identity involution");
    return BlockInvolution(img);
  }
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw Error("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos) throw Error("expected block index in cycle notation");
      cycle.push_back(std::stoi(text.substr(start, pos - start)));
    }
    if (cycle.size() != 2)
      throw Error("an involution is a product of transpositions");
    for (int v : cycle)
      if (v < 1 || v > k) throw Error("block index out of range");
    img[cycle[0] - 1] = cycle[1];
    img[cycle[1] - 1] = cycle[0];
  }
  return BlockInvolution(img);
}

}  // namespace ladders
