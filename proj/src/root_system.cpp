#include "flagcoh/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flagcoh {

namespace {

void check_rank(int rank) {
  if (rank < 1)
    throw std::invalid_argument("rank must be a positive integer");
  if (rank > kMaxRank)
    throw std::length_error("rank " + std::to_string(rank) + " exceeds the cap of " +
                            std::to_string(kMaxRank));
}

void check_same_rank(int a, int b) {
  if (a != b)
    throw std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

}  // namespace

Weight::Weight(std::vector<Int> coords) : coords_(std::move(coords)) {
  check_rank(static_cast<int>(coords_.size()));
}

Weight Weight::zero(int rank) {
  check_rank(rank);
  return Weight(std::vector<Int>(rank, 0));
}

Weight Weight::rho(int rank) {
  check_rank(rank);
  return Weight(std::vector<Int>(rank, 1));
}

Int Weight::coord(int k) const {
  if (k < 1 || k > rank())
    throw std::invalid_argument("coordinate index " + std::to_string(k) + " out of range");
  return coords_[k - 1];
}

std::vector<Int> Weight::eps() const {
  // suffix sums: l_k = a_k + ... + a_r, l_{r+1} = 0
  std::vector<Int> l(coords_.size() + 1, 0);
  for (int k = rank() - 1; k >= 0; --k) l[k] = coords_[k] + l[k + 1];
  return l;
}

Weight Weight::from_eps(std::span<const Int> eps) {
  if (eps.size() < 2)
    throw std::invalid_argument("epsilon coordinates need at least two entries");
  std::vector<Int> coords(eps.size() - 1);
  for (std::size_t k = 0; k + 1 < eps.size(); ++k) coords[k] = eps[k] - eps[k + 1];
  return Weight(std::move(coords));
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int a) { return a >= 0; });
}

bool Weight::is_strictly_dominant() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int a) { return a > 0; });
}

Weight& Weight::operator+=(const Weight& rhs) {
  check_same_rank(rank(), rhs.rank());
  for (int k = 0; k < rank(); ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  check_same_rank(rank(), rhs.rank());
  for (int k = 0; k < rank(); ++k) coords_[k] -= rhs.coords_[k];
  return *this;
}

Weight& Weight::operator*=(Int scale) {
  for (Int& a : coords_) a *= scale;
  return *this;
}

std::string Weight::str() const {
  std::string out = "(";
  for (int k = 0; k < rank(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(coords_[k]);
  }
  out += ')';
  return out;
}

Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
Weight operator-(Weight w) { return w *= -1; }
Weight operator*(Int scale, Weight w) { return w *= scale; }

RootSystem::RootSystem(int rank) : rank_(rank) {
  check_rank(rank);
  positive_.reserve(static_cast<std::size_t>(rank) * (rank + 1) / 2);
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank + 1; ++j) positive_.push_back(Root{i, j});
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_)
    throw std::invalid_argument("simple root index " + std::to_string(i) + " out of range");
  return Root{i, i + 1};
}

Int pairing(const Weight& lambda, Root root) {
  if (root.i < 1 || root.j <= root.i || root.j > lambda.rank() + 1)
    throw std::invalid_argument("malformed positive root (" + std::to_string(root.i) + "," +
                                std::to_string(root.j) + ") at rank " +
                                std::to_string(lambda.rank()));
  Int sum = 0;
  for (int k = root.i; k < root.j; ++k) sum += lambda.coord(k);
  return sum;
}

WeylElement::WeylElement(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  check_rank(n - 1);
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("images do not form a permutation of 1.." + std::to_string(n));
    seen[v - 1] = true;
  }
}

WeylElement WeylElement::identity(int rank) {
  check_rank(rank);
  std::vector<int> img(rank + 1);
  std::iota(img.begin(), img.end(), 1);
  return WeylElement(std::move(img));
}

WeylElement WeylElement::simple_reflection(int rank, int i) {
  if (i < 1 || i > rank)
    throw std::invalid_argument("simple reflection index " + std::to_string(i) + " out of range");
  WeylElement w = identity(rank);
  std::swap(w.images_[i - 1], w.images_[i]);
  return w;
}

WeylElement WeylElement::longest(int rank) {
  check_rank(rank);
  std::vector<int> img(rank + 1);
  for (int k = 0; k <= rank; ++k) img[k] = rank + 1 - k;
  return WeylElement(std::move(img));
}

int WeylElement::operator()(int k) const {
  if (k < 1 || k > rank() + 1)
    throw std::invalid_argument("permutation argument " + std::to_string(k) + " out of range");
  return images_[k - 1];
}

int WeylElement::length() const noexcept {
  int inversions = 0;
  const int n = static_cast<int>(images_.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (images_[a] > images_[b]) ++inversions;
  return inversions;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) img[images_[k] - 1] = static_cast<int>(k) + 1;
  return WeylElement(std::move(img));
}

Weight WeylElement::apply(const Weight& lambda) const {
  check_same_rank(rank(), lambda.rank());
  const std::vector<Int> l = lambda.eps();
  std::vector<Int> out(l.size());
  for (std::size_t k = 0; k < l.size(); ++k) out[images_[k] - 1] = l[k];
  return Weight::from_eps(out);
}

Weight WeylElement::dot(const Weight& lambda) const {
  const Weight r = Weight::rho(lambda.rank());
  return apply(lambda + r) - r;
}

std::string WeylElement::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(images_[k]);
  }
  out += ']';
  return out;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  check_same_rank(u.rank(), v.rank());
  std::vector<int> img(u.images().size());
  for (int k = 1; k <= u.rank() + 1; ++k) img[k - 1] = u(v(k));
  return WeylElement(std::move(img));
}

std::optional<DominantConjugate> dominant_conjugate(const Weight& mu) {
  const std::vector<Int> l = mu.eps();
  const int n = static_cast<int>(l.size());

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return l[a - 1] > l[b - 1]; });

  // a tie means mu is orthogonal to some root, i.e. lies on a chamber wall
  for (int k = 0; k + 1 < n; ++k)
    if (l[order[k] - 1] == l[order[k + 1] - 1]) return std::nullopt;

  std::vector<int> images(n);
  for (int k = 0; k < n; ++k) images[order[k] - 1] = k + 1;
  WeylElement w{std::move(images)};
  Weight dominant = w.apply(mu);
  return DominantConjugate{std::move(w), std::move(dominant)};
}

std::vector<WeylElement> enumerate_weyl_group(int rank) {
  check_rank(rank);
  if (rank > kMaxEnumerationRank)
    throw std::length_error("Weyl-group enumeration is limited to rank " +
                            std::to_string(kMaxEnumerationRank));
  std::vector<int> img(rank + 1);
  std::iota(img.begin(), img.end(), 1);
  std::vector<WeylElement> group;
  do {
    group.push_back(WeylElement(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return group;
}

}  // namespace flagcoh
