#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symcensus {

// Permutation of {0, ..., n-1} stored as an image table.
// Composition is left-to-right: (p.then(q))(x) == q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  // Identity on n points.
  explicit Permutation(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
  }

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("Permutation: image table is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) { return Permutation(n); }

  int degree() const { return static_cast<int>(img_.size()); }

  int operator()(int x) const { return img_[x]; }

  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // Smallest point moved, or -1 for the identity.
  int smallest_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return -1;
  }

  // this followed by q.
  Permutation then(const Permutation& q) const {
    if (q.degree() != degree())
      throw std::invalid_argument("Permutation::then: degree mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[i] = q.img_[img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }

 private:
  std::vector<int> img_;
};

}  // namespace symcensus
