#ifndef QUANDLEKIT_PERMUTATION_HPP
#define QUANDLEKIT_PERMUTATION_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace quandlekit {

/// Permutation of {0..n-1}, stored as the image sequence: images[i] is the
/// image of i.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    validate();
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      img[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

  const std::vector<int> &images() const { return images_; }

  /// Function composition: (p * q)(i) = p(q(i)), q applied first.
  friend Permutation operator*(const Permutation &p, const Permutation &q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> img(q.images_.size());
    for (std::size_t i = 0; i < img.size(); ++i)
      img[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<int> img(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      img[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(img));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i))
        return false;
    return true;
  }

  friend bool operator==(const Permutation &a, const Permutation &b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation &a, const Permutation &b) {
    return !(a == b);
  }
  /// Lexicographic order on image sequences; used for canonical generator
  /// ordering.
  friend bool operator<(const Permutation &a, const Permutation &b) {
    return a.images_ < b.images_;
  }

  /// Cycle notation, e.g. "(0 1)(2 4 3)"; "e" for the identity.
  std::string cycle_string() const;

private:
  void validate() const {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("permutation images are not a bijection");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  std::vector<int> images_;
};

} // namespace quandlekit

#endif
