#ifndef ISQ_PARTIAL_BIJECTION_HPP_
#define ISQ_PARTIAL_BIJECTION_HPP_

#include <compare>
#include <string>
#include <vector>

namespace isq {

// A partial injective map on the points {1, ..., degree}.
//
// Stored as an image array: img[x - 1] is the image of the point x, with 0
// meaning "undefined at x". Nonzero entries are pairwise distinct.
//
// Products compose like ordinary functions, with maps acting on the left:
//
//     (f * g)(x) = f(g(x)),
//
// so in the product f * g the right-hand factor acts first. With this
// convention, for tau the transposition of {1,2} and eps the identity on
// {1}, the product tau * eps is the map 1 -> 2.
class PartialBijection {
 public:
  // The empty map (nowhere defined) of the given degree.
  explicit PartialBijection(int degree);
  // From an image array; validates range and injectivity.
  PartialBijection(int degree, std::vector<int> images);

  static PartialBijection identity(int degree);
  // The partial identity on a set of points (1-based).
  static PartialBijection partial_identity(int degree,
                                           const std::vector<int>& points);
  // The rank-one map x -> y.
  static PartialBijection point_map(int degree, int x, int y);

  int degree() const { return degree_; }
  // Image of x, or 0 if undefined there.
  int apply(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const { return images_; }

  int rank() const;
  bool is_empty() const { return rank() == 0; }
  bool is_idempotent() const;  // equivalently: a partial identity
  bool is_permutation() const { return rank() == degree_; }

  std::vector<int> domain_points() const;
  std::vector<int> image_points() const;

  PartialBijection inverse() const;

  // Function composition: (f * g)(x) = f(g(x)).
  friend PartialBijection operator*(const PartialBijection& f,
                                    const PartialBijection& g);

  friend bool operator==(const PartialBijection&,
                         const PartialBijection&) = default;
  // Lexicographic on (degree, image array); the canonical element order.
  friend std::strong_ordering operator<=>(const PartialBijection& a,
                                          const PartialBijection& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    return a.images_ <=> b.images_;
  }

  // Compact display, e.g. "[2,-]" for the map 1 -> 2 of degree 2.
  std::string to_string() const;

 private:
  int degree_;
  std::vector<int> images_;
};

}  // namespace isq

#endif  // ISQ_PARTIAL_BIJECTION_HPP_
