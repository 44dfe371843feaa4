#ifndef ISQ_PARTITION_HPP_
#define ISQ_PARTITION_HPP_

#include <cstddef>
#include <vector>

namespace isq {

// A partition of {0, ..., n-1} in canonical form: classes are sorted
// internally, listed by least member, and class indices follow that order.
// Canonical form makes structural equality meaningful.
class Partition {
 public:
  Partition() = default;

  // From an arbitrary labelling x -> label; labels are renumbered.
  static Partition from_labels(const std::vector<int>& labels);
  static Partition from_classes(std::size_t n,
                                const std::vector<std::vector<int>>& classes);
  static Partition identity(std::size_t n);
  static Partition universal(std::size_t n);

  std::size_t size() const { return class_of_.size(); }
  std::size_t num_classes() const { return classes_.size(); }
  int class_of(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  bool related(int x, int y) const { return class_of(x) == class_of(y); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<int>& cls(int c) const {
    return classes_[static_cast<std::size_t>(c)];
  }

  // Every class of *this is contained in a class of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.class_of_ < b.class_of_;
  }

 private:
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
};

// Union-find over {0..n-1}; the workhorse behind partitions and closures.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) {
      parent_[i] = static_cast<int>(i);
    }
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // Returns true if the two were in distinct classes (a merge happened).
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);  // keep least member as root
    parent_[static_cast<std::size_t>(y)] = x;
    return true;
  }
  Partition to_partition() {
    std::vector<int> labels(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      labels[i] = find(static_cast<int>(i));
    }
    return Partition::from_labels(labels);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace isq

#endif  // ISQ_PARTITION_HPP_
