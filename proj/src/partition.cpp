#include "isq/partition.hpp"

#include <algorithm>
#include <map>

#include "isq/errors.hpp"

namespace isq {

Partition Partition::from_labels(const std::vector<int>& labels) {
  Partition p;
  p.class_of_.assign(labels.size(), -1);
  std::map<int, int> renumber;  // label -> class index, by least member order
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto it = renumber.find(labels[x]);
    if (it == renumber.end()) {
      int c = static_cast<int>(p.classes_.size());
      renumber.emplace(labels[x], c);
      p.classes_.emplace_back();
      p.class_of_[x] = c;
      p.classes_.back().push_back(static_cast<int>(x));
    } else {
      p.class_of_[x] = it->second;
      p.classes_[static_cast<std::size_t>(it->second)].push_back(
          static_cast<int>(x));
    }
  }
  return p;
}

Partition Partition::from_classes(std::size_t n,
                                  const std::vector<std::vector<int>>& classes) {
  std::vector<int> labels(n, -1);
  for (const auto& cls : classes) {
    if (cls.empty()) {
      throw InputError("partition class must be nonempty");
    }
    int least = *std::min_element(cls.begin(), cls.end());
    for (int x : cls) {
      if (x < 0 || static_cast<std::size_t>(x) >= n || labels[static_cast<std::size_t>(x)] != -1) {
        throw InputError("partition classes must cover each point exactly once");
      }
      labels[static_cast<std::size_t>(x)] = least;
    }
  }
  for (int l : labels) {
    if (l == -1) {
      throw InputError("partition classes must cover every point");
    }
  }
  return from_labels(labels);
}

Partition Partition::identity(std::size_t n) {
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<int>(i);
  }
  return from_labels(labels);
}

Partition Partition::universal(std::size_t n) {
  return from_labels(std::vector<int>(n, 0));
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) {
    return false;
  }
  for (const auto& cls : classes_) {
    int c = coarser.class_of(cls.front());
    for (int x : cls) {
      if (coarser.class_of(x) != c) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace isq
