#include "isq/partial_bijection.hpp"

#include <algorithm>

#include "isq/errors.hpp"

namespace isq {

PartialBijection::PartialBijection(int degree)
    : degree_(degree), images_(static_cast<std::size_t>(degree), 0) {
  if (degree < 1) {
    throw InputError("partial bijection degree must be positive");
  }
}

PartialBijection::PartialBijection(int degree, std::vector<int> images)
    : degree_(degree), images_(std::move(images)) {
  if (degree < 1) {
    throw InputError("partial bijection degree must be positive");
  }
  if (images_.size() != static_cast<std::size_t>(degree)) {
    throw InputError("image array length does not match degree");
  }
  std::vector<bool> seen(static_cast<std::size_t>(degree) + 1, false);
  for (int y : images_) {
    if (y < 0 || y > degree) {
      throw InputError("image value out of range");
    }
    if (y != 0) {
      if (seen[static_cast<std::size_t>(y)]) {
        throw InputError("image values not injective");
      }
      seen[static_cast<std::size_t>(y)] = true;
    }
  }
}

PartialBijection PartialBijection::identity(int degree) {
  PartialBijection p(degree);
  for (int x = 1; x <= degree; ++x) {
    p.images_[static_cast<std::size_t>(x - 1)] = x;
  }
  return p;
}

PartialBijection PartialBijection::partial_identity(
    int degree, const std::vector<int>& points) {
  PartialBijection p(degree);
  for (int x : points) {
    if (x < 1 || x > degree) {
      throw InputError("point out of range");
    }
    p.images_[static_cast<std::size_t>(x - 1)] = x;
  }
  return p;
}

PartialBijection PartialBijection::point_map(int degree, int x, int y) {
  PartialBijection p(degree);
  if (x < 1 || x > degree || y < 1 || y > degree) {
    throw InputError("point out of range");
  }
  p.images_[static_cast<std::size_t>(x - 1)] = y;
  return p;
}

int PartialBijection::rank() const {
  return static_cast<int>(
      std::count_if(images_.begin(), images_.end(), [](int y) { return y != 0; }));
}

bool PartialBijection::is_idempotent() const {
  for (int x = 1; x <= degree_; ++x) {
    int y = apply(x);
    if (y != 0 && y != x) {
      return false;
    }
  }
  return true;
}

std::vector<int> PartialBijection::domain_points() const {
  std::vector<int> out;
  for (int x = 1; x <= degree_; ++x) {
    if (apply(x) != 0) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<int> PartialBijection::image_points() const {
  std::vector<int> out;
  for (int x = 1; x <= degree_; ++x) {
    if (apply(x) != 0) {
      out.push_back(apply(x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection inv(degree_);
  for (int x = 1; x <= degree_; ++x) {
    int y = apply(x);
    if (y != 0) {
      inv.images_[static_cast<std::size_t>(y - 1)] = x;
    }
  }
  return inv;
}

PartialBijection operator*(const PartialBijection& f,
                           const PartialBijection& g) {
  if (f.degree_ != g.degree_) {
    throw InputError("degree mismatch in composition");
  }
  PartialBijection h(f.degree_);
  for (int x = 1; x <= f.degree_; ++x) {
    int y = g.apply(x);
    if (y != 0) {
      h.images_[static_cast<std::size_t>(x - 1)] = f.apply(y);
    }
  }
  return h;
}

std::string PartialBijection::to_string() const {
  std::string out = "[";
  for (int x = 1; x <= degree_; ++x) {
    if (x > 1) {
      out += ',';
    }
    int y = apply(x);
    out += (y == 0) ? "-" : std::to_string(y);
  }
  out += ']';
  return out;
}

}  // namespace isq
