#ifndef ISQ_REPORT_HPP_
#define ISQ_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace isq {

// Accumulates human-readable law violations. An empty report means every
// checked law held. Stores at most `max_stored` messages but keeps counting.
class Report {
 public:
  explicit Report(std::size_t max_stored = 64) : max_stored_(max_stored) {}

  void add(std::string msg) {
    ++count_;
    if (violations_.size() < max_stored_) {
      violations_.push_back(std::move(msg));
    }
  }

  bool ok() const { return count_ == 0; }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& violations() const { return violations_; }

  std::string summary() const {
    if (ok()) {
      return "ok";
    }
    std::string out;
    for (const auto& v : violations_) {
      out += v;
      out += '\n';
    }
    if (count_ > violations_.size()) {
      out += "... (" + std::to_string(count_ - violations_.size())
             + " further violations suppressed)\n";
    }
    return out;
  }

 private:
  std::size_t max_stored_;
  std::size_t count_ = 0;
  std::vector<std::string> violations_;
};

}  // namespace isq

#endif  // ISQ_REPORT_HPP_
