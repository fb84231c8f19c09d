#ifndef NQUEENS_DEADLINE_HPP_
#define NQUEENS_DEADLINE_HPP_

#include <chrono>
#include <optional>

namespace nqueens {

// Wall-clock budget shared by a solver run. A default-constructed deadline
// never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() : start_(Clock::now()) {}
  explicit Deadline(std::optional<double> seconds) : start_(Clock::now()) {
    if (seconds) {
      end_ = start_ + std::chrono::duration_cast<Clock::duration>(
                          std::chrono::duration<double>(*seconds));
    }
  }

  bool expired() const { return end_ && Clock::now() >= *end_; }
  bool bounded() const { return end_.has_value(); }
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
  std::optional<Clock::time_point> end_;
};

}  // namespace nqueens

#endif  // NQUEENS_DEADLINE_HPP_
