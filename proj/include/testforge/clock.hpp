#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

namespace testforge {

/// Injectable time source. All timeout and backoff logic goes through this
/// so recovery and retry behavior is deterministic under test.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::int64_t now_ms() = 0;
  virtual void sleep_ms(std::int64_t ms) = 0;
};

class RealClock final : public Clock {
 public:
  std::int64_t now_ms() override;
  void sleep_ms(std::int64_t ms) override;
};

/// Virtual time. sleep_ms advances the clock immediately; shared across
/// threads, monotonic within a process.
class SimClock final : public Clock {
 public:
  explicit SimClock(std::int64_t start_ms = 0) : t_(start_ms) {}

  std::int64_t now_ms() override { return t_.load(); }
  void sleep_ms(std::int64_t ms) override { advance(ms); }
  void advance(std::int64_t ms) {
    if (ms > 0) t_.fetch_add(ms);
  }

 private:
  std::atomic<std::int64_t> t_;
};

}  // namespace testforge
