#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "regretlab/optimizer.hpp"
#include "regretlab/regret_config.hpp"

namespace regretlab {

/// Serves a base optimizer's batches one point at a time and tells the base once its whole
/// batch has been evaluated.
class PointFeed {
 public:
  explicit PointFeed(Optimizer& base) : base_(&base) {}

  const Vector& next(std::size_t remaining);
  void report(double value);

 private:
  Optimizer* base_;
  std::vector<Vector> batch_;
  std::vector<double> values_;
  std::size_t cursor_ = 0;
};

/// Emits the n-th base search point 1 + g(n) consecutive times and recommends the point
/// currently being emitted. Only the first evaluation of each block reaches the base.
class RepeatWrapper final : public Optimizer {
 public:
  RepeatWrapper(std::unique_ptr<Optimizer> base, const RegretConfig& config);

  std::vector<Vector> ask(std::size_t remaining) override;
  void tell(std::span<const double> values) override;
  const Vector& recommend() const override;
  std::string name() const override { return base_->name() + "+repeat_g"; }
  std::optional<double> step_size() const override { return base_->step_size(); }

  const Optimizer& base() const { return *base_; }
  std::size_t base_points() const { return base_index_; }

 private:
  std::unique_ptr<Optimizer> base_;
  WindowSchedule schedule_;
  PointFeed feed_;
  Vector current_;
  std::size_t base_index_ = 0;
  std::size_t copies_left_ = 0;
  bool forward_next_ = false;
};

/// Spends every `period`-th evaluation at the base's current recommendation without telling
/// the base; all other evaluations pass through.
class ProbeWrapper final : public Optimizer {
 public:
  ProbeWrapper(std::unique_ptr<Optimizer> base, std::size_t period = 2);

  std::vector<Vector> ask(std::size_t remaining) override;
  void tell(std::span<const double> values) override;
  const Vector& recommend() const override { return base_->recommend(); }
  std::string name() const override { return base_->name() + "+probe"; }
  std::optional<double> step_size() const override { return base_->step_size(); }

  const Optimizer& base() const { return *base_; }
  std::size_t period() const { return period_; }
  /// True if the point handed out by the last ask() is a probe.
  bool probing() const { return probing_; }

 private:
  std::unique_ptr<Optimizer> base_;
  std::size_t period_;
  PointFeed feed_;
  std::size_t count_ = 0;
  bool probing_ = false;
};

}  // namespace regretlab
