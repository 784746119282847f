#include "regretlab/wrappers.hpp"

#include <stdexcept>
#include <utility>

namespace regretlab {

const Vector& PointFeed::next(std::size_t remaining) {
  if (cursor_ == batch_.size()) {
    batch_ = base_->ask(remaining);
    if (batch_.empty()) throw std::logic_error(base_->name() + " returned an empty batch");
    values_.clear();
    values_.reserve(batch_.size());
    cursor_ = 0;
  }
  return batch_[cursor_];
}

void PointFeed::report(double value) {
  if (cursor_ >= batch_.size()) throw std::logic_error("PointFeed::report without a pending point");
  values_.push_back(value);
  ++cursor_;
  if (cursor_ == batch_.size()) base_->tell(values_);
}

RepeatWrapper::RepeatWrapper(std::unique_ptr<Optimizer> base, const RegretConfig& config)
    : base_(std::move(base)), schedule_(config), feed_(*base_) {}

std::vector<Vector> RepeatWrapper::ask(std::size_t remaining) {
  if (copies_left_ == 0) {
    current_ = feed_.next(remaining);
    ++base_index_;
    copies_left_ = 1 + schedule_.g(base_index_);
    forward_next_ = true;
  }
  return {current_};
}

void RepeatWrapper::tell(std::span<const double> values) {
  if (values.size() != 1) throw std::invalid_argument("RepeatWrapper::tell expects one value");
  if (copies_left_ == 0) throw std::logic_error("RepeatWrapper::tell without ask");
  if (forward_next_) {
    feed_.report(values[0]);
    forward_next_ = false;
  }
  --copies_left_;
}

const Vector& RepeatWrapper::recommend() const {
  return current_.empty() ? base_->recommend() : current_;
}

ProbeWrapper::ProbeWrapper(std::unique_ptr<Optimizer> base, std::size_t period)
    : base_(std::move(base)), period_(period), feed_(*base_) {
  if (period_ < 2) throw std::invalid_argument("probe period must be >= 2");
}

std::vector<Vector> ProbeWrapper::ask(std::size_t remaining) {
  ++count_;
  probing_ = count_ % period_ == 0;
  if (probing_) return {base_->recommend()};
  const std::size_t base_remaining = std::max<std::size_t>(1, remaining - remaining / period_);
  return {feed_.next(base_remaining)};
}

void ProbeWrapper::tell(std::span<const double> values) {
  if (values.size() != 1) throw std::invalid_argument("ProbeWrapper::tell expects one value");
  if (!probing_) feed_.report(values[0]);
}

}  // namespace regretlab
