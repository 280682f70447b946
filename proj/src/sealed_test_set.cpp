#include "aubench/sealed_test_set.hpp"

#include <atomic>

#include "aubench/error.hpp"

namespace aubench {

const char* to_string(GuardMode m) {
  return m == GuardMode::guarded ? "guarded" : "leak-demo";
}

const char* to_string(Phase p) {
  return p == Phase::training ? "training" : "evaluation";
}

GuardMode guard_mode_from_string(const std::string& s) {
  if (s == "guarded") return GuardMode::guarded;
  if (s == "leak-demo") return GuardMode::leak_demo;
  throw ConfigError("unknown guard mode '" + s + "'");
}

namespace {
std::atomic<uint64_t> g_next_id{1};
}

SealedTestSet::SealedTestSet(Eigen::MatrixXd features, Eigen::MatrixXi labels,
                             GuardMode mode)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      mode_(mode),
      id_(g_next_id.fetch_add(1)) {
  if (features_.rows() != labels_.rows())
    throw DataError("sealed test set: feature/label row mismatch");
}

void SealedTestSet::record(const std::string& op, bool violation) const {
  log_.push_back(AccessRecord{op, completed_ ? Phase::evaluation : Phase::training,
                              seq_++, violation});
}

const Eigen::MatrixXd& SealedTestSet::features() const {
  record("read_features", false);
  return features_;
}

const Eigen::MatrixXi& SealedTestSet::labels() const {
  if (!unsealed_) {
    record("read_labels", true);
    if (mode_ == GuardMode::guarded)
      throw SealedAccessError(
          "test labels are sealed until training completes; run in leak-demo "
          "mode to study this failure deliberately");
    return labels_;  // leak-demo: permitted, logged, tainting
  }
  record("read_labels", false);
  return labels_;
}

CompletionToken SealedTestSet::complete_training() {
  if (completed_)
    throw SealedAccessError("training completion already signalled");
  completed_ = true;
  record("complete_training", false);
  return CompletionToken(id_);
}

void SealedTestSet::unseal(const CompletionToken& token) {
  if (token.id_ != id_)
    throw SealedAccessError("unseal: token does not belong to this test set");
  if (!completed_)
    throw SealedAccessError("unseal without trainer completion");
  if (unsealed_) throw SealedAccessError("double unseal");
  unsealed_ = true;
  record("unseal", false);
}

LeakVerdict SealedTestSet::audit() const {
  LeakVerdict v;
  v.mode = mode_;
  for (const auto& rec : log_)
    if (rec.violation) v.violations.push_back(rec);
  // A leak-demo run is never clean, even when nothing was read.
  v.clean = v.violations.empty() && mode_ == GuardMode::guarded;
  return v;
}

}  // namespace aubench
