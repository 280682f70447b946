#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace aubench {

// guarded: pre-completion label reads are rejected. leak_demo: they succeed
// but are logged as violations and the run can never be clean.
enum class GuardMode { guarded, leak_demo };

enum class Phase { training, evaluation };

const char* to_string(GuardMode m);
const char* to_string(Phase p);
GuardMode guard_mode_from_string(const std::string& s);

// The log sequence number is logical, not wall clock, so that serialized
// reports are byte-identical across reruns.
struct AccessRecord {
  std::string operation;
  Phase phase = Phase::training;
  long seq = 0;
  bool violation = false;
};

struct LeakVerdict {
  bool clean = false;
  std::vector<AccessRecord> violations;
  GuardMode mode = GuardMode::guarded;
};

class SealedTestSet;

// Proof that the trainer finished; the only key that opens a sealed set.
class CompletionToken {
 public:
  CompletionToken() = delete;

 private:
  friend class SealedTestSet;
  explicit CompletionToken(uint64_t id) : id_(id) {}
  uint64_t id_;
};

// Access-audited wrapper over one fold's test features and labels. Feature
// reads are always permitted (and logged); label reads before the trainer
// signals completion are violations. Unsealing is one-way.
class SealedTestSet {
 public:
  SealedTestSet(Eigen::MatrixXd features, Eigen::MatrixXi labels, GuardMode mode);

  int size() const { return static_cast<int>(features_.rows()); }
  GuardMode mode() const { return mode_; }
  bool unsealed() const { return unsealed_; }

  const Eigen::MatrixXd& features() const;

  // Throws SealedAccessError in guarded mode while sealed; in leak-demo mode
  // the read succeeds but taints the run.
  const Eigen::MatrixXi& labels() const;

  // Called by the trainer exactly once, after its last parameter update.
  CompletionToken complete_training();

  void unseal(const CompletionToken& token);

  LeakVerdict audit() const;
  const std::vector<AccessRecord>& access_log() const { return log_; }

 private:
  void record(const std::string& op, bool violation) const;

  Eigen::MatrixXd features_;
  Eigen::MatrixXi labels_;
  GuardMode mode_;
  uint64_t id_;
  bool completed_ = false;
  bool unsealed_ = false;
  mutable long seq_ = 0;
  mutable std::vector<AccessRecord> log_;
};

}  // namespace aubench
