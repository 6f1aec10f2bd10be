#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace n2d::dnd {

class EmptyTableError : public std::runtime_error {
 public:
  EmptyTableError() : std::runtime_error("lookup on an empty DND table") {}
};

struct DndConfig {
  std::size_t dim = 64;
  std::size_t capacity = 5000;
  double delta = 1e-3;   // kernel regularizer, must be > 0
  double alpha = 0.1;    // value learning rate for matched-key writes, (0, 1]
  double match_tol = 1e-12;  // squared distance under which a write updates in place
};

struct LookupResult {
  double q = 0.0;
  std::vector<std::size_t> neighbor_indices;  // nearest first
  std::vector<double> weights;                // aligned with neighbor_indices
};

struct WriteOutcome {
  enum class Kind { Updated, Appended, Replaced };
  Kind kind = Kind::Appended;
  std::size_t index = 0;
};

/// 1 / (||h - hi||^2 + delta)
double kernel(std::span<const double> h, std::span<const double> hi, double delta);

/// Episodic key/value memory for one action.
///
/// Every knn/lookup/write call advances the table's tick by one and stamps
/// the entries it refers to; when full, a write that matches no key replaces
/// the entry with the smallest stamp (lowest index among equals). The
/// `peek*` variants are read-only and leave stamps, tick and values intact.
class DndTable {
 public:
  explicit DndTable(DndConfig config);

  const DndConfig& config() const { return config_; }
  std::size_t size() const { return values_.size(); }
  std::size_t dim() const { return config_.dim; }
  std::size_t capacity() const { return config_.capacity; }
  bool empty() const { return values_.empty(); }
  std::uint64_t tick() const { return tick_; }

  std::span<const double> key(std::size_t i) const;
  double value(std::size_t i) const { return values_.at(i); }
  std::uint64_t recency(std::size_t i) const { return recency_.at(i); }

  /// Indices of the min(p, size) nearest keys by squared Euclidean distance,
  /// ties broken by lower index. Throws EmptyTableError on an empty table.
  std::vector<std::size_t> knn(std::span<const double> h, std::size_t p);
  std::vector<std::size_t> peek_knn(std::span<const double> h, std::size_t p) const;

  /// Kernel-weighted average of the p nearest values.
  LookupResult lookup(std::span<const double> h, std::size_t p);
  LookupResult peek(std::span<const double> h, std::size_t p) const;

  /// d q / d h with the neighbour set held fixed, scaled by `upstream`.
  /// Read-only.
  std::vector<double> lookup_grad(std::span<const double> h, std::size_t p,
                                  double upstream) const;

  /// Lookup that also returns d q / d h (scaled by `upstream`). Stamps the
  /// neighbours like lookup().
  LookupResult lookup_with_grad(std::span<const double> h, std::size_t p, double upstream,
                                std::vector<double>& grad_out);

  /// Batched forms over `queries` = [count, dim] row-major. Results, stamps
  /// and tick match calling the single-query version on each row in order,
  /// but the keys are scanned once per batch.
  std::vector<LookupResult> peek_batch(std::span<const double> queries, std::size_t p) const;
  std::vector<LookupResult> lookup_batch(std::span<const double> queries, std::size_t p);
  /// `grads_out` receives d q_i / d h_i for every row ([count, dim]).
  std::vector<LookupResult> lookup_with_grad_batch(std::span<const double> queries, std::size_t p,
                                                   std::vector<double>& grads_out);

  WriteOutcome write(std::span<const double> h, double q_target);

  /// Snapshot layout (text):
  ///   n2d-dnd 1
  ///   <dim> <size> <capacity> <delta> <alpha> <match_tol> <tick>
  ///   then one line per entry: <recency> <value> <key_0> ... <key_{dim-1}>
  void save(std::ostream& out) const;
  static DndTable load(std::istream& in);

  /// Rebuilds a table from raw state: `keys` is row-major [n, dim], every
  /// stamp must be <= `tick`. No match/eviction logic runs, so duplicate
  /// keys are kept as given.
  static DndTable restore(DndConfig config, std::vector<double> keys, std::vector<double> values,
                          std::vector<std::uint64_t> recency, std::uint64_t tick);

 private:
  void check_query(std::span<const double> h) const;
  std::vector<double> squared_distances(std::span<const double> h) const;
  /// [count, size()] distances from each query row to every key.
  std::vector<double> squared_distances(const double* queries, std::size_t count) const;
  std::size_t check_batch(std::span<const double> queries) const;
  std::vector<std::size_t> select(std::span<const double> dist, std::size_t p) const;
  LookupResult weigh(std::span<const double> h, std::vector<std::size_t> idx) const;
  void stamp(std::span<const std::size_t> idx);
  std::vector<double> grad_for(std::span<const double> h, const LookupResult& r,
                               double upstream) const;

  DndConfig config_;
  std::vector<double> keys_;  // row-major [size, dim]
  std::vector<double> values_;
  std::vector<std::uint64_t> recency_;
  std::uint64_t tick_ = 0;
};

}  // namespace n2d::dnd
