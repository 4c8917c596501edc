#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace monet {

/// Axis-aligned box of valid vectors. Serves both as the task parameter
/// space and as the solution space with its clipping bounds.
struct BoundedSpace {
  std::vector<double> lower;
  std::vector<double> upper;

  BoundedSpace(std::vector<double> lo, std::vector<double> hi);

  std::size_t dim() const { return lower.size(); }
  double range(std::size_t i) const { return upper[i] - lower[i]; }
  bool contains(std::span<const double> v) const;
};

/// Fixed set of task parameter vectors (the node set of the task graph).
/// Rows are stored contiguously, row-major.
class TaskSet {
 public:
  TaskSet(BoundedSpace space, std::vector<double> rows_row_major);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return space_.dim(); }
  const BoundedSpace& space() const { return space_; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * dim(), dim()};
  }
  const std::vector<double>& data() const { return data_; }

 private:
  BoundedSpace space_;
  std::size_t n_;
  std::vector<double> data_;
};

/// Squared Euclidean distance between two vectors of equal length.
double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace monet
