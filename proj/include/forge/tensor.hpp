#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace forge {

// Dense row-major tensor of f64. Shapes are small (desk scale), so this stays
// a plain struct: no views, no broadcasting, no reference counting.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s);
  Tensor(std::vector<int> s, std::vector<double> d);

  static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }

  std::size_t numel() const { return data.size(); }
  int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
  int rank() const { return static_cast<int>(shape.size()); }

  double& operator[](std::size_t i) { return data[i]; }
  double operator[](std::size_t i) const { return data[i]; }

  // Row-major offsets; no bounds checks beyond the vector's own.
  double& at3(int a, int b, int c) {
    return data[(static_cast<std::size_t>(a) * shape[1] + b) * shape[2] + c];
  }
  double at3(int a, int b, int c) const {
    return data[(static_cast<std::size_t>(a) * shape[1] + b) * shape[2] + c];
  }
  double& at4(int a, int b, int c, int d) {
    return data[((static_cast<std::size_t>(a) * shape[1] + b) * shape[2] + c) *
                    shape[3] +
                d];
  }
  double at4(int a, int b, int c, int d) const {
    return data[((static_cast<std::size_t>(a) * shape[1] + b) * shape[2] + c) *
                    shape[3] +
                d];
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }
  bool all_finite() const;
  double min() const;
  double max() const;
};

std::size_t shape_numel(const std::vector<int>& shape);

}  // namespace forge
