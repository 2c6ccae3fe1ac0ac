#pragma once

#include <vector>

#include "forge/tensor.hpp"

namespace forge::kernels {

// Every kernel has one serial reference path and one OpenMP path. The OpenMP
// path splits only across writes that are disjoint per thread and keeps every
// per-element accumulation in the same order as the reference, so the two are
// bit-identical at any thread count. Tests and the bench tool compare them.
enum class Exec { Serial, Parallel };

void set_thread_count(int n);
int thread_count();

int conv_out_dim(int in, int k, int stride, int pad);

// in: H x W x Cin, kernel: kh x kw x Cin x Cout, out: OH x OW x Cout.
void conv2d_forward(const Tensor& in, const Tensor& kernel,
                    const std::vector<double>& bias, int stride, int pad,
                    Tensor& out, Exec exec = Exec::Parallel);

void conv2d_backward(const Tensor& in, const Tensor& kernel, int stride,
                     int pad, const Tensor& dOut, Tensor& dIn, Tensor& dKernel,
                     std::vector<double>& dBias, Exec exec = Exec::Parallel);

// in: flat [n], weights: n x m row-major, out: [m] = W^T in + b.
void dense_forward(const std::vector<double>& in, const Tensor& weights,
                   const std::vector<double>& bias, std::vector<double>& out,
                   Exec exec = Exec::Parallel);

void dense_backward(const std::vector<double>& in, const Tensor& weights,
                    const std::vector<double>& dOut, std::vector<double>& dIn,
                    Tensor& dWeights, std::vector<double>& dBias,
                    Exec exec = Exec::Parallel);

// Non-overlapping window pooling (window == stride). Ties break to the first
// maximum in scan order, both forward and backward.
void maxpool_forward(const Tensor& in, int window, Tensor& out,
                     Exec exec = Exec::Parallel);

void maxpool_backward(const Tensor& in, int window, const Tensor& dOut,
                      Tensor& dIn, Exec exec = Exec::Parallel);

void relu_forward(const Tensor& in, Tensor& out);

// Subgradient at exactly zero is zero.
void relu_backward(const Tensor& in, const Tensor& dOut, Tensor& dIn);

}  // namespace forge::kernels
