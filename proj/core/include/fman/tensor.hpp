#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "fman/rational.hpp"

namespace fman {

/// Vector-valued multilinear map on Q^n with `Arity` arguments, stored by
/// components: at({i, j, ...}, m) is the e_m coordinate of T(e_i, e_j, ...).
template <std::size_t Arity>
class VectorTensor {
 public:
  using Index = std::array<std::size_t, Arity>;

  struct Entry {
    Index args;
    Vector value;
  };

  VectorTensor() = default;
  explicit VectorTensor(std::size_t dim) : dim_(dim), data_(power(dim, Arity + 1)) {}

  std::size_t dim() const { return dim_; }

  Rational& at(const Index& args, std::size_t out) { return data_[offset(args) + out]; }
  const Rational& at(const Index& args, std::size_t out) const { return data_[offset(args) + out]; }

  Vector value(const Index& args) const {
    const std::size_t base = offset(args);
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(base),
                  data_.begin() + static_cast<std::ptrdiff_t>(base + dim_));
  }

  void set_value(const Index& args, const Vector& v) {
    if (v.size() != dim_) throw std::invalid_argument("tensor value has wrong length");
    const std::size_t base = offset(args);
    for (std::size_t m = 0; m < dim_; ++m) data_[base + m] = v[m];
  }

  /// Multilinear extension to arbitrary arguments.
  Vector evaluate(std::span<const Vector, Arity> args) const {
    for (const auto& a : args)
      if (a.size() != dim_) throw std::invalid_argument("tensor argument has wrong length");
    Vector out(dim_);
    Index idx{};
    accumulate(args, idx, 0, Rational(1), out);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Nonzero basis values in lexicographic argument order.
  std::vector<Entry> nonzero_values() const {
    std::vector<Entry> out;
    if (dim_ == 0) return out;
    Index idx{};
    while (true) {
      Vector v = value(idx);
      if (!fman::is_zero(v)) out.push_back({idx, std::move(v)});
      std::size_t pos = Arity;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < dim_) break;
        idx[pos] = 0;
        if (pos == 0) return out;
      }
    }
  }

  friend bool operator==(const VectorTensor&, const VectorTensor&) = default;

 private:
  static std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
  }

  std::size_t offset(const Index& args) const {
    std::size_t flat = 0;
    for (std::size_t a : args) {
      if (a >= dim_) throw std::out_of_range("tensor index out of range");
      flat = flat * dim_ + a;
    }
    return flat * dim_;
  }

  void accumulate(std::span<const Vector, Arity> args, Index& idx, std::size_t slot,
                  const Rational& weight, Vector& out) const {
    if (slot == Arity) {
      const std::size_t base = offset(idx);
      for (std::size_t m = 0; m < dim_; ++m)
        if (!data_[base + m].is_zero()) out[m] += weight * data_[base + m];
      return;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      if (args[slot][i].is_zero()) continue;
      idx[slot] = i;
      accumulate(args, idx, slot + 1, weight * args[slot][i], out);
    }
  }

  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

using Tensor2 = VectorTensor<2>;
using Tensor3 = VectorTensor<3>;
using Tensor4 = VectorTensor<4>;

}  // namespace fman
