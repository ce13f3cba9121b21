#pragma once

#include "a2twist/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace a2twist {

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const GaussianRational& g) { return g.is_zero(); }
inline std::size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}
inline std::size_t bit_size(const GaussianRational& g) { return g.bit_size(); }
inline Rational inverse(const Rational& r) {
  if (sgn(r) == 0) throw std::domain_error("Rational: inverse of zero");
  return Rational(1) / r;
}
inline GaussianRational inverse(const GaussianRational& g) { return g.inverse(); }

/// Sparse matrix over Q(i); zero entries are never stored.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<std::pair<std::size_t, std::size_t>, GaussianRational>& entries() const { return entries_; }

  GaussianRational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const GaussianRational& v);
  void add(std::size_t r, std::size_t c, const GaussianRational& v);

  ExactMatrix transpose() const;
  bool is_zero() const { return entries_.empty(); }
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const GaussianRational& s) const;
  std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;
  std::vector<std::vector<GaussianRational>> dense_rows() const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, GaussianRational> entries_;
};

/// Incrementally maintained fully reduced row space. Each stored row has a
/// pivot column equal to 1 and vanishes on every other row's pivot column.
/// Optionally tracks how each row combines the vectors passed to insert().
template <class S>
class Echelon {
 public:
  explicit Echelon(std::size_t dim, bool track = false) : dim_(dim), track_(track) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Reduces v in place against the stored rows; returns the multipliers used
  /// (one per stored row, same order).
  std::vector<S> reduce(std::vector<S>& v) const {
    std::vector<S> mult(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (is_zero(v[p])) continue;
      S c = v[p];
      const auto& row = rows_[k];
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!is_zero(row[j])) v[j] -= c * row[j];
      }
      mult[k] = std::move(c);
    }
    return mult;
  }

  bool in_span(std::vector<S> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  /// Inserts v; returns true when it increased the rank.
  bool insert(std::vector<S> v) {
    const std::size_t id = inserted_++;
    std::vector<S> mult = reduce(v);
    std::size_t best = dim_;
    std::size_t best_bits = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(v[j])) continue;
      std::size_t b = bit_size(v[j]);
      if (best == dim_ || b < best_bits) {
        best = j;
        best_bits = b;
      }
    }
    if (best == dim_) return false;
    std::vector<S> comb;
    if (track_) {
      comb.assign(id + 1, S(0));
      comb[id] = S(1);
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (is_zero(mult[k])) continue;
        for (std::size_t j = 0; j < combos_[k].size(); ++j)
          if (!is_zero(combos_[k][j])) comb[j] -= mult[k] * combos_[k][j];
      }
    }
    S inv = inverse(v[best]);
    for (auto& x : v)
      if (!is_zero(x)) x *= inv;
    if (track_)
      for (auto& x : comb)
        if (!is_zero(x)) x *= inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto& row = rows_[k];
      if (is_zero(row[best])) continue;
      S c = row[best];
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(v[j])) row[j] -= c * v[j];
      if (track_) {
        auto& ck = combos_[k];
        ck.resize(comb.size(), S(0));
        for (std::size_t j = 0; j < comb.size(); ++j)
          if (!is_zero(comb[j])) ck[j] -= c * comb[j];
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(best);
    if (track_) combos_.push_back(std::move(comb));
    return true;
  }

  /// Coefficients expressing v through the inserted vectors, if v lies in
  /// their span. Requires tracking.
  std::optional<std::vector<S>> decompose(std::vector<S> v) const {
    std::vector<S> mult = reduce(v);
    for (const auto& x : v)
      if (!is_zero(x)) return std::nullopt;
    std::vector<S> out(inserted_, S(0));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (is_zero(mult[k])) continue;
      for (std::size_t j = 0; j < combos_[k].size(); ++j)
        if (!is_zero(combos_[k][j])) out[j] += mult[k] * combos_[k][j];
    }
    return out;
  }

  const std::vector<std::vector<S>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<S>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<S>> combos_;
};

std::size_t matrix_rank(const ExactMatrix& m);
/// Basis of {x : m x = 0}; every returned vector is verified to satisfy m x = 0.
std::vector<std::vector<GaussianRational>> kernel_basis(const ExactMatrix& m);
/// Coefficients c with v = Σ c_j basis[j], or nullopt when v is outside the span.
std::optional<std::vector<GaussianRational>> span_membership(const std::vector<GaussianRational>& v,
                                                             const std::vector<std::vector<GaussianRational>>& basis);

}  // namespace a2twist
