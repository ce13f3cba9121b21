#include "a2twist/linalg.hpp"

#include <set>
#include <stdexcept>

namespace a2twist {

GaussianRational ExactMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? GaussianRational() : it->second;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const GaussianRational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("ExactMatrix::set");
  if (v.is_zero())
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void ExactMatrix::add(std::size_t r, std::size_t c, const GaussianRational& v) {
  if (v.is_zero()) return;
  if (r >= rows_ || c >= cols_) throw std::out_of_range("ExactMatrix::add");
  auto [it, fresh] = entries_.try_emplace({r, c}, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.entries_.emplace(std::make_pair(rc.second, rc.first), v);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
  std::vector<std::vector<std::pair<std::size_t, const GaussianRational*>>> orow(o.rows_);
  for (const auto& [rc, v] : o.entries_) orow[rc.first].emplace_back(rc.second, &v);
  ExactMatrix out(rows_, o.cols_);
  for (const auto& [rc, v] : entries_)
    for (const auto& [c2, w] : orow[rc.second]) out.add(rc.first, c2, v * *w);
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in sum");
  ExactMatrix out = *this;
  for (const auto& [rc, v] : o.entries_) out.add(rc.first, rc.second, v);
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(GaussianRational(-1)); }

ExactMatrix ExactMatrix::scaled(const GaussianRational& s) const {
  ExactMatrix out(rows_, cols_);
  if (s.is_zero()) return out;
  for (const auto& [rc, v] : entries_) out.entries_.emplace(rc, v * s);
  return out;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("ExactMatrix::apply: size mismatch");
  std::vector<GaussianRational> out(rows_);
  for (const auto& [rc, x] : entries_)
    if (!v[rc.second].is_zero()) out[rc.first].add_mul(x, v[rc.second]);
  return out;
}

std::vector<std::vector<GaussianRational>> ExactMatrix::dense_rows() const {
  std::vector<std::vector<GaussianRational>> out(rows_, std::vector<GaussianRational>(cols_));
  for (const auto& [rc, v] : entries_) out[rc.first][rc.second] = v;
  return out;
}

std::size_t matrix_rank(const ExactMatrix& m) {
  Echelon<GaussianRational> ech(m.cols());
  for (auto& row : m.dense_rows()) {
    ech.insert(std::move(row));
    if (ech.rank() == m.cols()) break;
  }
  return ech.rank();
}

std::vector<std::vector<GaussianRational>> kernel_basis(const ExactMatrix& m) {
  Echelon<GaussianRational> ech(m.cols());
  for (auto& row : m.dense_rows()) ech.insert(std::move(row));
  std::set<std::size_t> pivots(ech.pivots().begin(), ech.pivots().end());
  std::vector<std::vector<GaussianRational>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivots.count(f)) continue;
    std::vector<GaussianRational> x(m.cols());
    x[f] = GaussianRational(1);
    for (std::size_t k = 0; k < ech.rank(); ++k) x[ech.pivots()[k]] = -ech.rows()[k][f];
    for (const auto& y : m.apply(x))
      if (!y.is_zero()) throw std::logic_error("kernel_basis: verification failed");
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<std::vector<GaussianRational>> span_membership(const std::vector<GaussianRational>& v,
                                                             const std::vector<std::vector<GaussianRational>>& basis) {
  Echelon<GaussianRational> ech(v.size(), true);
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw std::invalid_argument("span_membership: dimension mismatch");
    ech.insert(b);
  }
  return ech.decompose(v);
}

}  // namespace a2twist
