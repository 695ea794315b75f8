#pragma once

/**
 * @file linear_solve.hpp
 * @brief Exact sparse Gaussian elimination over a field.
 *
 * Rows are maps from column index to a nonzero value. Elimination keeps a
 * pivot row per pivot column with leading value 1; nullspace() finishes with
 * back-substitution so every pivot row is fully reduced.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "uqsl3/errors.hpp"

namespace uqsl3 {

template <class T>
using SparseRow = std::map<int, T>;

template <class T>
class RowEchelon {
 public:
  explicit RowEchelon(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Reduces row against the current pivots and keeps it when nonzero.
  /// Returns true when the row was independent.
  bool add_row(SparseRow<T> row) {
    reduce(row);
    if (row.empty()) return false;
    // Pivot on the column whose value is simplest to invert: first column.
    auto it = row.begin();
    const int col = it->first;
    const T inv = T(1) / it->second;
    for (auto& [c, v] : row) v = v * inv;
    order_.push_back(col);
    pivots_.emplace(col, std::move(row));
    return true;
  }

  /// Basis of { x : A x = 0 }, one vector per free column.
  std::vector<std::vector<T>> nullspace() {
    back_substitute();
    std::vector<std::vector<T>> basis;
    for (int f = 0; f < columns_; ++f) {
      if (pivots_.count(f) != 0) continue;
      std::vector<T> x(static_cast<std::size_t>(columns_), T(0));
      x[static_cast<std::size_t>(f)] = T(1);
      for (const auto& [p, row] : pivots_) {
        auto it = row.find(f);
        if (it != row.end()) x[static_cast<std::size_t>(p)] = -it->second;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  void reduce(SparseRow<T>& row) const {
    // Repeatedly clear the smallest pivot column present in the row.
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const T factor = it->second;
      const int col = it->first;
      for (const auto& [c, v] : p->second) {
        auto [slot, inserted] = row.try_emplace(c, -(v * factor));
        if (!inserted) {
          slot->second -= v * factor;
          if (slot->second.is_zero()) row.erase(slot);
        }
      }
      it = row.upper_bound(col);
    }
  }

  void back_substitute() {
    for (auto i = order_.rbegin(); i != order_.rend(); ++i) {
      SparseRow<T>& row = pivots_.at(*i);
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto& [c, v] : row) {
          if (c == *i) continue;
          auto p = pivots_.find(c);
          if (p == pivots_.end()) continue;
          const T factor = v;
          for (const auto& [pc, pv] : p->second) {
            auto [slot, inserted] = row.try_emplace(pc, -(pv * factor));
            if (!inserted) {
              slot->second -= pv * factor;
              if (slot->second.is_zero()) row.erase(slot);
            }
          }
          changed = true;
          break;
        }
      }
    }
  }

  int columns_;
  std::map<int, SparseRow<T>> pivots_;
  std::vector<int> order_;
};

/// Coefficients c with sum c_i columns[i] = target, or nothing when target is
/// outside the span. columns are given as sparse vectors over a shared index set.
template <class T, class Key>
std::optional<std::vector<T>> solve_combination(const std::vector<std::map<Key, T>>& columns,
                                                const std::map<Key, T>& target) {
  // Unknowns: one per column plus a last one for -target.
  const int n = static_cast<int>(columns.size());
  std::map<Key, SparseRow<T>> rows;
  for (int i = 0; i < n; ++i) {
    for (const auto& [key, v] : columns[static_cast<std::size_t>(i)]) rows[key][i] = v;
  }
  for (const auto& [key, v] : target) rows[key][n] = -v;
  RowEchelon<T> ech(n + 1);
  for (auto& [key, row] : rows) {
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
    ech.add_row(std::move(row));
  }
  for (const auto& x : ech.nullspace()) {
    const T& last = x[static_cast<std::size_t>(n)];
    if (last.is_zero()) continue;
    std::vector<T> c(x.begin(), x.end() - 1);
    for (auto& v : c) v = v / last;
    return c;
  }
  return std::nullopt;
}

}  // namespace uqsl3
