#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl::linalg {

/// Sparse exact vector; absent entries are zero and stored entries never are.
using SparseVector = std::map<std::size_t, Rational>;

/// a += factor * b, erasing cancelled entries.
inline void axpy(SparseVector& a, const Rational& factor, const SparseVector& b) {
    Rational t;
    for (const auto& [k, c] : b) {
        t = factor * c;
        auto [it, inserted] = a.try_emplace(k, t);
        if (!inserted) {
            it->second += t;
            if (it->second == 0) a.erase(it);
        }
    }
}

/// Column space of a matrix built one column at a time, in semi-echelon
/// form: every stored vector has a distinct leading (largest) row index and
/// a leading coefficient of 1. Each stored vector remembers which
/// combination of input columns produced it, so dependencies among the
/// columns come out as kernel vectors.
///
/// Pivots are the largest row index of each reduced vector, and columns are
/// consumed in the caller's order. The kernel is therefore deterministic;
/// callers that need a canonical kernel basis re-reduce it themselves.
class ColumnEchelon {
  public:
    /// Adds column `index`. Returns the kernel vector if it reduced to zero.
    std::optional<SparseVector> add_column(std::size_t index, SparseVector column) {
        SparseVector combo{{index, Rational(1)}};
        reduce(column, combo);
        if (column.empty()) return combo;
        auto lead = column.rbegin()->first;
        const Rational inv = 1 / column.rbegin()->second;
        for (auto& [k, c] : column) c *= inv;
        for (auto& [k, c] : combo) c *= inv;
        pivots_.emplace(lead, Pivot{std::move(column), std::move(combo)});
        return std::nullopt;
    }

    /// Reduces `target`; returns x with sum_c x_c column_c = target, if any.
    std::optional<SparseVector> solve(SparseVector target) const {
        SparseVector combo;
        reduce(target, combo);
        if (!target.empty()) return std::nullopt;
        for (auto& [k, c] : combo) c = -c;
        return combo;
    }

    std::size_t rank() const noexcept { return pivots_.size(); }

  private:
    struct Pivot {
        SparseVector vec;
        SparseVector combo;
    };

    // vec and combo are updated together: vec_out = vec_in + (combo_out - combo_in) . columns
    void reduce(SparseVector& vec, SparseVector& combo) const {
        while (!vec.empty()) {
            auto lead = vec.rbegin();
            auto p = pivots_.find(lead->first);
            if (p == pivots_.end()) return;
            const Rational factor = -lead->second;
            axpy(vec, factor, p->second.vec);
            axpy(combo, factor, p->second.combo);
        }
    }

    std::map<std::size_t, Pivot> pivots_;
};

/// Basis of the kernel of the matrix whose columns are given.
inline std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns) {
    ColumnEchelon e;
    std::vector<SparseVector> out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (auto k = e.add_column(c, columns[c])) out.push_back(std::move(*k));
    }
    return out;
}

/// Some x with A x = target, or nothing when the system is inconsistent.
inline std::optional<SparseVector> solve(const std::vector<SparseVector>& columns, const SparseVector& target) {
    ColumnEchelon e;
    for (std::size_t c = 0; c < columns.size(); ++c) e.add_column(c, columns[c]);
    return e.solve(target);
}

}  // namespace weyl::linalg
