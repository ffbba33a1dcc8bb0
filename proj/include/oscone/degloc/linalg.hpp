#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "oscone/exactalg/prime_field.hpp"

namespace oscone::degloc {

using Row = std::vector<std::uint64_t>;  // residues mod p

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  return PrimeFieldElement(a, p).inverse().residue();
}

/// Incremental row echelon basis over F_p; pivot rows have a leading 1.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t columns, std::uint64_t p) : p_(p), pivots_(columns) {}

  std::size_t rank() const { return rank_; }
  std::size_t columns() const { return pivots_.size(); }

  /// Reduces `row` against the basis; returns true if it added a new pivot.
  bool insert(Row row) {
    const std::size_t n = pivots_.size();
    for (std::size_t col = 0; col < n; ++col) {
      if (row[col] == 0) continue;
      if (pivots_[col]) {
        const Row& piv = *pivots_[col];
        const std::uint64_t f = p_ - row[col];
        for (std::size_t j = col; j < n; ++j) {
          if (piv[j] != 0) row[j] = (row[j] + f * piv[j]) % p_;
        }
        continue;
      }
      const std::uint64_t inv = inverse_mod(row[col], p_);
      for (std::size_t j = col; j < n; ++j) row[j] = row[j] * inv % p_;
      pivots_[col] = std::move(row);
      ++rank_;
      return true;
    }
    return false;
  }

  /// Reduced row echelon form, pivot rows in column order.
  std::vector<Row> rref() const {
    std::vector<std::size_t> cols;
    std::vector<Row> out;
    for (std::size_t c = 0; c < pivots_.size(); ++c) {
      if (!pivots_[c]) continue;
      cols.push_back(c);
      out.push_back(*pivots_[c]);
    }
    const std::size_t n = pivots_.size();
    for (std::size_t i = out.size(); i-- > 0;) {
      for (std::size_t above = 0; above < i; ++above) {
        const std::uint64_t f = out[above][cols[i]];
        if (f == 0) continue;
        for (std::size_t j = cols[i]; j < n; ++j) {
          out[above][j] = (out[above][j] + (p_ - f) * out[i][j]) % p_;
        }
      }
    }
    return out;
  }

 private:
  std::uint64_t p_;
  std::vector<std::optional<Row>> pivots_;
  std::size_t rank_ = 0;
};

inline std::size_t rank_mod_p(const std::vector<Row>& rows, std::size_t columns, std::uint64_t p) {
  EchelonBasis basis(columns, p);
  for (const auto& r : rows) {
    basis.insert(r);
    if (basis.rank() == columns) break;
  }
  return basis.rank();
}

}  // namespace oscone::degloc
