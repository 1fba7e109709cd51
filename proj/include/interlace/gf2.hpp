#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace interlace {

/// Symmetric bit matrix over GF(2). Rows are packed into 64-bit words and the
/// diagonal carries loop bits. Treated as an immutable value once built; the
/// mutating setters exist for construction only, and rank() eliminates on a
/// scratch copy.
class SymBitMatrix {
public:
    SymBitMatrix() = default;
    explicit SymBitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t dim() const { return n_; }

    bool at(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }

    /// Sets entry (i,j) and its mirror (j,i).
    void set(std::size_t i, std::size_t j, bool v);
    void flip(std::size_t i, std::size_t j);

    /// GF(2) row rank by Gaussian elimination; pivot = first nonzero entry in
    /// scan order, rows combined by whole-row XOR.
    std::size_t rank() const;
    std::size_t corank() const { return n_ - rank(); }

    /// The submatrix at the selected rows/columns, in idx order.
    SymBitMatrix principal_submatrix(std::span<const std::size_t> idx) const;

    bool operator==(const SymBitMatrix&) const = default;

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {bits_.data() + i * words_, words_};
    }

private:
    std::span<std::uint64_t> row_mut(std::size_t i) { return {bits_.data() + i * words_, words_}; }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace interlace
