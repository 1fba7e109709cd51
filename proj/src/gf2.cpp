#include "interlace/gf2.hpp"

#include <stdexcept>

namespace interlace {

void SymBitMatrix::set(std::size_t i, std::size_t j, bool v) {
    if (i >= n_ || j >= n_) throw std::out_of_range("SymBitMatrix::set: index out of range");
    auto put = [&](std::size_t r, std::size_t c) {
        std::uint64_t& w = bits_[r * words_ + (c >> 6)];
        std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (v)
            w |= bit;
        else
            w &= ~bit;
    };
    put(i, j);
    put(j, i);
}

void SymBitMatrix::flip(std::size_t i, std::size_t j) { set(i, j, !at(i, j)); }

std::size_t SymBitMatrix::rank() const {
    std::vector<std::uint64_t> scratch(bits_);
    auto r = [&](std::size_t i) { return scratch.data() + i * words_; };
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n_ && pivot_row < n_; ++col) {
        std::size_t word = col >> 6;
        std::uint64_t bit = std::uint64_t{1} << (col & 63);
        std::size_t found = n_;
        for (std::size_t i = pivot_row; i < n_; ++i) {
            if (r(i)[word] & bit) {
                found = i;
                break;
            }
        }
        if (found == n_) continue;
        if (found != pivot_row) {
            for (std::size_t w = 0; w < words_; ++w) std::swap(r(found)[w], r(pivot_row)[w]);
        }
        for (std::size_t i = pivot_row + 1; i < n_; ++i) {
            if (r(i)[word] & bit) {
                for (std::size_t w = 0; w < words_; ++w) r(i)[w] ^= r(pivot_row)[w];
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

SymBitMatrix SymBitMatrix::principal_submatrix(std::span<const std::size_t> idx) const {
    for (std::size_t i : idx) {
        if (i >= n_) throw std::out_of_range("principal_submatrix: index out of range");
    }
    SymBitMatrix out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i; j < idx.size(); ++j) {
            if (at(idx[i], idx[j])) out.set(i, j, true);
        }
    }
    return out;
}

}  // namespace interlace
