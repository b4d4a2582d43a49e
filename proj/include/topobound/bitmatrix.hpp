#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "topobound/errors.hpp"

namespace topobound {

// Fixed-length bit vector packed into 64-bit words. Bits past size() are
// kept zero so equality and popcount can work on whole words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool v) {
        assert(i < size_);
        std::uint64_t mask = 1ull << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] ^= 1ull << (i & 63);
    }

    BitVec& operator^=(const BitVec& o) {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    BitVec& operator&=(const BitVec& o) {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }

    friend BitVec operator&(BitVec a, const BitVec& b) {
        a &= b;
        return a;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    // Parity of the GF(2) inner product.
    static bool dot(const BitVec& a, const BitVec& b) {
        assert(a.size_ == b.size_);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w) acc ^= a.words_[w] & b.words_[w];
        return std::popcount(acc) & 1u;
    }

    bool operator==(const BitVec&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense GF(2) matrix, one BitVec per row.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    static BitMatrix from_rows(const std::vector<BitVec>& rows) {
        BitMatrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.empty() ? 0 : rows[0].size();
        for (const auto& r : rows) {
            if (r.size() != m.cols_) throw ContractError("from_rows: ragged rows");
        }
        m.data_ = rows;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    BitVec& row(std::size_t r) { return data_[r]; }
    const BitVec& row(std::size_t r) const { return data_[r]; }

    void append_row(const BitVec& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw ContractError("append_row: width mismatch");
        data_.push_back(v);
        ++rows_;
    }

    // Reduce in place to reduced row echelon form. Returns the pivot columns
    // in increasing order. Deterministic: columns are scanned left to right
    // and the topmost available row is chosen as pivot.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && !data_[sel].get(c)) ++sel;
            if (sel == rows_) continue;
            std::swap(data_[r], data_[sel]);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && data_[i].get(c)) data_[i] ^= data_[r];
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        BitMatrix copy = *this;
        return copy.rref().size();
    }

    // Solve M x = b. Returns one solution (free variables zero), or nullopt
    // if the system is inconsistent.
    std::optional<BitVec> solve(const BitVec& b) const {
        if (b.size() != rows_) throw ContractError("solve: rhs length mismatch");
        BitMatrix aug(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c)
                if (data_[r].get(c)) aug.data_[r].set(c, true);
            if (b.get(r)) aug.data_[r].set(cols_, true);
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        BitVec x(cols_);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (aug.data_[i].get(cols_)) x.set(pivots[i], true);
        return x;
    }

    // Basis of { x : M x = 0 }.
    std::vector<BitVec> nullspace() const {
        BitMatrix red = *this;
        auto pivots = red.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<BitVec> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            BitVec v(cols_);
            v.set(c, true);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                if (red.data_[i].get(c)) v.set(pivots[i], true);
            basis.push_back(v);
        }
        return basis;
    }

    BitVec multiply(const BitVec& x) const {
        if (x.size() != cols_) throw ContractError("multiply: vector length mismatch");
        BitVec y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (BitVec::dot(data_[r], x)) y.set(r, true);
        return y;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (data_[r].get(c)) t.data_[c].set(r, true);
        return t;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

} // namespace topobound
