#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace monideal {

/// Coefficient field for homology: characteristic 0 means the rationals,
/// otherwise a prime p <= 32749.
struct Field {
    std::uint32_t characteristic = 0;

    static Field rationals() { return Field{0}; }
    /// Throws PreconditionError unless p is a prime <= 32749.
    static Field prime(std::uint32_t p);
    /// "q" or "p:<prime>".
    static Field parse(const std::string& text);

    std::string name() const;
    bool operator==(const Field&) const = default;
};

/// Small-integer sparse matrix; rows are kept sorted by column.
class SparseIntMatrix {
public:
    struct Entry {
        std::size_t col;
        std::int64_t value;
    };
    using Row = std::vector<Entry>;

    SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    /// Adds `value` to entry (r, c).
    void add(std::size_t r, std::size_t c, std::int64_t value);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const Row& row(std::size_t r) const { return rows_[r]; }

private:
    std::size_t cols_;
    std::vector<Row> rows_;
};

/// Exact rank. Over the rationals this runs fraction-free integer elimination
/// with content removal on arbitrary-precision integers.
std::size_t rank(const SparseIntMatrix& m, Field field);

}  // namespace monideal
