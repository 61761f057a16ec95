#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ccsurg/rational.hpp"

namespace ccsurg {

/// Dense rows x cols matrix of big integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix identity(std::size_t n);
    /// Throws DomainError for ragged or empty input.
    static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Integer> row(std::size_t r) const;
    /// Copy with one extra row appended.
    IntegerMatrix with_row(const std::vector<Integer>& row) const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

/// U * m * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;

    /// Nonzero diagonal entries of D.
    std::vector<Integer> invariant_factors() const;
    std::size_t rank() const { return invariant_factors().size(); }
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Z^free_rank + Z/d_1 + ... + Z/d_t with d_1 | ... | d_t, every d_i >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    /// Order of the group when finite, 0 when infinite.
    Integer order() const;
    /// "Z", "Z/5", "Z + Z/5", "0".
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup make_group(std::size_t free_rank, std::vector<Integer> torsion);

/// Coordinates of an element of a cokernel: free part first, then residues for each
/// torsion factor (each in [0, d_i)).
struct GroupElement {
    std::vector<Integer> free;
    std::vector<Integer> torsion;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// The quotient of Z^n (one basis vector per column/generator) by the rows of a relation matrix.
class Cokernel {
public:
    explicit Cokernel(const IntegerMatrix& relations);

    const AbelianGroup& group() const { return group_; }
    std::size_t generators() const { return change_.rows(); }

    /// Class of the integer combination sum_i v_i e_i of generators.
    GroupElement element(const std::vector<Integer>& v) const;
    GroupElement generator(std::size_t i) const;

private:
    AbelianGroup group_;
    IntegerMatrix change_;  // V of the Smith decomposition
    std::vector<Integer> factors_;
    std::size_t rank_ = 0;
};

}  // namespace ccsurg
