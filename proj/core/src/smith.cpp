#include "ccsurg/smith.hpp"

#include <algorithm>
#include <utility>

namespace ccsurg {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntegerMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DomainError("ragged matrix");
        std::size_t c = 0;
        for (long v : row) (*this)(r, c++) = v;
        ++r;
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    if (rows.empty() || rows.front().empty()) throw DomainError("matrix must be nonempty");
    IntegerMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DomainError("ragged matrix at row " + std::to_string(r));
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Integer> IntegerMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntegerMatrix IntegerMatrix::with_row(const std::vector<Integer>& row) const {
    if (row.size() != cols_) throw DomainError("appended row has the wrong length");
    IntegerMatrix m(rows_ + 1, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(row.begin(), row.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::string IntegerMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r ? ",[" : "[";
        for (std::size_t c = 0; c < cols_; ++c) out += (c ? "," : "") + (*this)(r, c).get_str();
        out += "]";
    }
    return out + "]";
}

namespace {

// Row and column operations on D, mirrored onto U (rows) and V (columns).
struct Reducer {
    IntegerMatrix& D;
    IntegerMatrix& U;
    IntegerMatrix& V;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(a, c), D(b, c));
        for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(a, c), U(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, a), D(r, b));
        for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, a), V(r, b));
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& k) {
        for (std::size_t c = 0; c < D.cols(); ++c) D(dst, c) += k * D(src, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U(dst, c) += k * U(src, c);
    }
    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& k) {
        for (std::size_t r = 0; r < D.rows(); ++r) D(r, dst) += k * D(r, src);
        for (std::size_t r = 0; r < V.rows(); ++r) V(r, dst) += k * V(r, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < D.cols(); ++c) D(r, c) = -D(r, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U(r, c) = -U(r, c);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    SmithDecomposition out{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols())};
    Reducer red{out.D, out.U, out.V};
    IntegerMatrix& D = out.D;
    const std::size_t rows = D.rows();
    const std::size_t cols = D.cols();

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (D(r, c) != 0 && (pr == rows || abs(D(r, c)) < abs(D(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) return out;
            red.swap_rows(t, pr);
            red.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (D(r, t) == 0) continue;
                red.add_row(r, t, Integer(-(D(r, t) / D(t, t))));
                clean = clean && D(r, t) == 0;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (D(t, c) == 0) continue;
                red.add_col(c, t, Integer(-(D(t, c) / D(t, t))));
                clean = clean && D(t, c) == 0;
            }
            if (!clean) continue;  // a nonzero remainder is now a smaller pivot

            // Divisibility: pull any offending row into the pivot row and go again.
            std::size_t bad = rows;
            for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (D(r, c) % D(t, t) != 0) {
                        bad = r;
                        break;
                    }
            if (bad == rows) break;
            red.add_row(t, bad, 1);
        }
        if (D(t, t) < 0) red.negate_row(t);
    }
    return out;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0) out.push_back(D(i, i));
    return out;
}

Integer AbelianGroup::order() const {
    if (free_rank > 0) return 0;
    Integer n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

std::string AbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.emplace_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

AbelianGroup make_group(std::size_t free_rank, std::vector<Integer> torsion) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw DomainError("torsion factors must be at least 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0) throw DomainError("torsion factors must form a divisibility chain");
    }
    return AbelianGroup{free_rank, std::move(torsion)};
}

Cokernel::Cokernel(const IntegerMatrix& relations) : change_(1, 1) {
    SmithDecomposition snf = smith_normal_form(relations);
    factors_ = snf.invariant_factors();
    rank_ = factors_.size();
    change_ = std::move(snf.V);
    for (const auto& d : factors_)
        if (d != 1) group_.torsion.push_back(d);
    group_.free_rank = relations.cols() - rank_;
}

GroupElement Cokernel::element(const std::vector<Integer>& v) const {
    const std::size_t n = change_.rows();
    if (v.size() != n) throw DomainError("element has the wrong number of coordinates");
    // x -> x V carries the relation lattice onto the row space of D.
    std::vector<Integer> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) image[j] += v[i] * change_(i, j);
    }
    GroupElement e;
    for (std::size_t j = 0; j < rank_; ++j) {
        if (factors_[j] == 1) continue;
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), image[j].get_mpz_t(), factors_[j].get_mpz_t());
        e.torsion.push_back(r);
    }
    e.free.assign(image.begin() + static_cast<std::ptrdiff_t>(rank_), image.end());
    return e;
}

GroupElement Cokernel::generator(std::size_t i) const {
    std::vector<Integer> v(change_.rows());
    v.at(i) = 1;
    return element(v);
}

}  // namespace ccsurg
