#pragma once

#include "tropreal/base.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tropreal {

class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

    static Gf2Vector from_indices(std::size_t length, const std::vector<std::size_t>& ones);

    std::size_t size() const { return length_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    Gf2Vector& operator^=(const Gf2Vector& o);
    Gf2Vector operator^(const Gf2Vector& o) const {
        Gf2Vector r = *this;
        r ^= o;
        return r;
    }
    Gf2Vector operator&(const Gf2Vector& o) const;
    bool dot(const Gf2Vector& o) const;
    std::size_t popcount() const;
    bool is_zero() const;
    // Lowest set index, or size() when zero.
    std::size_t lowest() const;
    std::vector<std::size_t> ones() const;

    bool operator==(const Gf2Vector& o) const = default;
    bool operator<(const Gf2Vector& o) const;
    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool operator()(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    const Gf2Vector& row(std::size_t r) const { return rows_[r]; }

    Gf2Vector multiply(const Gf2Vector& v) const;
    std::size_t rank() const;

private:
    std::size_t cols_;
    std::vector<Gf2Vector> rows_;
};

// Linear subspace given by an independent basis kept in reduced echelon form.
class Gf2Subspace {
public:
    explicit Gf2Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    static Gf2Subspace full(std::size_t ambient_dim);
    static Gf2Subspace span(std::size_t ambient_dim, const std::vector<Gf2Vector>& generators);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Gf2Vector>& basis() const { return basis_; }
    bool contains(const Gf2Vector& v) const;
    // Reduces v against the basis; zero result means membership.
    Gf2Vector reduce(Gf2Vector v) const;
    // Returns false if v was already in the span.
    bool insert(Gf2Vector v);

private:
    std::size_t ambient_;
    std::vector<Gf2Vector> basis_;  // pivot of basis_[k] is pivots_[k]
    std::vector<std::size_t> pivots_;
};

Gf2Subspace kernel(const Gf2Matrix& m);

struct Gf2Constraint {
    Gf2Vector coefficients;
    bool rhs = false;
};

struct SolutionFlat {
    enum class Kind { Empty, Linear, Affine };
    Kind kind = Kind::Empty;
    Gf2Vector origin;
    Gf2Subspace directions{0};

    bool contains(const Gf2Vector& v) const;
    std::size_t dim() const { return directions.dim(); }
};

SolutionFlat solve_affine(const std::vector<Gf2Constraint>& constraints, std::size_t ambient_dim);

// Affine line {rep, rep + dir} in Z_2^2.
class PhaseLine {
public:
    PhaseLine() = default;
    PhaseLine(Z2Pair rep, Z2Pair dir);

    Z2Pair direction() const { return dir_; }
    std::array<Z2Pair, 2> elements() const;
    bool contains(Z2Pair e) const { return e == lo_ || e == lo_ + dir_; }
    PhaseLine translated(Z2Pair by) const { return PhaseLine(lo_ + by, dir_); }

    bool operator==(const PhaseLine& o) const { return lo_ == o.lo_ && dir_ == o.dir_; }
    std::string to_string() const;

private:
    Z2Pair lo_;  // smaller of the two elements, so equal sets compare equal
    Z2Pair dir_{1};
};

}  // namespace tropreal
