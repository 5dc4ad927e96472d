#include "tropreal/gf2.hpp"

#include <algorithm>
#include <bit>

namespace tropreal {

Gf2Vector Gf2Vector::from_indices(std::size_t length, const std::vector<std::size_t>& ones) {
    Gf2Vector v(length);
    for (std::size_t i : ones) v.set(i);
    return v;
}

void Gf2Vector::set(std::size_t i, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& o) {
    ensure(length_ == o.length_, "Gf2Vector length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
}

Gf2Vector Gf2Vector::operator&(const Gf2Vector& o) const {
    ensure(length_ == o.length_, "Gf2Vector length mismatch");
    Gf2Vector r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
}

bool Gf2Vector::dot(const Gf2Vector& o) const { return ((*this & o).popcount() & 1U) != 0; }

std::size_t Gf2Vector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool Gf2Vector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Gf2Vector::lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return length_;
}

std::vector<std::size_t> Gf2Vector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

bool Gf2Vector::operator<(const Gf2Vector& o) const {
    if (length_ != o.length_) return length_ < o.length_;
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i) != o.get(i)) return !get(i);
    return false;
}

std::string Gf2Vector::to_string() const {
    std::string s;
    s.reserve(length_);
    for (std::size_t i = 0; i < length_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf2Vector(cols)) {}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& v) const {
    ensure(v.size() == cols_, "matrix/vector size mismatch");
    Gf2Vector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) out.set(r, rows_[r].dot(v));
    return out;
}

std::size_t Gf2Matrix::rank() const { return Gf2Subspace::span(cols_, rows_).dim(); }

Gf2Subspace Gf2Subspace::full(std::size_t ambient_dim) {
    Gf2Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.insert(Gf2Vector::from_indices(ambient_dim, {i}));
    return s;
}

Gf2Subspace Gf2Subspace::span(std::size_t ambient_dim, const std::vector<Gf2Vector>& generators) {
    Gf2Subspace s(ambient_dim);
    for (const auto& g : generators) s.insert(g);
    return s;
}

Gf2Vector Gf2Subspace::reduce(Gf2Vector v) const {
    ensure(v.size() == ambient_, "subspace ambient mismatch");
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (v.get(pivots_[k])) v ^= basis_[k];
    return v;
}

bool Gf2Subspace::contains(const Gf2Vector& v) const { return reduce(v).is_zero(); }

bool Gf2Subspace::insert(Gf2Vector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    std::size_t p = v.lowest();
    // Keep the echelon form fully reduced so every pivot column is a unit column.
    for (auto& b : basis_)
        if (b.get(p)) b ^= v;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(v));
    return true;
}

namespace {

// Row-reduces an augmented system in place; returns pivot columns.
// Each row is (coefficients, rhs). Rows that become all-zero are dropped.
std::vector<std::size_t> eliminate(std::vector<Gf2Constraint>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].coefficients.get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k != r && rows[k].coefficients.get(c)) {
                rows[k].coefficients ^= rows[r].coefficients;
                rows[k].rhs = rows[k].rhs != rows[r].rhs;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Gf2Subspace kernel(const Gf2Matrix& m) {
    std::vector<Gf2Constraint> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back({m.row(r), false});
    SolutionFlat flat = solve_affine(rows, m.cols());
    ensure(flat.kind == SolutionFlat::Kind::Linear, "homogeneous system must be linear");
    ensure(flat.dim() + m.rank() == m.cols(), "rank-nullity violated");
    return flat.directions;
}

bool SolutionFlat::contains(const Gf2Vector& v) const {
    if (kind == Kind::Empty) return false;
    return directions.contains(v ^ origin);
}

SolutionFlat solve_affine(const std::vector<Gf2Constraint>& constraints, std::size_t ambient_dim) {
    std::vector<Gf2Constraint> rows = constraints;
    for (const auto& c : rows)
        ensure(c.coefficients.size() == ambient_dim, "constraint ambient mismatch");
    std::vector<std::size_t> pivots = eliminate(rows, ambient_dim);

    SolutionFlat out;
    for (std::size_t k = pivots.size(); k < rows.size(); ++k)
        if (rows[k].rhs) return out;  // 0 = 1

    out.origin = Gf2Vector(ambient_dim);
    for (std::size_t k = 0; k < pivots.size(); ++k) out.origin.set(pivots[k], rows[k].rhs);

    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    out.directions = Gf2Subspace(ambient_dim);
    for (std::size_t f = 0; f < ambient_dim; ++f) {
        if (is_pivot[f]) continue;
        Gf2Vector v(ambient_dim);
        v.set(f);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (rows[k].coefficients.get(f)) v.set(pivots[k]);
        out.directions.insert(std::move(v));
    }
    out.kind = out.origin.is_zero() ? SolutionFlat::Kind::Linear : SolutionFlat::Kind::Affine;
    return out;
}

PhaseLine::PhaseLine(Z2Pair rep, Z2Pair dir) : dir_(dir) {
    if (dir.zero()) throw InternalError("phase line direction must be nonzero");
    lo_ = std::min(rep, rep + dir);
}

std::array<Z2Pair, 2> PhaseLine::elements() const { return {lo_, lo_ + dir_}; }

std::string PhaseLine::to_string() const {
    auto e = elements();
    return "{" + tropreal::to_string(e[0]) + "," + tropreal::to_string(e[1]) + "}";
}

}  // namespace tropreal
