// Representations of a finite poset: a vector space per element and a
// compatible linear map along every relation x <= y (the "generization"
// direction). This is the abelian category the whole engine works in; it is
// equivalent to sheaves on the poset's Alexandrov space, so injective and
// projective objects, envelopes and resolutions are all concrete matrices.
//
// Conventions used throughout:
//   - structure map for x <= y has shape dim(y) x dim(x), acting on columns;
//   - I(x) is the injective with one-dimensional stalks on {y <= x};
//   - P(x) is the projective with one-dimensional stalks on {y >= x}.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "stag/linsys.hpp"
#include "stag/matrix.hpp"
#include "stag/poset.hpp"

namespace stag {

class PosetRep {
public:
    PosetRep(PosetPtr poset, Field field)
        : poset_(std::move(poset)), field_(field), dims_(poset_->size(), 0) {
        init_maps();
    }

    /// Full-table constructor: maps[x][y] must be set for every x <= y.
    PosetRep(PosetPtr poset, Field field, std::vector<std::size_t> dims,
             std::vector<std::vector<Matrix>> maps)
        : poset_(std::move(poset)), field_(field), dims_(std::move(dims)),
          maps_(std::move(maps)) {
        validate();
    }

    /// Build from maps on covering relations only; composites are filled in
    /// and checked for path independence.
    static PosetRep from_covers(
        PosetPtr poset, Field field, std::vector<std::size_t> dims,
        const std::vector<std::tuple<std::string, std::string, Matrix>>& cover_maps) {
        const std::size_t n = poset->size();
        std::vector<std::vector<std::optional<Matrix>>> t(
            n, std::vector<std::optional<Matrix>>(n));
        for (std::size_t x = 0; x < n; ++x)
            t[x][x] = Matrix::identity(field, dims[x]);
        for (const auto& [a, b, m] : cover_maps) {
            std::size_t x = poset->index_of(a), y = poset->index_of(b);
            if (!poset->leq(x, y) || x == y)
                throw std::invalid_argument("PosetRep: map along a non-relation");
            t[x][y] = m;
        }
        for (const auto& [x, y] : poset->covers())
            if (!t[x][y])
                throw std::invalid_argument("PosetRep: missing covering map " +
                                            poset->name(x) + " -> " + poset->name(y));
        // close under composition; path independence is checked by validate()
        for (std::size_t pass = 0; pass < n; ++pass)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    if (!poset->leq(x, y) || t[x][y]) continue;
                    for (const auto& [z, w] : poset->covers())
                        if (w == y && poset->leq(x, z) && t[x][z]) {
                            t[x][y] = *t[z][w] * *t[x][z];
                            break;
                        }
                }
        std::vector<std::vector<Matrix>> full(n, std::vector<Matrix>(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (poset->leq(x, y)) full[x][y] = *t[x][y];
        return PosetRep(std::move(poset), field, std::move(dims), std::move(full));
    }

    const PosetPtr& poset() const { return poset_; }
    const Field& field() const { return field_; }
    std::size_t dim(std::size_t x) const { return dims_[x]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto d : dims_) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    /// Structure map along x <= y.
    const Matrix& map(std::size_t x, std::size_t y) const {
        if (!poset_->leq(x, y))
            throw std::invalid_argument("PosetRep::map: not a relation");
        return maps_[x][y];
    }

    bool operator==(const PosetRep& o) const {
        if (!(poset_->same_as(*o.poset_)) || field_ != o.field_ || dims_ != o.dims_)
            return false;
        for (std::size_t x = 0; x < poset_->size(); ++x)
            for (std::size_t y = 0; y < poset_->size(); ++y)
                if (poset_->leq(x, y) && maps_[x][y] != o.maps_[x][y]) return false;
        return true;
    }
    bool operator!=(const PosetRep& o) const { return !(*this == o); }

    static PosetRep zero(PosetPtr poset, Field field) {
        return PosetRep(std::move(poset), field);
    }

    /// Simple object: one-dimensional stalk at x, zero elsewhere.
    static PosetRep simple(PosetPtr poset, Field field, std::size_t x) {
        PosetRep r(poset, field);
        r.dims_[x] = 1;
        r.init_maps();
        return r;
    }

    /// Injective hull of simple(x): one-dimensional stalks on {y <= x},
    /// identity structure maps.
    static PosetRep injective(PosetPtr poset, Field field, std::size_t x) {
        PosetRep r(poset, field);
        for (std::size_t y = 0; y < poset->size(); ++y)
            if (poset->leq(y, x)) r.dims_[y] = 1;
        r.init_maps();
        return r;
    }

    /// Projective cover of simple(x): one-dimensional stalks on {y >= x}.
    static PosetRep projective(PosetPtr poset, Field field, std::size_t x) {
        PosetRep r(poset, field);
        for (std::size_t y = 0; y < poset->size(); ++y)
            if (poset->leq(x, y)) r.dims_[y] = 1;
        r.init_maps();
        return r;
    }

    /// Constant representation: one-dimensional everywhere, identity maps.
    static PosetRep constant(PosetPtr poset, Field field) {
        PosetRep r(poset, field);
        for (auto& d : r.dims_) d = 1;
        r.init_maps();
        return r;
    }

    static PosetRep direct_sum(const PosetRep& a, const PosetRep& b) {
        const std::size_t n = a.poset_->size();
        std::vector<std::size_t> dims(n);
        std::vector<std::vector<Matrix>> maps(n, std::vector<Matrix>(n));
        for (std::size_t x = 0; x < n; ++x) dims[x] = a.dims_[x] + b.dims_[x];
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (a.poset_->leq(x, y))
                    maps[x][y] = Matrix::direct_sum(a.maps_[x][y], b.maps_[x][y]);
        return PosetRep(a.poset_, a.field_, std::move(dims), std::move(maps));
    }

    /// Stalkwise tensor product with Kronecker structure maps.
    static PosetRep tensor(const PosetRep& a, const PosetRep& b) {
        const std::size_t n = a.poset_->size();
        std::vector<std::size_t> dims(n);
        std::vector<std::vector<Matrix>> maps(n, std::vector<Matrix>(n));
        for (std::size_t x = 0; x < n; ++x) dims[x] = a.dims_[x] * b.dims_[x];
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (a.poset_->leq(x, y))
                    maps[x][y] = Matrix::kronecker(a.maps_[x][y], b.maps_[x][y]);
        return PosetRep(a.poset_, a.field_, std::move(dims), std::move(maps));
    }

    /// Stalkwise linear dual, a representation of the opposite poset.
    PosetRep dual() const {
        PosetPtr op = opposite_poset(*poset_);
        const std::size_t n = poset_->size();
        std::vector<std::vector<Matrix>> maps(n, std::vector<Matrix>(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (op->leq(x, y)) maps[x][y] = maps_[y][x].transpose();
        return PosetRep(op, field_, dims_, std::move(maps));
    }

private:
    void init_maps() {
        const std::size_t n = poset_->size();
        maps_.assign(n, std::vector<Matrix>(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (poset_->leq(x, y)) {
                    maps_[x][y] = (x == y) ? Matrix::identity(field_, dims_[x])
                                           : id_like(x, y);
                }
    }
    // identity on min(dim x, dim y) coordinates; correct for the canned
    // objects above where all stalks are 0- or 1-dimensional
    Matrix id_like(std::size_t x, std::size_t y) const {
        Matrix m(field_, dims_[y], dims_[x]);
        for (std::size_t i = 0; i < std::min(dims_[x], dims_[y]); ++i)
            m.at(i, i) = field_.one();
        return m;
    }

    void validate() const {
        const std::size_t n = poset_->size();
        if (dims_.size() != n || maps_.size() != n)
            throw std::invalid_argument("PosetRep: size mismatch");
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (!poset_->leq(x, y)) continue;
                const Matrix& m = maps_[x][y];
                if (m.rows() != dims_[y] || m.cols() != dims_[x] || m.field() != field_)
                    throw std::invalid_argument("PosetRep: bad map shape");
                if (x == y && m != Matrix::identity(field_, dims_[x]))
                    throw std::invalid_argument("PosetRep: identity expected");
            }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (poset_->leq(x, y) && poset_->leq(y, z) &&
                        maps_[y][z] * maps_[x][y] != maps_[x][z])
                        throw std::invalid_argument("PosetRep: not functorial");
    }

    PosetPtr poset_;
    Field field_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Matrix>> maps_;  // maps_[x][y] for x <= y
};

}  // namespace stag
