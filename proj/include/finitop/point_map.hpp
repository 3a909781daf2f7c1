#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "space.hpp"

namespace finitop {

/// A total function between two finite spaces, stored as target indices.
class PointMap {
public:
    PointMap() = default;

    PointMap(FinSpace dom, FinSpace cod, std::vector<std::uint8_t> targets)
        : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(targets))
    {
        if (map_.size() != dom_.size())
            throw Error(ErrorCode::InvalidArgument, "map must assign exactly one image to every domain point");
        for (auto t : map_)
            if (t >= cod_.size())
                throw Error(ErrorCode::InvalidArgument, "image index outside the codomain");
    }

    static PointMap identity(const FinSpace& s)
    {
        std::vector<std::uint8_t> m(s.size());
        for (unsigned i = 0; i < s.size(); ++i)
            m[i] = static_cast<std::uint8_t>(i);
        return PointMap(s, s, std::move(m));
    }

    static PointMap constant(const FinSpace& dom, const FinSpace& cod, unsigned target)
    {
        return PointMap(dom, cod, std::vector<std::uint8_t>(dom.size(), static_cast<std::uint8_t>(target)));
    }

    const FinSpace& dom() const noexcept { return dom_; }
    const FinSpace& cod() const noexcept { return cod_; }
    unsigned operator()(unsigned x) const { return map_.at(x); }
    std::span<const std::uint8_t> targets() const noexcept { return map_; }

    bool injective() const
    {
        SubsetMask seen;
        for (auto t : map_) {
            if (seen.contains(t))
                return false;
            seen = seen.with(t);
        }
        return true;
    }

    bool surjective() const { return image_of_all() == cod_.full(); }

    SubsetMask image_of_all() const
    {
        SubsetMask out;
        for (auto t : map_)
            out = out.with(t);
        return out;
    }

private:
    FinSpace dom_;
    FinSpace cod_;
    std::vector<std::uint8_t> map_;
};

inline SubsetMask image(const PointMap& f, SubsetMask a)
{
    SubsetMask out;
    a.for_each([&](unsigned x) { out = out.with(f(x)); });
    return out;
}

inline SubsetMask preimage(const PointMap& f, SubsetMask b)
{
    SubsetMask out;
    for (unsigned x = 0; x < f.dom().size(); ++x)
        if (b.contains(f(x)))
            out = out.with(x);
    return out;
}

/// A finite product space together with its row-major point encoding.
class ProductSpace {
public:
    ProductSpace() = default;

    ProductSpace(FinSpace space, std::vector<FinSpace> factors) : space_(std::move(space)), factors_(std::move(factors)) {}

    const FinSpace& space() const noexcept { return space_; }
    const std::vector<FinSpace>& factors() const noexcept { return factors_; }

    unsigned encode(std::span<const unsigned> coords) const
    {
        unsigned p = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            p = p * factors_[i].size() + coords[i];
        return p;
    }

    std::vector<unsigned> decode(unsigned p) const
    {
        std::vector<unsigned> coords(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            coords[i] = p % factors_[i].size();
            p /= factors_[i].size();
        }
        return coords;
    }

    /// The box ∏ parts[i] as a mask of the product.
    SubsetMask box(std::span<const SubsetMask> parts) const
    {
        SubsetMask out;
        for (unsigned p = 0; p < space_.size(); ++p) {
            const auto c = decode(p);
            bool in = true;
            for (std::size_t i = 0; i < c.size() && in; ++i)
                in = parts[i].contains(c[i]);
            if (in)
                out = out.with(p);
        }
        return out;
    }

private:
    FinSpace space_;
    std::vector<FinSpace> factors_;
};

/// Finite product topology: all unions of boxes ∏U_i with every U_i open.
///
/// Every box containing a point contains the box of the factors' minimal
/// neighbourhoods, so the union closure is the set of unions of those boxes.
inline ProductSpace product(const std::vector<FinSpace>& spaces)
{
    if (spaces.empty())
        throw Error(ErrorCode::InvalidArgument, "product of an empty list");
    std::uint64_t total = 1;
    for (const auto& s : spaces) {
        total *= s.size();
        if (total > mask_ceiling())
            throw Error(ErrorCode::WidthOverflow,
                        "product has more than " + std::to_string(mask_ceiling()) + " points");
    }
    const auto n = static_cast<unsigned>(total);

    std::vector<std::string> labels(n);
    std::vector<SubsetMask> nbhd(n);
    ProductSpace shape(FinSpace::indiscrete(n), spaces);
    std::vector<SubsetMask> parts(spaces.size());
    for (unsigned p = 0; p < n; ++p) {
        const auto c = shape.decode(p);
        std::string label = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            parts[i] = spaces[i].neighbourhood(c[i]);
            label += (i ? "," : "") + spaces[i].label(c[i]);
        }
        labels[p] = label + ")";
        nbhd[p] = shape.box(parts);
    }
    return ProductSpace(FinSpace::from_neighbourhoods(n, nbhd, std::move(labels)), spaces);
}

/// The graph function x ↦ (x, f(x)) into dom × cod.
inline PointMap graph_map(const PointMap& f, const ProductSpace& dom_times_cod)
{
    std::vector<std::uint8_t> g(f.dom().size());
    for (unsigned x = 0; x < f.dom().size(); ++x) {
        const unsigned c[2] = {x, f(x)};
        g[x] = static_cast<std::uint8_t>(dom_times_cod.encode(c));
    }
    return PointMap(f.dom(), dom_times_cod.space(), std::move(g));
}

inline PointMap graph_map(const PointMap& f) { return graph_map(f, product({f.dom(), f.cod()})); }

/// The product function {x_i} ↦ {f_i(x_i)} between two product spaces.
inline PointMap product_map(const std::vector<PointMap>& parts, const ProductSpace& dom, const ProductSpace& cod)
{
    if (parts.size() != dom.factors().size() || parts.size() != cod.factors().size())
        throw Error(ErrorCode::SpaceMismatch, "factor count mismatch");
    std::vector<std::uint8_t> m(dom.space().size());
    std::vector<unsigned> out(parts.size());
    for (unsigned p = 0; p < dom.space().size(); ++p) {
        const auto c = dom.decode(p);
        for (std::size_t i = 0; i < parts.size(); ++i)
            out[i] = parts[i](c[i]);
        m[p] = static_cast<std::uint8_t>(cod.encode(out));
    }
    return PointMap(dom.space(), cod.space(), std::move(m));
}

}  // namespace finitop
