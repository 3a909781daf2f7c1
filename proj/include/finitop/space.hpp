#pragma once

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "subset_mask.hpp"

namespace finitop {

inline constexpr unsigned kDefaultMaskCeiling = 16;
inline constexpr unsigned kHardMaskCeiling = 24;

/// Largest accepted point count. FINITOP_MASK_CEILING may raise it up to 24.
inline unsigned mask_ceiling()
{
    static const unsigned ceiling = [] {
        if (const char* env = std::getenv("FINITOP_MASK_CEILING")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1)
                return static_cast<unsigned>(std::min<long>(v, kHardMaskCeiling));
        }
        return kDefaultMaskCeiling;
    }();
    return ceiling;
}

/// Duplicate-free family of subsets kept in canonical (popcount, value) order.
class SetFamily {
public:
    SetFamily() = default;

    explicit SetFamily(std::vector<SubsetMask> members) : members_(std::move(members))
    {
        std::sort(members_.begin(), members_.end(), CanonicalOrder{});
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    bool contains(SubsetMask m) const
    {
        return std::binary_search(members_.begin(), members_.end(), m, CanonicalOrder{});
    }

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<SubsetMask>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    SubsetMask operator[](std::size_t i) const { return members_[i]; }

    bool operator==(const SetFamily&) const = default;

    /// Members containing `point`, in canonical order.
    SetFamily containing(unsigned point) const
    {
        std::vector<SubsetMask> out;
        for (auto m : members_)
            if (m.contains(point))
                out.push_back(m);
        SetFamily f;
        f.members_ = std::move(out);
        return f;
    }

private:
    std::vector<SubsetMask> members_;
};

struct OperatorTables;

namespace detail {

struct SpaceData {
    unsigned n = 0;
    SetFamily opens;
    std::vector<SubsetMask> nbhd;  // minimal open neighbourhood of each point
    std::vector<std::string> labels;

    mutable std::once_flag tables_once;
    mutable std::shared_ptr<const OperatorTables> tables;
};

inline std::string default_label(unsigned i)
{
    if (i < 26)
        return std::string(1, static_cast<char>('a' + i));
    return "p" + std::to_string(i);
}

/// Minimal neighbourhoods of the topology generated by `family` plus X.
inline std::vector<SubsetMask> generated_neighbourhoods(unsigned n, const std::vector<SubsetMask>& family)
{
    const auto full = SubsetMask::full(n);
    std::vector<SubsetMask> nbhd(n, full);
    for (auto m : family)
        m.for_each([&](unsigned x) { nbhd[x] &= m; });
    return nbhd;
}

/// All sets A with nbhd[x] ⊆ A for every x ∈ A, i.e. all unions of neighbourhoods.
inline std::vector<SubsetMask> unions_of_neighbourhoods(unsigned n, const std::vector<SubsetMask>& nbhd)
{
    std::vector<SubsetMask> out;
    for_each_subset(n, [&](SubsetMask a) {
        bool ok = true;
        for (auto b = a.bits(); b != 0 && ok; b &= b - 1)
            ok = nbhd[static_cast<unsigned>(std::countr_zero(b))].subset_of(a);
        if (ok)
            out.push_back(a);
    });
    return out;
}

}  // namespace detail

/// A finite topological space: n points and its full open-set family.
///
/// Immutable handle with value semantics; copies share the same data and
/// operator cache.
class FinSpace {
public:
    FinSpace() = default;

    unsigned size() const noexcept { return data_->n; }
    SubsetMask full() const noexcept { return SubsetMask::full(data_->n); }
    const SetFamily& opens() const noexcept { return data_->opens; }
    const std::vector<std::string>& labels() const noexcept { return data_->labels; }
    const std::string& label(unsigned i) const { return data_->labels.at(i); }

    /// Smallest open set containing `point`.
    SubsetMask neighbourhood(unsigned point) const { return data_->nbhd.at(point); }
    const std::vector<SubsetMask>& neighbourhoods() const noexcept { return data_->nbhd; }

    bool is_open(SubsetMask a) const { return data_->opens.contains(a); }
    bool fits(SubsetMask a) const noexcept { return a.subset_of(full()); }

    bool same_as(const FinSpace& other) const noexcept { return data_ == other.data_; }
    bool operator==(const FinSpace& other) const
    {
        return data_ == other.data_ || (size() == other.size() && opens() == other.opens());
    }

    /// Builds a space from an open family already known to be a topology.
    static FinSpace from_topology(unsigned n, std::vector<SubsetMask> opens, std::vector<std::string> labels = {})
    {
        if (n == 0 || n > mask_ceiling())
            throw Error(ErrorCode::WidthOverflow,
                        "point count " + std::to_string(n) + " outside [1, " + std::to_string(mask_ceiling()) + "]");
        auto data = std::make_shared<detail::SpaceData>();
        data->n = n;
        data->opens = SetFamily(std::move(opens));
        data->nbhd = detail::generated_neighbourhoods(n, data->opens.members());
        if (labels.empty())
            for (unsigned i = 0; i < n; ++i)
                labels.push_back(detail::default_label(i));
        if (labels.size() != n)
            throw Error(ErrorCode::InvalidArgument, "label count does not match point count");
        data->labels = std::move(labels);
        FinSpace s;
        s.data_ = std::move(data);
        return s;
    }

    /// Builds the Alexandrov topology whose minimal neighbourhoods are `nbhd`.
    static FinSpace from_neighbourhoods(unsigned n, const std::vector<SubsetMask>& nbhd, std::vector<std::string> labels = {})
    {
        if (n == 0 || n > mask_ceiling())
            throw Error(ErrorCode::WidthOverflow, "point count " + std::to_string(n) + " exceeds ceiling");
        return from_topology(n, detail::unions_of_neighbourhoods(n, nbhd), std::move(labels));
    }

    static FinSpace discrete(unsigned n)
    {
        std::vector<SubsetMask> nb;
        for (unsigned i = 0; i < n; ++i)
            nb.push_back(SubsetMask::singleton(i));
        return from_neighbourhoods(n, nb);
    }

    static FinSpace indiscrete(unsigned n) { return from_topology(n, {SubsetMask(), SubsetMask::full(n)}); }

    /// Cache slot used by the operators module.
    const detail::SpaceData& data() const noexcept { return *data_; }

private:
    std::shared_ptr<const detail::SpaceData> data_;
};

/// Renders a subset as "{a,b}" using `labels` (index names when absent).
inline std::string describe(const std::vector<std::string>& labels, SubsetMask a)
{
    std::string out = "{";
    bool first = true;
    a.for_each([&](unsigned x) {
        if (!first)
            out += ',';
        first = false;
        out += x < labels.size() ? labels[x] : detail::default_label(x);
    });
    return out + "}";
}

/// A strict-mode rejection carrying the offending pair of opens.
class ClosureError : public Error {
public:
    ClosureError(ErrorCode code, SubsetMask first, SubsetMask second, const std::string& what)
        : Error(code, what), first_(first), second_(second)
    {
    }

    SubsetMask first() const noexcept { return first_; }
    SubsetMask second() const noexcept { return second_; }

private:
    SubsetMask first_;
    SubsetMask second_;
};

/// Outcome of validate_topology in non-strict mode.
struct ValidatedSpace {
    FinSpace space;
    std::vector<SubsetMask> added;  // opens not present in the input, canonical order
};

/// Validates an open family on `n` points.
///
/// Strict mode rejects families that are not already closed under pairwise
/// union and intersection; otherwise the generated topology is returned
/// together with the sets that had to be added.
inline ValidatedSpace validate_topology(unsigned n, const std::vector<SubsetMask>& family, bool strict,
                                        std::vector<std::string> labels = {})
{
    if (n == 0 || n > mask_ceiling())
        throw Error(ErrorCode::WidthOverflow,
                    "point count " + std::to_string(n) + " outside [1, " + std::to_string(mask_ceiling()) + "]");
    const auto full = SubsetMask::full(n);
    for (auto m : family)
        if (!m.subset_of(full))
            throw Error(ErrorCode::WidthOverflow, "subset has points beyond n = " + std::to_string(n));

    const SetFamily input(family);
    const auto nbhd = detail::generated_neighbourhoods(n, input.members());
    auto generated = detail::unions_of_neighbourhoods(n, nbhd);

    if (strict) {
        if (!input.contains(SubsetMask()) || !input.contains(full))
            throw Error(ErrorCode::MissingEmptyOrFull, "the open family must contain the empty set and X");
        if (generated.size() != input.size()) {
            const auto& m = input.members();
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = i + 1; j < m.size(); ++j)
                    if (!input.contains(m[i] | m[j]))
                        throw ClosureError(ErrorCode::NotClosedUnderUnion, m[i], m[j],
                                           "union of " + describe(labels, m[i]) + " and " + describe(labels, m[j]) +
                                               " is missing");
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = i + 1; j < m.size(); ++j)
                    if (!input.contains(m[i] & m[j]))
                        throw ClosureError(ErrorCode::NotClosedUnderIntersection, m[i], m[j],
                                           "intersection of " + describe(labels, m[i]) + " and " +
                                               describe(labels, m[j]) + " is missing");
        }
    }

    ValidatedSpace out;
    for (auto g : generated)
        if (!input.contains(g))
            out.added.push_back(g);
    std::sort(out.added.begin(), out.added.end(), CanonicalOrder{});
    out.space = FinSpace::from_topology(n, std::move(generated), std::move(labels));
    return out;
}

/// Union of every open set contained in `a`.
inline SubsetMask interior(const FinSpace& s, SubsetMask a)
{
    SubsetMask out;
    for (unsigned x = 0; x < s.size(); ++x)
        if (a.contains(x) && s.neighbourhood(x).subset_of(a))
            out = out.with(x);
    return out;
}

/// Smallest closed superset of `a`.
inline SubsetMask closure(const FinSpace& s, SubsetMask a)
{
    SubsetMask out;
    for (unsigned x = 0; x < s.size(); ++x)
        if (s.neighbourhood(x).meets(a))
            out = out.with(x);
    return out;
}

/// The specialization preorder: x ≤ y iff every open set containing x contains y.
inline bool specializes(const FinSpace& s, unsigned x, unsigned y) { return s.neighbourhood(x).contains(y); }

}  // namespace finitop
