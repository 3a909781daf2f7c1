#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "space.hpp"

namespace finitop {

enum class SetKind : unsigned {
    Open,
    Closed,
    Clopen,
    RegularOpen,
    RegularClosed,
    DeltaOpen,
    DeltaClosed,
    ThetaOpen,
    ThetaClosed,
    Semiopen,
    Semiclosed,
    Preopen,
    Preclosed,
    BOpen,
    BClosed,
    EOpen,
    EClosed,
    AOpen,
    AClosed,
    ERegular,
    BRegular,
    EThetaOpen,
    EThetaClosed,
};

inline constexpr std::size_t kKindCount = 23;

inline constexpr std::array<SetKind, kKindCount> kAllKinds = {
    SetKind::Open,        SetKind::Closed,      SetKind::Clopen,      SetKind::RegularOpen, SetKind::RegularClosed,
    SetKind::DeltaOpen,   SetKind::DeltaClosed, SetKind::ThetaOpen,   SetKind::ThetaClosed, SetKind::Semiopen,
    SetKind::Semiclosed,  SetKind::Preopen,     SetKind::Preclosed,   SetKind::BOpen,       SetKind::BClosed,
    SetKind::EOpen,       SetKind::EClosed,     SetKind::AOpen,       SetKind::AClosed,     SetKind::ERegular,
    SetKind::BRegular,    SetKind::EThetaOpen,  SetKind::EThetaClosed,
};

inline constexpr std::array<std::string_view, kKindCount> kKindNames = {
    "open",        "closed",      "clopen",      "regular-open", "regular-closed", "delta-open", "delta-closed",
    "theta-open",  "theta-closed", "semiopen",   "semiclosed",   "preopen",        "preclosed",  "b-open",
    "b-closed",    "e-open",      "e-closed",    "a-open",       "a-closed",       "e-regular",  "b-regular",
    "e-theta-open", "e-theta-closed",
};

constexpr std::size_t index_of(SetKind k) noexcept { return static_cast<std::size_t>(k); }
constexpr std::uint32_t flag_of(SetKind k) noexcept { return std::uint32_t{1} << index_of(k); }

inline std::string_view to_string(SetKind k) { return kKindNames[index_of(k)]; }

inline SetKind parse_set_kind(std::string_view name)
{
    for (std::size_t i = 0; i < kKindCount; ++i)
        if (kKindNames[i] == name)
            return kAllKinds[i];
    throw Error(ErrorCode::UnknownKind, "unknown set kind '" + std::string(name) + "'");
}

/// The complement image of a kind: open ↔ closed; clopen and the regular
/// classes map to themselves.
constexpr SetKind dual(SetKind k) noexcept
{
    switch (k) {
    case SetKind::Open: return SetKind::Closed;
    case SetKind::Closed: return SetKind::Open;
    case SetKind::RegularOpen: return SetKind::RegularClosed;
    case SetKind::RegularClosed: return SetKind::RegularOpen;
    case SetKind::DeltaOpen: return SetKind::DeltaClosed;
    case SetKind::DeltaClosed: return SetKind::DeltaOpen;
    case SetKind::ThetaOpen: return SetKind::ThetaClosed;
    case SetKind::ThetaClosed: return SetKind::ThetaOpen;
    case SetKind::Semiopen: return SetKind::Semiclosed;
    case SetKind::Semiclosed: return SetKind::Semiopen;
    case SetKind::Preopen: return SetKind::Preclosed;
    case SetKind::Preclosed: return SetKind::Preopen;
    case SetKind::BOpen: return SetKind::BClosed;
    case SetKind::BClosed: return SetKind::BOpen;
    case SetKind::EOpen: return SetKind::EClosed;
    case SetKind::EClosed: return SetKind::EOpen;
    case SetKind::AOpen: return SetKind::AClosed;
    case SetKind::AClosed: return SetKind::AOpen;
    case SetKind::EThetaOpen: return SetKind::EThetaClosed;
    case SetKind::EThetaClosed: return SetKind::EThetaOpen;
    case SetKind::Clopen:
    case SetKind::ERegular:
    case SetKind::BRegular: return k;
    }
    return k;
}

constexpr bool is_closed_side(SetKind k) noexcept
{
    switch (k) {
    case SetKind::Closed:
    case SetKind::RegularClosed:
    case SetKind::DeltaClosed:
    case SetKind::ThetaClosed:
    case SetKind::Semiclosed:
    case SetKind::Preclosed:
    case SetKind::BClosed:
    case SetKind::EClosed:
    case SetKind::AClosed:
    case SetKind::EThetaClosed: return true;
    default: return false;
    }
}

/// Kind whose members are the "closed" sets for kernel closures of `k`.
constexpr SetKind closed_side(SetKind k) noexcept { return is_closed_side(k) ? k : (dual(k) == k ? k : dual(k)); }
constexpr SetKind open_side(SetKind k) noexcept { return is_closed_side(k) ? dual(k) : k; }

/// Kinds that carry a strong-θ continuity notion: U in the kind, closed by its kernel closure.
inline constexpr std::array<SetKind, 5> kStrongThetaKinds = {SetKind::Open, SetKind::Semiopen, SetKind::Preopen,
                                                             SetKind::BOpen, SetKind::EOpen};

/// Per-space lookup tables. Entry A of each table is the operator applied to
/// the subset with bit pattern A. Built once per space, then read-only.
struct OperatorTables {
    using word = SubsetMask::word_type;

    unsigned n = 0;
    word full = 0;
    std::vector<word> interior;
    std::vector<word> closure;
    std::vector<word> delta_interior;
    std::vector<word> delta_closure;
    std::vector<word> theta_interior;
    std::vector<word> theta_closure;
    std::vector<word> e_theta_interior;
    std::vector<word> e_theta_closure;
    std::vector<std::uint32_t> kinds;  // flag_of(kind) set when the subset belongs to the kind
    std::array<SetFamily, kKindCount> families;

    bool in(SetKind k, SubsetMask a) const noexcept { return (kinds[a.bits()] & flag_of(k)) != 0; }

    const std::vector<word>& kernel_closure(SetKind k) const
    {
        const auto i = index_of(closed_side(k));
        std::call_once(lazy_[i].closure_once, [&] { lazy_[i].closure = build_kernel_closure(closed_side(k)); });
        return lazy_[i].closure;
    }

    const std::vector<word>& kernel_interior(SetKind k) const
    {
        const auto i = index_of(open_side(k));
        std::call_once(lazy_[i].interior_once, [&] { lazy_[i].interior = build_kernel_interior(open_side(k)); });
        return lazy_[i].interior;
    }

    /// Entry W: union of all U in `k` whose kernel closure lies inside W.
    const std::vector<word>& strong_theta(SetKind k) const
    {
        const auto i = index_of(open_side(k));
        std::call_once(lazy_[i].strong_once, [&] {
            const auto& kcl = kernel_closure(k);
            std::vector<word> g(std::size_t{1} << n, 0);
            for (auto u : families[i])
                g[kcl[u.bits()]] |= u.bits();
            superset_or(g);
            lazy_[i].strong = std::move(g);
        });
        return lazy_[i].strong;
    }

    std::vector<word> build_kernel_closure(SetKind closed) const
    {
        const std::size_t size = std::size_t{1} << n;
        std::vector<word> m(size);
        for (std::size_t a = size; a-- > 0;) {
            word acc = in(closed, SubsetMask(static_cast<word>(a))) ? static_cast<word>(a) : full;
            for (unsigned i = 0; i < n; ++i)
                if (!((a >> i) & 1u))
                    acc &= m[a | (std::size_t{1} << i)];
            m[a] = acc;
        }
        return m;
    }

    std::vector<word> build_kernel_interior(SetKind open) const
    {
        const std::size_t size = std::size_t{1} << n;
        std::vector<word> g(size, 0);
        for (auto u : families[index_of(open)])
            g[u.bits()] = u.bits();
        superset_or(g);
        return g;
    }

    /// g[W] |= g[V] for every V ⊆ W.
    void superset_or(std::vector<word>& g) const
    {
        const std::size_t size = std::size_t{1} << n;
        for (unsigned i = 0; i < n; ++i) {
            const std::size_t bit = std::size_t{1} << i;
            for (std::size_t w = 0; w < size; ++w)
                if (w & bit)
                    g[w] |= g[w ^ bit];
        }
    }

    struct Lazy {
        std::once_flag closure_once, interior_once, strong_once;
        std::vector<word> closure, interior, strong;
    };
    mutable std::array<Lazy, kKindCount> lazy_;
};

namespace detail {

inline std::shared_ptr<const OperatorTables> build_tables(const FinSpace& s)
{
    using word = OperatorTables::word;
    auto t = std::make_shared<OperatorTables>();
    const unsigned n = s.size();
    const std::size_t size = std::size_t{1} << n;
    t->n = n;
    t->full = s.full().bits();

    std::vector<word> nb(n), cl_nb(n), rc_nb(n);
    for (unsigned x = 0; x < n; ++x)
        nb[x] = s.neighbourhood(x).bits();
    auto cl_of = [&](word a) {
        word out = 0;
        for (unsigned x = 0; x < n; ++x)
            if (nb[x] & a)
                out |= word{1} << x;
        return out;
    };
    auto int_of = [&](word a) {
        word out = 0;
        for (unsigned x = 0; x < n; ++x)
            if ((nb[x] & ~a) == 0)
                out |= word{1} << x;
        return out;
    };
    for (unsigned x = 0; x < n; ++x) {
        cl_nb[x] = cl_of(nb[x]);
        rc_nb[x] = int_of(cl_nb[x]);
    }

    // Every open set containing x contains nb[x], and int(cl(·)) and cl(·) are
    // monotone, so the quantifiers over open neighbourhoods reduce to nb[x].
    t->interior.resize(size);
    t->closure.resize(size);
    t->delta_interior.resize(size);
    t->delta_closure.resize(size);
    t->theta_interior.resize(size);
    t->theta_closure.resize(size);
    for (std::size_t a = 0; a < size; ++a) {
        word in = 0, cl = 0, di = 0, dc = 0, ti = 0, tc = 0;
        const auto A = static_cast<word>(a);
        for (unsigned x = 0; x < n; ++x) {
            const word bit = word{1} << x;
            if ((nb[x] & ~A) == 0) in |= bit;
            if (nb[x] & A) cl |= bit;
            if ((rc_nb[x] & ~A) == 0) di |= bit;
            if (rc_nb[x] & A) dc |= bit;
            if ((cl_nb[x] & ~A) == 0) ti |= bit;
            if (cl_nb[x] & A) tc |= bit;
        }
        t->interior[a] = in;
        t->closure[a] = cl;
        t->delta_interior[a] = di;
        t->delta_closure[a] = dc;
        t->theta_interior[a] = ti;
        t->theta_closure[a] = tc;
    }

    const word full = t->full;
    auto has = [](word sub, word sup) { return (sub & ~sup) == 0; };
    t->kinds.assign(size, 0);
    for (std::size_t a = 0; a < size; ++a) {
        const auto A = static_cast<word>(a);
        const auto& I = t->interior;
        const auto& C = t->closure;
        std::uint32_t f = 0;
        if (I[A] == A) f |= flag_of(SetKind::Open);
        if (C[A] == A) f |= flag_of(SetKind::Closed);
        if (I[C[A]] == A) f |= flag_of(SetKind::RegularOpen);
        if (C[I[A]] == A) f |= flag_of(SetKind::RegularClosed);
        if (t->delta_closure[A] == A) f |= flag_of(SetKind::DeltaClosed);
        if (t->theta_closure[A] == A) f |= flag_of(SetKind::ThetaClosed);
        if (has(A, C[I[A]])) f |= flag_of(SetKind::Semiopen);
        if (has(A, I[C[A]])) f |= flag_of(SetKind::Preopen);
        if (has(A, C[I[A]] | I[C[A]])) f |= flag_of(SetKind::BOpen);
        if (has(A, C[t->delta_interior[A]] | I[t->delta_closure[A]])) f |= flag_of(SetKind::EOpen);
        if (has(A, I[C[t->delta_interior[A]]])) f |= flag_of(SetKind::AOpen);
        t->kinds[a] = f;
    }
    // Complement images complete each pair.
    constexpr std::array<std::pair<SetKind, SetKind>, 7> from_complement = {{
        {SetKind::DeltaClosed, SetKind::DeltaOpen},
        {SetKind::ThetaClosed, SetKind::ThetaOpen},
        {SetKind::Semiopen, SetKind::Semiclosed},
        {SetKind::Preopen, SetKind::Preclosed},
        {SetKind::BOpen, SetKind::BClosed},
        {SetKind::EOpen, SetKind::EClosed},
        {SetKind::AOpen, SetKind::AClosed},
    }};
    for (std::size_t a = 0; a < size; ++a) {
        const auto A = static_cast<word>(a);
        const std::uint32_t fc = t->kinds[~A & full];
        std::uint32_t f = t->kinds[a];
        for (auto [src, dst] : from_complement)
            if (fc & flag_of(src))
                f |= flag_of(dst);
        if ((f & flag_of(SetKind::Open)) && (f & flag_of(SetKind::Closed))) f |= flag_of(SetKind::Clopen);
        if ((f & flag_of(SetKind::EOpen)) && (f & flag_of(SetKind::EClosed))) f |= flag_of(SetKind::ERegular);
        if ((f & flag_of(SetKind::BOpen)) && (f & flag_of(SetKind::BClosed))) f |= flag_of(SetKind::BRegular);
        t->kinds[a] = f;
    }

    auto collect = [&](SetKind k) {
        std::vector<SubsetMask> m;
        for (std::size_t a = 0; a < size; ++a)
            if (t->kinds[a] & flag_of(k))
                m.push_back(SubsetMask(static_cast<word>(a)));
        t->families[index_of(k)] = SetFamily(std::move(m));
    };
    for (auto k : kAllKinds)
        if (k != SetKind::EThetaOpen && k != SetKind::EThetaClosed)
            collect(k);

    // e-int_θ(A): points with an e-regular neighbourhood inside A.
    t->e_theta_interior = t->build_kernel_interior(SetKind::ERegular);
    t->e_theta_closure.resize(size);
    for (std::size_t a = 0; a < size; ++a)
        t->e_theta_closure[a] = ~t->e_theta_interior[~static_cast<word>(a) & full] & full;
    for (std::size_t a = 0; a < size; ++a) {
        if (t->e_theta_interior[a] == a) t->kinds[a] |= flag_of(SetKind::EThetaOpen);
        if (t->e_theta_closure[a] == a) t->kinds[a] |= flag_of(SetKind::EThetaClosed);
    }
    collect(SetKind::EThetaOpen);
    collect(SetKind::EThetaClosed);
    return t;
}

}  // namespace detail

/// Cached tables of `s`; built on first use, thread-safe.
inline const OperatorTables& tables(const FinSpace& s)
{
    const auto& d = s.data();
    std::call_once(d.tables_once, [&] { d.tables = detail::build_tables(s); });
    return *d.tables;
}

namespace detail {
inline void require_fits(const FinSpace& s, SubsetMask a)
{
    if (!s.fits(a))
        throw Error(ErrorCode::WidthOverflow, "subset does not fit the space");
}
}  // namespace detail

inline SubsetMask delta_interior(const FinSpace& s, SubsetMask a)
{
    detail::require_fits(s, a);
    return SubsetMask(tables(s).delta_interior[a.bits()]);
}

inline SubsetMask delta_closure(const FinSpace& s, SubsetMask a)
{
    detail::require_fits(s, a);
    return SubsetMask(tables(s).delta_closure[a.bits()]);
}

inline SubsetMask theta_interior(const FinSpace& s, SubsetMask a)
{
    detail::require_fits(s, a);
    return SubsetMask(tables(s).theta_interior[a.bits()]);
}

inline SubsetMask theta_closure(const FinSpace& s, SubsetMask a)
{
    detail::require_fits(s, a);
    return SubsetMask(tables(s).theta_closure[a.bits()]);
}

inline const SetFamily& family(const FinSpace& s, SetKind kind) { return tables(s).families[index_of(kind)]; }

inline bool is_member(const FinSpace& s, SetKind kind, SubsetMask a)
{
    detail::require_fits(s, a);
    return tables(s).in(kind, a);
}

/// Intersection of all closed-side members of `kind` containing `a`:
/// scl, pcl, bcl, e-cl and a-cl for the generalized-open kinds.
inline SubsetMask kernel_closure(const FinSpace& s, SetKind kind, SubsetMask a)
{
    detail::require_fits(s, a);
    return SubsetMask(tables(s).kernel_closure(kind)[a.bits()]);
}

/// Union of all open-side members of `kind` contained in `a`.
inline SubsetMask kernel_interior(const FinSpace& s, SetKind kind, SubsetMask a)
{
    detail::require_fits(s, a);
    return SubsetMask(tables(s).kernel_interior(kind)[a.bits()]);
}

/// Points all of whose e-regular neighbourhoods meet `a`.
inline SubsetMask e_theta_closure(const FinSpace& s, SubsetMask a)
{
    detail::require_fits(s, a);
    return SubsetMask(tables(s).e_theta_closure[a.bits()]);
}

inline SubsetMask e_theta_interior(const FinSpace& s, SubsetMask a)
{
    detail::require_fits(s, a);
    return SubsetMask(tables(s).e_theta_interior[a.bits()]);
}

/// e-θ-cluster points: x such that e-cl(U) meets `a` for every e-open U ∋ x.
inline SubsetMask e_theta_closure_by_cluster(const FinSpace& s, SubsetMask a)
{
    detail::require_fits(s, a);
    const auto& t = tables(s);
    const auto& ecl = t.kernel_closure(SetKind::EOpen);
    SubsetMask out;
    for (unsigned x = 0; x < s.size(); ++x) {
        bool cluster = true;
        for (auto u : t.families[index_of(SetKind::EOpen)])
            if (u.contains(x) && !SubsetMask(ecl[u.bits()]).meets(a)) {
                cluster = false;
                break;
            }
        if (cluster)
            out = out.with(x);
    }
    return out;
}

}  // namespace finitop
