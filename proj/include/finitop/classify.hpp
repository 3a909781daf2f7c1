#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "operators.hpp"
#include "point_map.hpp"

namespace finitop {

enum class FnClass : unsigned {
    Continuous,
    EContinuous,
    StronglyThetaContinuous,
    StronglyThetaSemicontinuous,
    StronglyThetaPrecontinuous,
    StronglyThetaBContinuous,
    StronglyThetaEContinuous,
    WeaklyClopen,
    WeaklyBContinuous,
    WeaklyAContinuous,
    WeaklyEContinuous,
    WeaklyBRContinuous,
    BRContinuous,
    ERContinuous,
    WeaklyERContinuous,
    ContraEThetaContinuous,
};

inline constexpr std::size_t kClassCount = 16;

inline constexpr std::array<FnClass, kClassCount> kAllClasses = {
    FnClass::Continuous,
    FnClass::EContinuous,
    FnClass::StronglyThetaContinuous,
    FnClass::StronglyThetaSemicontinuous,
    FnClass::StronglyThetaPrecontinuous,
    FnClass::StronglyThetaBContinuous,
    FnClass::StronglyThetaEContinuous,
    FnClass::WeaklyClopen,
    FnClass::WeaklyBContinuous,
    FnClass::WeaklyAContinuous,
    FnClass::WeaklyEContinuous,
    FnClass::WeaklyBRContinuous,
    FnClass::BRContinuous,
    FnClass::ERContinuous,
    FnClass::WeaklyERContinuous,
    FnClass::ContraEThetaContinuous,
};

struct ClassName {
    std::string_view name;
    std::string_view short_name;
};

inline constexpr std::array<ClassName, kClassCount> kClassNames = {{
    {"continuous", "c"},
    {"e-continuous", "e-c"},
    {"strongly-theta-continuous", "st-theta-c"},
    {"strongly-theta-semicontinuous", "st-theta-semi-c"},
    {"strongly-theta-precontinuous", "st-theta-pre-c"},
    {"strongly-theta-b-continuous", "st-theta-b-c"},
    {"strongly-theta-e-continuous", "st-theta-e-c"},
    {"weakly-clopen", "w-co"},
    {"weakly-b-continuous", "weakly-b-c"},
    {"weakly-a-continuous", "weakly-a-c"},
    {"weakly-e-continuous", "weakly-e-c"},
    {"weakly-BR-continuous", "weakly-BR-c"},
    {"BR-continuous", "BR-c"},
    {"eR-continuous", "eR-c"},
    {"weakly-eR-continuous", "weakly-eR-c"},
    {"contra-e-theta-continuous", "contra-e-theta-c"},
}};

constexpr std::size_t index_of(FnClass c) noexcept { return static_cast<std::size_t>(c); }
inline std::string_view to_string(FnClass c) { return kClassNames[index_of(c)].name; }

inline FnClass parse_fn_class(std::string_view name)
{
    for (std::size_t i = 0; i < kClassCount; ++i)
        if (kClassNames[i].name == name || kClassNames[i].short_name == name)
            return kAllClasses[i];
    throw Error(ErrorCode::UnknownClass, "unknown function class '" + std::string(name) + "'");
}

/// How a class is decided.
enum class ClassShape {
    Preimage,    // f⁻¹[V] ∈ K for every open V
    StrongTheta, // ∃U ∈ K(X,x) with f[kcl(U)] ⊆ V
    Weak,        // ∃U ∈ K(X,x) with f[U] ⊆ cl(V)
};

struct ClassRule {
    ClassShape shape;
    SetKind kind;
};

constexpr ClassRule rule_of(FnClass c) noexcept
{
    switch (c) {
    case FnClass::Continuous: return {ClassShape::Preimage, SetKind::Open};
    case FnClass::EContinuous: return {ClassShape::Preimage, SetKind::EOpen};
    case FnClass::StronglyThetaContinuous: return {ClassShape::StrongTheta, SetKind::Open};
    case FnClass::StronglyThetaSemicontinuous: return {ClassShape::StrongTheta, SetKind::Semiopen};
    case FnClass::StronglyThetaPrecontinuous: return {ClassShape::StrongTheta, SetKind::Preopen};
    case FnClass::StronglyThetaBContinuous: return {ClassShape::StrongTheta, SetKind::BOpen};
    case FnClass::StronglyThetaEContinuous: return {ClassShape::StrongTheta, SetKind::EOpen};
    case FnClass::WeaklyClopen: return {ClassShape::Weak, SetKind::Clopen};
    case FnClass::WeaklyBContinuous: return {ClassShape::Weak, SetKind::BOpen};
    case FnClass::WeaklyAContinuous: return {ClassShape::Weak, SetKind::AOpen};
    case FnClass::WeaklyEContinuous: return {ClassShape::Weak, SetKind::EOpen};
    case FnClass::WeaklyBRContinuous: return {ClassShape::Weak, SetKind::BRegular};
    case FnClass::BRContinuous: return {ClassShape::Preimage, SetKind::BRegular};
    case FnClass::ERContinuous: return {ClassShape::Preimage, SetKind::ERegular};
    case FnClass::WeaklyERContinuous: return {ClassShape::Weak, SetKind::ERegular};
    case FnClass::ContraEThetaContinuous: return {ClassShape::Preimage, SetKind::EThetaClosed};
    }
    return {ClassShape::Preimage, SetKind::Open};
}

/// Failing instance of a class condition. Preimage classes carry only V.
struct Witness {
    std::optional<unsigned> x;
    SubsetMask V;

    bool operator==(const Witness&) const = default;
};

struct Verdict {
    FnClass cls;
    bool holds = true;
    std::optional<Witness> witness;
};

struct ClassReport {
    std::vector<Verdict> verdicts;  // in kAllClasses order

    const Verdict& operator[](FnClass c) const { return verdicts.at(index_of(c)); }
    bool holds(FnClass c) const { return (*this)[c].holds; }

    /// Bit i set when kAllClasses[i] holds.
    std::uint32_t bits() const
    {
        std::uint32_t b = 0;
        for (const auto& v : verdicts)
            if (v.holds)
                b |= std::uint32_t{1} << index_of(v.cls);
        return b;
    }
};

/// Decision procedures over the cached tables of a fixed (domain, codomain)
/// pair, for raw target arrays. Used directly by the exhaustive searches.
class MapEvaluator {
public:
    using word = SubsetMask::word_type;

    MapEvaluator(const FinSpace& dom, const FinSpace& cod) : dom_(dom), cod_(cod), tx_(&tables(dom)), ty_(&tables(cod))
    {
        for (auto v : cod.opens()) {
            if (v.empty())
                continue;
            opens_.push_back(v.bits());
            closures_.push_back(ty_->closure[v.bits()]);
        }
    }

    const FinSpace& dom() const noexcept { return dom_; }
    const FinSpace& cod() const noexcept { return cod_; }

    /// Number of class decisions made so far.
    std::uint64_t calls() const noexcept { return calls_; }

    /// Binds a map; every later query refers to it.
    void bind(std::span<const std::uint8_t> targets)
    {
        if (targets.size() != dom_.size())
            throw Error(ErrorCode::WidthMismatch, "map length differs from the domain size");
        fibers_.fill(0);
        for (unsigned x = 0; x < targets.size(); ++x) {
            if (targets[x] >= cod_.size())
                throw Error(ErrorCode::WidthMismatch, "image index outside the codomain");
            fibers_[targets[x]] |= word{1} << x;
        }
        targets_.assign(targets.begin(), targets.end());
    }

    word preimage(word b) const noexcept
    {
        word out = 0;
        for (; b != 0; b &= b - 1)
            out |= fibers_[static_cast<unsigned>(std::countr_zero(b))];
        return out;
    }

    bool holds(FnClass c)
    {
        ++calls_;
        const auto r = rule_of(c);
        switch (r.shape) {
        case ClassShape::Preimage:
            for (auto v : opens_)
                if (!tx_->in(r.kind, SubsetMask(preimage(v))))
                    return false;
            return true;
        case ClassShape::StrongTheta: {
            const auto& st = tx_->strong_theta(r.kind);
            for (auto v : opens_) {
                const word pre = preimage(v);
                if (pre & ~st[pre])
                    return false;
            }
            return true;
        }
        case ClassShape::Weak: {
            const auto& ki = tx_->kernel_interior(r.kind);
            for (std::size_t i = 0; i < opens_.size(); ++i) {
                const word pre = preimage(opens_[i]);
                if (pre & ~ki[preimage(closures_[i])])
                    return false;
            }
            return true;
        }
        }
        return false;
    }

    /// First failing (x, V) in (x ascending, V canonical) order, or V alone
    /// for preimage classes; nullopt when the class holds.
    std::optional<Witness> witness(FnClass c) const
    {
        const auto r = rule_of(c);
        if (r.shape == ClassShape::Preimage) {
            for (auto v : cod_.opens())
                if (!tx_->in(r.kind, SubsetMask(preimage(v.bits()))))
                    return Witness{std::nullopt, v};
            return std::nullopt;
        }
        for (unsigned x = 0; x < dom_.size(); ++x)
            for (auto v : cod_.opens()) {
                if (!v.contains(targets_[x]))
                    continue;
                if (!point_holds(c, x, v))
                    return Witness{x, v};
            }
        return std::nullopt;
    }

    /// The defining condition at a single (x, V) with f(x) ∈ V.
    bool point_holds(FnClass c, unsigned x, SubsetMask v) const
    {
        const auto r = rule_of(c);
        const word bit = word{1} << x;
        switch (r.shape) {
        case ClassShape::Preimage: return tx_->in(r.kind, SubsetMask(preimage(v.bits())));
        case ClassShape::StrongTheta: return (tx_->strong_theta(r.kind)[preimage(v.bits())] & bit) != 0;
        case ClassShape::Weak:
            return (tx_->kernel_interior(r.kind)[preimage(ty_->closure[v.bits()])] & bit) != 0;
        }
        return false;
    }

    /// First U in canonical order witnessing the condition at (x, V).
    std::optional<SubsetMask> satisfying_set(FnClass c, unsigned x, SubsetMask v) const
    {
        const auto r = rule_of(c);
        const SubsetMask pre(preimage(v.bits()));
        if (r.shape == ClassShape::Preimage)
            return tx_->in(r.kind, pre) ? std::optional<SubsetMask>(pre) : std::nullopt;
        const SubsetMask target =
            r.shape == ClassShape::Weak ? SubsetMask(preimage(ty_->closure[v.bits()])) : pre;
        const auto* kcl = r.shape == ClassShape::StrongTheta ? &tx_->kernel_closure(r.kind) : nullptr;
        for (auto u : tx_->families[index_of(r.kind)]) {
            if (!u.contains(x))
                continue;
            const SubsetMask reach = kcl ? SubsetMask((*kcl)[u.bits()]) : u;
            if (reach.subset_of(target))
                return u;
        }
        return std::nullopt;
    }

    ClassReport classify_all()
    {
        ClassReport report;
        report.verdicts.resize(kClassCount);
        // Preimage scans first; every class is still decided on its own.
        for (auto shape : {ClassShape::Preimage, ClassShape::StrongTheta, ClassShape::Weak})
            for (auto c : kAllClasses) {
                if (rule_of(c).shape != shape)
                    continue;
                auto& v = report.verdicts[index_of(c)];
                v.cls = c;
                v.holds = holds(c);
                if (!v.holds)
                    v.witness = witness(c);
            }
        return report;
    }

    const OperatorTables& dom_tables() const noexcept { return *tx_; }
    const OperatorTables& cod_tables() const noexcept { return *ty_; }

private:
    FinSpace dom_;
    FinSpace cod_;
    const OperatorTables* tx_;
    const OperatorTables* ty_;
    std::vector<word> opens_;     // nonempty opens of the codomain, canonical order
    std::vector<word> closures_;  // their closures
    std::array<word, 32> fibers_{};
    std::vector<std::uint8_t> targets_;
    std::uint64_t calls_ = 0;
};

inline bool is_in_class(const PointMap& f, FnClass c, Witness* witness = nullptr)
{
    MapEvaluator ev(f.dom(), f.cod());
    ev.bind(f.targets());
    const bool holds = ev.holds(c);
    if (!holds && witness)
        *witness = *ev.witness(c);
    return holds;
}

inline ClassReport classify_all(const PointMap& f)
{
    MapEvaluator ev(f.dom(), f.cod());
    ev.bind(f.targets());
    return ev.classify_all();
}

/// Weak eR-continuity at a single point, by scanning eR(X, x).
inline bool weakly_eR_continuous_at(const PointMap& f, unsigned x)
{
    const auto& tx = tables(f.dom());
    const auto& ty = tables(f.cod());
    for (auto v : f.cod().opens()) {
        if (!v.contains(f(x)))
            continue;
        const SubsetMask target = preimage(f, SubsetMask(ty.closure[v.bits()]));
        bool found = false;
        for (auto u : tx.families[index_of(SetKind::ERegular)])
            if (u.contains(x) && u.subset_of(target)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

/// Strong θ-e-continuity through e-regular neighbourhoods: for each x and
/// open V ∋ f(x) some U ∈ eR(X, x) has f[U] ⊆ V.
inline bool strongly_theta_e_by_regular(const PointMap& f)
{
    const auto& tx = tables(f.dom());
    for (unsigned x = 0; x < f.dom().size(); ++x)
        for (auto v : f.cod().opens()) {
            if (!v.contains(f(x)))
                continue;
            const SubsetMask target = preimage(f, v);
            bool found = false;
            for (auto u : tx.families[index_of(SetKind::ERegular)])
                if (u.contains(x) && u.subset_of(target)) {
                    found = true;
                    break;
                }
            if (!found)
                return false;
        }
    return true;
}

inline constexpr int kCharacterizationCount = 11;

/// One of the eleven equivalent conditions for weak eR-continuity, evaluated
/// literally (quantified families and subsets scanned exhaustively).
///
///  1  ∀x ∀V ∈ O(Y, f(x)) ∃U ∈ eR(X, x): f[U] ⊆ cl(V)
///  2  as 1 with U e-θ-open
///  3  e-cl_θ(f⁻¹[U]) ⊆ f⁻¹[cl(U)] for every preopen U
///  4  f⁻¹[U] ⊆ e-int_θ(f⁻¹[cl(U)]) for every preopen U
///  5  e-cl_θ(f⁻¹[int(cl(B))]) ⊆ f⁻¹[cl(B)] for every B ⊆ Y
///  6  e-cl_θ(f⁻¹[int(F)]) ⊆ f⁻¹[F] for every regular closed F
///  7  e-cl_θ(f⁻¹[U]) ⊆ f⁻¹[cl(U)] for every open U
///  8  f⁻¹[U] ⊆ e-int_θ(f⁻¹[cl(U)]) for every open U
///  9  f[e-cl_θ(A)] ⊆ cl_θ(f[A]) for every A ⊆ X
/// 10  e-cl_θ(f⁻¹[B]) ⊆ f⁻¹[cl_θ(B)] for every B ⊆ Y
/// 11  e-cl_θ(f⁻¹[int(cl_θ(B))]) ⊆ f⁻¹[cl_θ(B)] for every B ⊆ Y
inline bool weR_characterization(const PointMap& f, int variant)
{
    if (variant < 1 || variant > kCharacterizationCount)
        throw Error(ErrorCode::InvalidArgument, "characterization variant must be in 1..11");
    const auto& tx = tables(f.dom());
    const auto& ty = tables(f.cod());
    auto pre = [&](SubsetMask::word_type b) { return preimage(f, SubsetMask(b)); };
    auto ecl = [&](SubsetMask a) { return SubsetMask(tx.e_theta_closure[a.bits()]); };
    auto eint = [&](SubsetMask a) { return SubsetMask(tx.e_theta_interior[a.bits()]); };
    const unsigned nx = f.dom().size();
    const unsigned ny = f.cod().size();

    auto over_points = [&](SetKind k) {
        for (unsigned x = 0; x < nx; ++x)
            for (auto v : f.cod().opens()) {
                if (!v.contains(f(x)))
                    continue;
                const auto target = pre(ty.closure[v.bits()]);
                bool found = false;
                for (auto u : tx.families[index_of(k)])
                    if (u.contains(x) && u.subset_of(target)) {
                        found = true;
                        break;
                    }
                if (!found)
                    return false;
            }
        return true;
    };
    auto all_of_family = [&](const SetFamily& fam, auto&& pred) {
        for (auto u : fam)
            if (!pred(u))
                return false;
        return true;
    };
    auto all_subsets = [&](unsigned n, auto&& pred) {
        bool ok = true;
        for_each_subset(n, [&](SubsetMask b) { ok = ok && pred(b); });
        return ok;
    };

    switch (variant) {
    case 1: return over_points(SetKind::ERegular);
    case 2: return over_points(SetKind::EThetaOpen);
    case 3:
        return all_of_family(ty.families[index_of(SetKind::Preopen)],
                             [&](SubsetMask u) { return ecl(pre(u.bits())).subset_of(pre(ty.closure[u.bits()])); });
    case 4:
        return all_of_family(ty.families[index_of(SetKind::Preopen)],
                             [&](SubsetMask u) { return pre(u.bits()).subset_of(eint(pre(ty.closure[u.bits()]))); });
    case 5:
        return all_subsets(ny, [&](SubsetMask b) {
            return ecl(pre(ty.interior[ty.closure[b.bits()]])).subset_of(pre(ty.closure[b.bits()]));
        });
    case 6:
        return all_of_family(ty.families[index_of(SetKind::RegularClosed)],
                             [&](SubsetMask F) { return ecl(pre(ty.interior[F.bits()])).subset_of(pre(F.bits())); });
    case 7:
        return all_of_family(f.cod().opens(),
                             [&](SubsetMask u) { return ecl(pre(u.bits())).subset_of(pre(ty.closure[u.bits()])); });
    case 8:
        return all_of_family(f.cod().opens(),
                             [&](SubsetMask u) { return pre(u.bits()).subset_of(eint(pre(ty.closure[u.bits()]))); });
    case 9:
        return all_subsets(nx, [&](SubsetMask a) {
            return image(f, ecl(a)).subset_of(SubsetMask(ty.theta_closure[image(f, a).bits()]));
        });
    case 10:
        return all_subsets(ny, [&](SubsetMask b) {
            return ecl(pre(b.bits())).subset_of(pre(ty.theta_closure[b.bits()]));
        });
    case 11:
        return all_subsets(ny, [&](SubsetMask b) {
            const auto tc = ty.theta_closure[b.bits()];
            return ecl(pre(ty.interior[tc])).subset_of(pre(tc));
        });
    }
    return false;
}

}  // namespace finitop
