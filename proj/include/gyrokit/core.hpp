#pragma once

#include <array>
#include <concepts>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gyrokit/report.hpp"

namespace gyrokit {

struct gyro_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the model's carrier (e.g. a velocity at or beyond c).
struct domain_error : gyro_error {
    using gyro_error::gyro_error;
};

/// Caller violated an operation's precondition.
struct usage_error : gyro_error {
    using gyro_error::gyro_error;
};

/// A gyrogroup realization the law engine can drive. `deviation` is a
/// distance (0 when equal); `tolerance` is the equality threshold, 0 for
/// exact carriers. `key` orders elements for counterexample reporting.
template <typename M>
concept GyroModel = requires(const M& m, const typename M::element& a,
                             const typename M::element& b) {
    { m.add(a, b) } -> std::convertible_to<typename M::element>;
    { m.neg(a) } -> std::convertible_to<typename M::element>;
    { m.zero() } -> std::convertible_to<typename M::element>;
    { m.deviation(a, b) } -> std::convertible_to<double>;
    { m.tolerance() } -> std::convertible_to<double>;
    { m.describe(a) } -> std::convertible_to<std::string>;
    { m.key(a) } -> std::convertible_to<std::vector<double>>;
};

/// Finite models additionally expose their carrier for exhaustive checks.
template <typename M>
concept FiniteGyroModel = GyroModel<M> && requires(const M& m, std::size_t i) {
    { m.carrier_size() } -> std::convertible_to<std::size_t>;
    { m.element_at(i) } -> std::convertible_to<typename M::element>;
};

/// Models may expose their own gyration entry point; the identity suite
/// compares it against the defining formula.
template <typename M>
concept HasNativeGyration = requires(const M& m, const typename M::element& a) {
    { m.gyration(a, a, a) } -> std::convertible_to<typename M::element>;
};

/// gyr[x, y](z) = neg(x + y) + (x + (y + z)), the only constructive gyration.
template <GyroModel M>
typename M::element gyr(const M& m, const typename M::element& x,
                        const typename M::element& y, const typename M::element& z) {
    return m.add(m.neg(m.add(x, y)), m.add(x, m.add(y, z)));
}

template <GyroModel M>
bool elements_equal(const M& m, const typename M::element& a, const typename M::element& b) {
    return m.deviation(a, b) <= m.tolerance();
}

/// {x + s : s in S}. Left translation is injective, so no deduplication.
template <GyroModel M>
std::vector<typename M::element> left_translate(const M& m, const typename M::element& x,
                                                const std::vector<typename M::element>& s) {
    std::vector<typename M::element> out;
    out.reserve(s.size());
    for (const auto& e : s) out.push_back(m.add(x, e));
    return out;
}

/// {s + x : s in S}.
template <GyroModel M>
std::vector<typename M::element> right_translate(const M& m, const typename M::element& x,
                                                 const std::vector<typename M::element>& s) {
    std::vector<typename M::element> out;
    out.reserve(s.size());
    for (const auto& e : s) out.push_back(m.add(e, x));
    return out;
}

/// A case domain feeds (x, y, z, w) tuples to the law engine. Finite models
/// enumerate the full carrier; numeric models use a seeded sample plan.
template <GyroModel M>
using CaseFn = std::function<void(const typename M::element&, const typename M::element&,
                                  const typename M::element&, const typename M::element&)>;

template <FiniteGyroModel M>
auto exhaustive_domain(const M& m) {
    return [&m](const CaseFn<M>& f) {
        const std::size_t n = m.carrier_size();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    for (std::size_t w = 0; w < n; ++w)
                        f(m.element_at(x), m.element_at(y), m.element_at(z), m.element_at(w));
    };
}

template <GyroModel M>
auto listed_domain(std::vector<std::array<typename M::element, 4>> quads) {
    return [quads = std::move(quads)](const CaseFn<M>& f) {
        for (const auto& q : quads) f(q[0], q[1], q[2], q[3]);
    };
}

namespace detail {

template <GyroModel M>
Counterexample make_ce(const M& m, std::initializer_list<typename M::element> elems) {
    Counterexample ce;
    for (const auto& e : elems) {
        ce.elements.push_back(m.describe(e));
        auto k = m.key(e);
        ce.key.insert(ce.key.end(), k.begin(), k.end());
    }
    return ce;
}

template <GyroModel M>
void law_case(const M& m, LawReport& rep, const typename M::element& lhs,
              const typename M::element& rhs,
              std::initializer_list<typename M::element> witness) {
    const double dev = m.deviation(lhs, rhs);
    rep.record_case(dev <= m.tolerance(), dev, make_ce(m, witness));
}

/// Exhaustive bijectivity of every gyr[x, y] on a finite carrier.
template <FiniteGyroModel M>
LawReport finite_gyr_bijectivity(const M& m) {
    LawReport rep{.law = "gyr-bijective"};
    const std::size_t n = m.carrier_size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<bool> hit(n, false);
            bool ok = true;
            for (std::size_t z = 0; z < n && ok; ++z) {
                const auto img = gyr(m, m.element_at(x), m.element_at(y), m.element_at(z));
                bool matched = false;
                for (std::size_t t = 0; t < n; ++t) {
                    if (elements_equal(m, img, m.element_at(t))) {
                        if (hit[t]) ok = false;
                        hit[t] = true;
                        matched = true;
                        break;
                    }
                }
                if (!matched) ok = false;
            }
            rep.record_case(ok, ok ? 0.0 : 1.0,
                            make_ce(m, {m.element_at(x), m.element_at(y)}));
        }
    }
    return rep;
}

}  // namespace detail

/// Checks G1-G4 plus the gyr-automorphism law over the given domain.
/// On finite carriers a bijectivity report for every gyr[x, y] is appended.
template <GyroModel M, typename Domain>
std::vector<LawReport> check_axioms(const M& m, const Domain& domain) {
    using E = typename M::element;
    LawReport g1{.law = "G1-identity"};
    LawReport g2{.law = "G2-inverse"};
    LawReport g3{.law = "G3-gyroassociativity"};
    LawReport g4{.law = "G4-left-loop"};
    LawReport aut{.law = "gyr-automorphism"};

    domain([&](const E& x, const E& y, const E& z, const E& w) {
        detail::law_case(m, g1, m.add(m.zero(), x), x, {x});
        detail::law_case(m, g1, m.add(x, m.zero()), x, {x});
        detail::law_case(m, g2, m.add(m.neg(x), x), m.zero(), {x});
        detail::law_case(m, g2, m.add(x, m.neg(x)), m.zero(), {x});
        detail::law_case(m, g3, m.add(x, m.add(y, z)),
                         m.add(m.add(x, y), gyr(m, x, y, z)), {x, y, z});
        detail::law_case(m, g4, gyr(m, m.add(x, y), y, z), gyr(m, x, y, z), {x, y, z});
        detail::law_case(m, aut, gyr(m, x, y, m.add(z, w)),
                         m.add(gyr(m, x, y, z), gyr(m, x, y, w)), {x, y, z, w});
    });
    if (g1.cases == 0) throw usage_error("check_axioms: empty case domain");

    std::vector<LawReport> reports{g1, g2, g3, g4, aut};
    if constexpr (FiniteGyroModel<M>) {
        reports.push_back(detail::finite_gyr_bijectivity(m));
    } else {
        for (auto& r : reports) r.note = "checked on sampled domain only";
    }
    return reports;
}

/// Identities (1)-(3) of the basic proposition, plus agreement of the
/// model's own gyration entry point with the defining formula.
template <GyroModel M, typename Domain>
std::vector<LawReport> check_identities(const M& m, const Domain& domain) {
    using E = typename M::element;
    LawReport id1{.law = "identity-1-left-cancellation"};
    LawReport id2{.law = "identity-2"};
    LawReport id3{.law = "identity-3"};
    LawReport id4{.law = "identity-4-gyr-formula"};

    domain([&](const E& x, const E& y, const E& z, const E&) {
        detail::law_case(m, id1, m.add(m.neg(x), m.add(x, y)), y, {x, y});
        detail::law_case(m, id2, m.add(m.add(x, m.neg(y)), gyr(m, x, m.neg(y), y)), x, {x, y});
        detail::law_case(m, id3, m.add(m.add(x, gyr(m, x, y, m.neg(y))), y), x, {x, y});
        if constexpr (HasNativeGyration<M>) {
            detail::law_case(m, id4, m.gyration(x, y, z), gyr(m, x, y, z), {x, y, z});
        } else {
            detail::law_case(m, id4, gyr(m, x, y, z), gyr(m, x, y, z), {x, y, z});
        }
    });
    if (id1.cases == 0) throw usage_error("check_identities: empty case domain");

    std::vector<LawReport> reports{id1, id2, id3, id4};
    if constexpr (!FiniteGyroModel<M>) {
        for (auto& r : reports) r.note = "checked on sampled domain only";
    }
    return reports;
}

}  // namespace gyrokit
