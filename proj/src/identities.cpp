#include <optional>
#include <string>

#include "kmrank/census.hpp"
#include "kmrank/error.hpp"
#include "kmrank/qseries.hpp"

namespace kmrank {

QSeries h_census_series(int k, int m, int r, Tail tail, int order) {
    if (order < 0) fail(ErrorCode::UnsupportedParameters, "series order must be non-negative");
    if (order > kMaxCensusOrder) {
        fail(ErrorCode::ImpracticalOrder, "census series above order " + std::to_string(kMaxCensusOrder) +
                                              " needs too many partitions to enumerate");
    }
    const auto tables = census_range(order, k, m);
    QSeries s(order);
    for (int n = 0; n <= order; ++n) {
        const auto& t = tables[static_cast<std::size_t>(n)];
        s.add_term(n, tail == Tail::AtMost ? t.at_most(r) : t.at_least(r));
    }
    return s;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::UnsupportedParameters, what);
}

VerificationReport compare(const IdentitySpec& spec, const QSeries& lhs, const QSeries& rhs,
                           std::string lhs_label, std::string rhs_label) {
    VerificationReport rep;
    rep.identity = spec;
    rep.order = std::min(lhs.order(), rhs.order());
    rep.lhs_label = std::move(lhs_label);
    rep.rhs_label = std::move(rhs_label);
    rep.success = true;
    for (int n = 0; n <= rep.order; ++n) {
        if (lhs[n] != rhs[n]) {
            rep.success = false;
            rep.mismatch_index = n;
            rep.lhs_value = lhs[n];
            rep.rhs_value = rhs[n];
            break;
        }
    }
    return rep;
}

}  // namespace

VerificationReport verify_identity(const IdentitySpec& spec, int order) {
    const std::string& name = spec.name;
    if (order < 0) fail(ErrorCode::UnsupportedParameters, "order must be non-negative");

    if (name == "pentagonal") {
        return compare(spec, QSeries::one(order), inv_euler(order) * pentagonal_sum(order), "1",
                       "pentagonal_sum/(q)_inf");
    }
    if (name == "schur") {
        require(spec.k >= 1, "schur needs k >= 1");
        return compare(spec, multisum_lhs(spec.k, std::nullopt, order), schur_rhs(spec.k, order), "multisum",
                       "theta/(q)_inf");
    }
    if (name == "rr") {
        require(spec.k >= 1, "rr needs k >= 1");
        return compare(spec, multisum_lhs(spec.k, std::nullopt, order), rr_product(spec.k, spec.k, order),
                       "multisum", "product");
    }
    if (name == "andrews") {
        require(spec.k >= 1 && spec.a >= 1 && spec.a <= spec.k, "andrews needs 1 <= a <= k");
        return compare(spec, multisum_lhs(spec.k, spec.a, order), rr_product(spec.k, spec.a, order),
                       "shifted multisum", "product");
    }
    if (name == "jacobi") {
        require(spec.k >= 1, "jacobi needs k >= 1");
        auto [theta, product] = jacobi_specialization(spec.k, order);
        return compare(spec, theta, product, "theta", "product");
    }
    if (name == "h_closed_form") {
        require(spec.k >= 1, "h_closed_form needs k >= 1");
        const QSeries closed = h_closed_form(spec.k, spec.m, spec.r, order);
        return compare(spec, h_census_series(spec.k, spec.m, -spec.r, Tail::AtMost, order), closed,
                       "census", "closed form");
    }
    fail(ErrorCode::UnknownIdentity, "unknown identity '" + name + "'");
}

}  // namespace kmrank
