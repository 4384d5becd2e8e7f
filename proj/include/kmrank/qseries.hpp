#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kmrank {

/// Power series in q truncated after q^order, with exact int64 coefficients.
/// Binary operations truncate to the smaller order; overflow throws.
class QSeries {
public:
    explicit QSeries(int order);
    explicit QSeries(std::vector<std::int64_t> coeffs);

    static QSeries one(int order);
    static QSeries monomial(int exponent, std::int64_t coeff, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

    /// Adds c q^e; terms beyond the order are dropped.
    void add_term(int exponent, std::int64_t c);

    QSeries truncated(int order) const;
    /// Multiplication by q^shift (shift >= 0).
    QSeries shifted(int shift) const;
    /// Multiplicative inverse; the constant term must be +1 or -1.
    QSeries inverse() const;
    /// Multiply in place by 1/(1 - q^step).
    void divide_by_one_minus_q_pow(int step);
    /// Multiply in place by (1 - q^step).
    void multiply_by_one_minus_q_pow(int step);

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& f, const QSeries& g);
    friend QSeries operator-(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const QSeries& f, const QSeries& g);
    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

/// (q)_n = (1-q)(1-q^2)...(1-q^n); pochhammer_infinite multiplies every factor
/// that is visible below the order.
QSeries pochhammer(int n, int order);
QSeries pochhammer_infinite(int order);
/// 1/(q)_n.
QSeries inv_pochhammer(int n, int order);
/// 1/(q)_inf, the generating function of p(n).
QSeries inv_euler(int order);

/// Sum over N_1 >= ... >= N_{k-1} >= 0 of
/// q^(N_1^2+...+N_{k-1}^2 [+ N_a+...+N_{k-1}]) / ((q)_{n_1}...(q)_{n_{k-1}})
/// with n_j = N_j - N_{j+1}. Without a shift this counts partitions with at
/// most k-1 Durfee squares.
QSeries multisum_lhs(int k, std::optional<int> a_shift, int order);

/// Sum over j in Z of (-1)^j q^(j(j+1)(2k+1)/2 - kj).
QSeries theta_sum(int k, int order);
/// Sum over j in Z of (-1)^j q^(j(3j-1)/2).
QSeries pentagonal_sum(int order);

/// theta_sum(k) / (q)_inf.
QSeries schur_rhs(int k, int order);

/// Product over n not congruent to 0, +-a mod 2k+1 of 1/(1-q^n).
QSeries rr_product(int k, int a_shift, int order);

/// Product over n congruent to 0, +-k mod 2k+1 of (1-q^n).
QSeries jacobi_product(int k, int order);
/// {theta_sum(k), jacobi_product(k)}; equal by the triple product identity.
std::pair<QSeries, QSeries> jacobi_specialization(int k, int order);

/// (1/(q)_inf) * sum_{j>=1} (-1)^(j-1) q^(jr + j(j-1)/2 + k(jm + j^2)).
/// Only claimed to generate h(n,k,m,<=-r) for (m >= 0, r >= 1) or m = r = 0;
/// other parameters throw UnsupportedParameters.
QSeries h_closed_form(int k, int m, int r, int order);

enum class Tail { AtMost, AtLeast };

/// Enumeration-backed series: coefficient n counts partitions of n in the
/// (k,m)-rank domain whose rank is <= r (AtMost) or >= r (AtLeast).
/// Orders above kMaxCensusOrder throw ImpracticalOrder.
QSeries h_census_series(int k, int m, int r, Tail tail, int order);
inline constexpr int kMaxCensusOrder = 60;

struct IdentitySpec {
    std::string name;   // pentagonal | schur | rr | andrews | jacobi | h_closed_form
    int k = 1;
    int a = 1;
    int m = 0;
    int r = 0;
};

struct VerificationReport {
    IdentitySpec identity;
    int order = 0;
    bool success = false;
    std::optional<int> mismatch_index;
    std::int64_t lhs_value = 0;
    std::int64_t rhs_value = 0;
    std::string lhs_label;
    std::string rhs_label;
};

/// Compares both sides of a named identity coefficient by coefficient.
/// Throws UnknownIdentity for unrecognised names and UnsupportedParameters
/// for parameters outside an identity's range.
VerificationReport verify_identity(const IdentitySpec& spec, int order);

}  // namespace kmrank
