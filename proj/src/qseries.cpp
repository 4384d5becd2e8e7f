#include "kmrank/qseries.hpp"

#include <algorithm>
#include <string>

#include "kmrank/checked.hpp"
#include "kmrank/error.hpp"

namespace kmrank {

namespace {

void require_order(int order) {
    if (order < 0) fail(ErrorCode::UnsupportedParameters, "series order must be non-negative");
}

}  // namespace

QSeries::QSeries(int order) {
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

QSeries::QSeries(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(ErrorCode::UnsupportedParameters, "a series needs at least one coefficient");
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(int exponent, std::int64_t coeff, int order) {
    QSeries s(order);
    s.add_term(exponent, coeff);
    return s;
}

void QSeries::add_term(int exponent, std::int64_t c) {
    if (exponent < 0) fail(ErrorCode::UnsupportedParameters, "negative exponent");
    if (exponent > order()) return;
    auto& slot = coeffs_[static_cast<std::size_t>(exponent)];
    slot = checked_add(slot, c);
}

QSeries QSeries::truncated(int new_order) const {
    require_order(new_order);
    if (new_order > order()) fail(ErrorCode::UnsupportedParameters, "cannot raise the order of a truncated series");
    return QSeries(std::vector<std::int64_t>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

QSeries QSeries::shifted(int shift) const {
    if (shift < 0) fail(ErrorCode::UnsupportedParameters, "negative shift");
    QSeries out(order());
    for (int n = 0; n + shift <= order(); ++n)
        out.coeffs_[static_cast<std::size_t>(n + shift)] = coeffs_[static_cast<std::size_t>(n)];
    return out;
}

QSeries QSeries::inverse() const {
    const std::int64_t c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1) fail(ErrorCode::UnsupportedParameters, "series is not invertible over the integers");
    QSeries out(order());
    out.coeffs_[0] = c0;
    for (int n = 1; n <= order(); ++n) {
        std::int64_t acc = 0;
        for (int j = 1; j <= n; ++j)
            acc = checked_add(acc, checked_mul(coeffs_[static_cast<std::size_t>(j)],
                                               out.coeffs_[static_cast<std::size_t>(n - j)]));
        out.coeffs_[static_cast<std::size_t>(n)] = checked_mul(-acc, c0);
    }
    return out;
}

void QSeries::divide_by_one_minus_q_pow(int step) {
    if (step < 1) fail(ErrorCode::UnsupportedParameters, "step must be positive");
    for (int n = step; n <= order(); ++n) {
        auto& c = coeffs_[static_cast<std::size_t>(n)];
        c = checked_add(c, coeffs_[static_cast<std::size_t>(n - step)]);
    }
}

void QSeries::multiply_by_one_minus_q_pow(int step) {
    if (step < 1) fail(ErrorCode::UnsupportedParameters, "step must be positive");
    for (int n = order(); n >= step; --n) {
        auto& c = coeffs_[static_cast<std::size_t>(n)];
        c = checked_sub(c, coeffs_[static_cast<std::size_t>(n - step)]);
    }
}

QSeries QSeries::operator-() const {
    QSeries out(order());
    for (int n = 0; n <= order(); ++n)
        out.coeffs_[static_cast<std::size_t>(n)] = checked_sub(0, coeffs_[static_cast<std::size_t>(n)]);
    return out;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    QSeries out(std::min(f.order(), g.order()));
    for (int n = 0; n <= out.order(); ++n)
        out.coeffs_[static_cast<std::size_t>(n)] = checked_add(f[n], g[n]);
    return out;
}

QSeries operator-(const QSeries& f, const QSeries& g) {
    QSeries out(std::min(f.order(), g.order()));
    for (int n = 0; n <= out.order(); ++n)
        out.coeffs_[static_cast<std::size_t>(n)] = checked_sub(f[n], g[n]);
    return out;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
    QSeries out(std::min(f.order(), g.order()));
    const int t = out.order();
    for (int i = 0; i <= t; ++i) {
        const std::int64_t fi = f[i];
        if (fi == 0) continue;
        for (int j = 0; i + j <= t; ++j) {
            auto& slot = out.coeffs_[static_cast<std::size_t>(i + j)];
            slot = checked_add(slot, checked_mul(fi, g[j]));
        }
    }
    return out;
}

QSeries pochhammer(int n, int order) {
    if (n < 0) fail(ErrorCode::UnsupportedParameters, "(q)_n needs n >= 0");
    QSeries s = QSeries::one(order);
    for (int i = 1; i <= std::min(n, order); ++i) s.multiply_by_one_minus_q_pow(i);
    return s;
}

QSeries pochhammer_infinite(int order) {
    return pochhammer(order, order);
}

QSeries inv_pochhammer(int n, int order) {
    if (n < 0) fail(ErrorCode::UnsupportedParameters, "(q)_n needs n >= 0");
    QSeries s = QSeries::one(order);
    for (int i = 1; i <= std::min(n, order); ++i) s.divide_by_one_minus_q_pow(i);
    return s;
}

QSeries inv_euler(int order) {
    return inv_pochhammer(order, order);
}

namespace {

struct MultisumState {
    int k;
    std::optional<int> shift;
    int order;
    std::vector<QSeries> inv_poch;   // 1/(q)_n for n = 0..order
    QSeries acc;
};

// Chooses N_j for j = index..k-1 (1-based), with N_j >= N_{j+1} = floor.
void multisum_walk(MultisumState& st, int index, int floor, int exponent, const QSeries& denom) {
    if (index == 0) {
        st.acc = st.acc + denom.shifted(exponent);
        return;
    }
    for (int big_n = floor;; ++big_n) {
        int e = exponent + big_n * big_n;
        if (st.shift && index >= *st.shift) e += big_n;
        if (e > st.order) break;
        // n_index = N_index - N_{index+1}; the innermost index (k-1) has N_k = 0.
        const int small_n = big_n - floor;
        multisum_walk(st, index - 1, big_n, e, denom * st.inv_poch[static_cast<std::size_t>(small_n)]);
    }
}

std::int64_t theta_sign(long long j) { return (j % 2 == 0) ? 1 : -1; }

}  // namespace

QSeries multisum_lhs(int k, std::optional<int> a_shift, int order) {
    require_order(order);
    if (k < 1) fail(ErrorCode::UnsupportedParameters, "multisum needs k >= 1");
    if (a_shift && (*a_shift < 1 || *a_shift > k))
        fail(ErrorCode::UnsupportedParameters, "shift a must satisfy 1 <= a <= k");
    MultisumState st{k, a_shift, order, {}, QSeries(order)};
    st.inv_poch.reserve(static_cast<std::size_t>(order) + 1);
    QSeries running = QSeries::one(order);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) running.divide_by_one_minus_q_pow(n);
        st.inv_poch.push_back(running);
    }
    multisum_walk(st, k - 1, 0, 0, QSeries::one(order));
    return st.acc;
}

QSeries theta_sum(int k, int order) {
    require_order(order);
    if (k < 1) fail(ErrorCode::UnsupportedParameters, "theta sum needs k >= 1");
    QSeries s(order);
    auto exponent = [k](long long j) { return j * (j + 1) * (2 * k + 1) / 2 - k * j; };
    s.add_term(0, 1);
    for (long long j = 1;; ++j) {
        const long long up = exponent(j);
        const long long down = exponent(-j);
        if (up > order && down > order) break;
        if (up <= order) s.add_term(static_cast<int>(up), theta_sign(j));
        if (down <= order) s.add_term(static_cast<int>(down), theta_sign(j));
    }
    return s;
}

QSeries pentagonal_sum(int order) {
    require_order(order);
    QSeries s(order);
    s.add_term(0, 1);
    for (long long j = 1;; ++j) {
        const long long up = j * (3 * j - 1) / 2;
        const long long down = j * (3 * j + 1) / 2;
        if (up > order) break;
        s.add_term(static_cast<int>(up), theta_sign(j));
        if (down <= order) s.add_term(static_cast<int>(down), theta_sign(j));
    }
    return s;
}

QSeries schur_rhs(int k, int order) {
    return inv_euler(order) * theta_sum(k, order);
}

QSeries rr_product(int k, int a_shift, int order) {
    require_order(order);
    if (k < 1 || a_shift < 1 || a_shift > k)
        fail(ErrorCode::UnsupportedParameters, "product needs k >= 1 and 1 <= a <= k");
    const int modulus = 2 * k + 1;
    QSeries s = QSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        const int res = n % modulus;
        if (res == 0 || res == a_shift || res == modulus - a_shift) continue;
        s.divide_by_one_minus_q_pow(n);
    }
    return s;
}

QSeries jacobi_product(int k, int order) {
    require_order(order);
    if (k < 1) fail(ErrorCode::UnsupportedParameters, "product needs k >= 1");
    const int modulus = 2 * k + 1;
    QSeries s = QSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        const int res = n % modulus;
        if (res == 0 || res == k || res == modulus - k) s.multiply_by_one_minus_q_pow(n);
    }
    return s;
}

std::pair<QSeries, QSeries> jacobi_specialization(int k, int order) {
    return {theta_sum(k, order), jacobi_product(k, order)};
}

QSeries h_closed_form(int k, int m, int r, int order) {
    require_order(order);
    if (k < 1) fail(ErrorCode::UnsupportedParameters, "k must be positive");
    const bool claimed = (m >= 0 && r >= 1) || (m == 0 && r == 0);
    if (!claimed) {
        fail(ErrorCode::UnsupportedParameters,
             "closed form is only established for m >= 0, r >= 1 or m = r = 0");
    }
    QSeries theta(order);
    for (long long j = 1;; ++j) {
        const long long e = j * r + j * (j - 1) / 2 + static_cast<long long>(k) * (j * m + j * j);
        if (e > order) break;
        theta.add_term(static_cast<int>(e), theta_sign(j - 1));
    }
    return inv_euler(order) * theta;
}

}  // namespace kmrank
