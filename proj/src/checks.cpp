#include "kmrank/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "kmrank/bijections.hpp"
#include "kmrank/census.hpp"
#include "kmrank/durfee.hpp"
#include "kmrank/error.hpp"
#include "kmrank/oracle.hpp"
#include "kmrank/partition.hpp"
#include "kmrank/qseries.hpp"
#include "kmrank/rank.hpp"
#include "kmrank/select_insert.hpp"
#include "kmrank/text_io.hpp"

namespace kmrank::checks {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

template <class Body>
CheckResult timed(std::string id, std::string title, double budget, Body&& body) {
    CheckResult res;
    res.id = std::move(id);
    res.title = std::move(title);
    res.budget_seconds = budget;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(res);
    } catch (const Error& e) {
        res.expect(false, std::string("unexpected error ") + std::string(to_string(e.code())) + ": " + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::string str(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string str(const Partition& p) { return "(" + (p.empty() ? std::string() : to_text(p)) + ")"; }

std::string str(const PartitionSequence& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.seq.size(); ++i) out += (i ? " " : "") + str(s.seq[i]);
    return out + " | p=" + str(s.bounds.p) + "]";
}

template <class Fn>
bool throws_code(ErrorCode code, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

std::vector<int> minus_one(std::vector<int> v) {
    for (int& x : v) --x;
    return v;
}

}  // namespace

void CheckResult::expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failed_cases;
    if (passed) failures.clear();
    passed = false;
    if (failures.size() < kMaxRecordedFailures) failures.push_back(what);
}

// ---------------------------------------------------------------------------

CheckResult golden_examples() {
    return timed("1", "golden examples", 1.0, [](CheckResult& res) {
        res.expect(Partition{5, 5, 4, 1}.conjugate() == Partition{4, 3, 3, 3, 2}, "conjugate of (5,5,4,1)");

        const Partition staircase{7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1};
        res.expect(decompose(staircase, 3, 0).widths == std::vector<int>{5, 3, 2}, "Durfee squares 5,3,2 of (7,7,6,6,5,4,3,3,3,2,1^5)");

        const Partition small{4, 3, 3, 2, 2, 1};
        res.expect(dyson_rank(small) == -2, "rank of (4,3,3,2,2,1)");
        res.expect(dyson_map(small, -2) == Partition{3, 3, 2, 2, 1, 1}, "d_{-2}(4,3,3,2,2,1)");
        res.expect(dyson_map(small, 1) == Partition{6, 3, 2, 2, 1, 1}, "d_1(4,3,3,2,2,1)");

        res.expect(gen_conjugate(Partition{9, 8, 8, 6, 5, 4, 3, 2, 2, 2, 1, 1, 1, 1, 1}, 2) ==
                       Partition{10, 9, 8, 7, 5, 5, 3, 2, 2, 1, 1, 1},
                   "generalized conjugation, k=2 example");
        res.expect(gen_conjugate(Partition{9, 8, 8, 7, 7, 6, 5, 4, 4, 3, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1}, 4) ==
                       Partition{9, 9, 8, 7, 7, 6, 5, 4, 4, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1},
                   "generalized conjugation, k=4 example");

        const Partition garvan_example{12, 10, 8, 7, 6, 5, 4, 3, 3, 3, 1, 1};
        const RankStats g = garvan_rank(garvan_example, 2);
        res.expect(g.a == 5 && g.b == 4 && g.r == 1, "ga_2 = 5, gb_2 = 4");
        res.expect(garvan_conjugate(garvan_example, 2) == Partition{11, 9, 9, 7, 6, 5, 4, 3, 3, 2, 2, 1, 1},
                   "Garvan conjugate of (12,10,8,7,6,5,4,3,3,3,1,1)");

        const RankStats s = rank_km(staircase, 3, 0);
        res.expect(s.a == 4 && s.b == 5 && s.r == -1, "a_{3,0} = 4, b_{3,0} = 5");
    });
}

// ---------------------------------------------------------------------------

CheckResult conjugation_involution(int max_n, int max_k) {
    return timed("2", "generalized conjugation is a width-preserving involution swapping (a,b)", 60.0,
                 [&](CheckResult& res) {
        std::int64_t domain = 0;
        for (int n = 0; n <= max_n; ++n) {
            for_each_partition(n, [&](const Partition& lambda) {
                for (int k = 1; k <= max_k; ++k) {
                    auto d = try_decompose(lambda, k, 0);
                    if (!d) break;
                    ++domain;
                    const RankStats before = rank_km(*d);
                    const Partition mu = gen_conjugate(lambda, k);
                    const RankStats after = rank_km(mu, k, 0);
                    const std::string tag = "k=" + std::to_string(k) + " " + str(lambda);
                    res.expect(mu.size() == n, "size changed: " + tag);
                    res.expect(after.widths == before.widths, "widths changed: " + tag);
                    res.expect(after.a == before.b && after.b == before.a, "(a,b) not swapped: " + tag);
                    res.expect(gen_conjugate(mu, k) == lambda, "not an involution: " + tag);
                }
            });
        }
        res.notes.push_back(std::to_string(domain) + " (partition, k) pairs");
    });
}

// ---------------------------------------------------------------------------

CheckResult dyson_bijection(int max_n, int max_k) {
    return timed("3", "generalized Dyson map: contract, inverse, domain/codomain matching", 120.0,
                 [&](CheckResult& res) {
        const std::vector<int> ms{-2, -1, 0, 1};
        const std::vector<int> rs{-1, 0, 1, 2};
        std::map<int, std::vector<Partition>> cache;
        auto parts_of = [&](int n) -> const std::vector<Partition>& {
            auto it = cache.find(n);
            if (it == cache.end()) it = cache.emplace(n, enumerate(n)).first;
            return it->second;
        };
        std::int64_t mapped = 0;
        for (int k = 1; k <= max_k; ++k) {
            for (int m : ms) {
                for (int r : rs) {
                    for (int n = 0; n <= max_n; ++n) {
                        const int target = n - r - k * (m + 1);
                        std::set<Partition> image;
                        for (const Partition& lambda : parts_of(n)) {
                            auto d = try_decompose(lambda, k, m);
                            if (!d) continue;
                            const bool nonzero = std::all_of(d->widths.begin(), d->widths.end(),
                                                             [](int w) { return w > 0; });
                            const RankStats st = rank_km(*d);
                            const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                                    " r=" + std::to_string(r) + " " + str(lambda);
                            if (!nonzero) {
                                if (st.r <= -r)
                                    res.expect(throws_code(ErrorCode::ZeroWidthRectangle,
                                                           [&] { (void)gen_dyson(lambda, k, m, r); }),
                                               "zero width accepted: " + tag);
                                continue;
                            }
                            if (st.r > -r) {
                                res.expect(throws_code(ErrorCode::RankTooLarge, [&] { (void)gen_dyson(lambda, k, m, r); }),
                                           "rank too large accepted: " + tag);
                                continue;
                            }
                            const int t = d->below.length();
                            const Partition mu = gen_dyson(lambda, k, m, r);
                            ++mapped;
                            const RankStats out = rank_km(mu, k, m + 2);
                            res.expect(mu.size() == target, "size law: " + tag);
                            res.expect(out.widths == minus_one(d->widths), "width law: " + tag);
                            res.expect(out.a == t - r, "a = t - r: " + tag);
                            res.expect(out.b <= t, "b <= t: " + tag);
                            res.expect(out.r >= -r, "rank >= -r: " + tag);
                            res.expect(gen_dyson_inverse(mu, k, m, r) == lambda, "inverse round trip: " + tag);
                            res.expect(image.insert(mu).second, "not injective: " + tag);
                        }
                        if (target < 0) {
                            res.expect(image.empty(), "image of negative size");
                            continue;
                        }
                        std::set<Partition> codomain;
                        for (const Partition& mu : parts_of(target)) {
                            auto d = try_decompose(mu, k, m + 2);
                            if (!d || rank_km(*d).r < -r) continue;
                            const bool reachable = std::all_of(d->widths.begin(), d->widths.end(),
                                                               [m](int w) { return w + 1 + m >= 1; });
                            const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                                    " r=" + std::to_string(r) + " " + str(mu);
                            if (!reachable) {
                                res.expect(throws_code(ErrorCode::NotInImage,
                                                       [&] { (void)gen_dyson_inverse(mu, k, m, r); }),
                                           "unreachable widths accepted: " + tag);
                                continue;
                            }
                            codomain.insert(mu);
                            const Partition lambda = gen_dyson_inverse(mu, k, m, r);
                            res.expect(lambda.size() == n, "inverse size: " + tag);
                            res.expect(gen_dyson(lambda, k, m, r) == mu, "forward of inverse: " + tag);
                        }
                        res.expect(codomain == image, "image differs from codomain at k=" + std::to_string(k) +
                                                          " m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                                          " n=" + std::to_string(n));
                    }
                }
            }
        }
        res.notes.push_back(std::to_string(mapped) + " partitions mapped");
    });
}

// ---------------------------------------------------------------------------

namespace {

// Calls fn on every sequence with k partitions, caps in [0, max_bound], total
// size <= max_size.
void for_each_sequence(int k, int max_size, int max_bound, const std::function<void(const PartitionSequence&)>& fn) {
    // bounded[cap][n]; cap = max_size + 1 stands for "no cap".
    std::vector<std::vector<std::vector<Partition>>> bounded(static_cast<std::size_t>(max_bound) + 2);
    for (int cap = 0; cap <= max_bound + 1; ++cap) {
        const int c = cap == max_bound + 1 ? max_size : cap;
        for (int n = 0; n <= max_size; ++n)
            bounded[static_cast<std::size_t>(cap)].push_back(
                n == 0 ? std::vector<Partition>{Partition{}} : oracle::partitions_bounded(n, c));
    }
    std::vector<int> caps(static_cast<std::size_t>(k - 1), 0);
    std::vector<Partition> seq(static_cast<std::size_t>(k));
    std::function<void(int, int)> fill = [&](int i, int left) {
        if (i == k) {
            fn(PartitionSequence(seq, BoundProfile{caps}));
            return;
        }
        const int cap_index = i == 0 ? max_bound + 1 : caps[static_cast<std::size_t>(i - 1)];
        for (int n = 0; n <= left; ++n) {
            for (const Partition& p : bounded[static_cast<std::size_t>(cap_index)][static_cast<std::size_t>(n)]) {
                seq[static_cast<std::size_t>(i)] = p;
                fill(i + 1, left - n);
            }
        }
    };
    std::function<void(int)> pick_caps = [&](int i) {
        if (i == k - 1) {
            fill(0, max_size);
            return;
        }
        for (int c = 0; c <= max_bound; ++c) {
            caps[static_cast<std::size_t>(i)] = c;
            pick_caps(i + 1);
        }
    };
    pick_caps(0);
}

}  // namespace

CheckResult selection_insertion_laws(int max_k, int max_size, int max_bound, int extra) {
    return timed("4", "selection/insertion: psi.phi = id, phi.psi = id, uniqueness, monotone A", 120.0,
                 [&](CheckResult& res) {
        std::int64_t sequences = 0;
        for (int k = 1; k <= max_k; ++k) {
            for_each_sequence(k, max_size, max_bound, [&](const PartitionSequence& s) {
                ++sequences;
                const SelectionTrace tr = select(s);
                const int a0 = tr.total;

                bool chain = tr.rows.back() == 1;
                for (int i = 2; i <= k; ++i) {
                    const auto ix = static_cast<std::size_t>(i - 1);
                    chain = chain && tr.rows[ix - 1] == tr.rows[ix] + s.bounds.cap(i) - tr.parts[ix];
                }
                for (int i = 0; i < k; ++i)
                    chain = chain && tr.parts[static_cast<std::size_t>(i)] ==
                                         s.seq[static_cast<std::size_t>(i)].part_at(tr.rows[static_cast<std::size_t>(i)]);
                res.expect(chain, "selection recurrence: " + str(s));

                const Removal rem = remove_selected(s);
                const SelectionTrace after = select(rem.rest);
                res.expect(after.total <= a0, "A increased after removal: " + str(s));
                bool below = true;
                for (int i = 0; i < k; ++i)
                    below = below && after.rows[static_cast<std::size_t>(i)] >= tr.rows[static_cast<std::size_t>(i)];
                res.expect(below, "selection after removal not strictly below: " + str(s));
                res.expect(insert(a0, rem.rest) == s, "phi(psi(s)) != s: " + str(s));

                if (a0 > 0)
                    res.expect(throws_code(ErrorCode::InsertionUnderflow, [&] { (void)insert(a0 - 1, s); }),
                               "insertion below A accepted: " + str(s));

                for (int a = a0; a <= a0 + extra; ++a) {
                    const PartitionSequence phi = insert(a, s);
                    const std::string tag = "a=" + std::to_string(a) + " " + str(s);
                    res.expect(phi.total_size() == s.total_size() + a, "size not increased by a: " + tag);
                    const Removal back = remove_selected(phi);
                    res.expect(back.trace.total == a && back.rest == s, "psi(phi(a,s)) != (a,s): " + tag);
                    const auto cands = oracle::all_insertions(a, s);
                    res.expect(cands.size() == 1, "expected exactly one valid insertion, found " +
                                                      std::to_string(cands.size()) + ": " + tag);
                    if (cands.size() == 1) {
                        res.expect(cands.front().result == phi, "insert() differs from the unique insertion: " + tag);
                        res.expect(cands.front().inserted == back.trace.parts,
                                   "inserted parts are not the selected parts: " + tag);
                    }
                }
            });
        }
        res.notes.push_back(std::to_string(sequences) + " sequences");
    });
}

// ---------------------------------------------------------------------------

CheckResult census_symmetries(int max_n, int max_k) {
    return timed("5", "census symmetries and rank sum rules", 180.0, [&](CheckResult& res) {
        const int m_min = -2;
        const int m_max = 4;
        // tables[k][m - m_min][n]
        std::vector<std::vector<std::vector<CensusTable>>> tables(static_cast<std::size_t>(max_k) + 1);
        for (int k = 1; k <= max_k; ++k)
            for (int m = m_min; m <= m_max; ++m) tables[static_cast<std::size_t>(k)].push_back(census_range(max_n, k, m));
        auto table = [&](int n, int k, int m) -> const CensusTable& {
            return tables[static_cast<std::size_t>(k)][static_cast<std::size_t>(m - m_min)][static_cast<std::size_t>(n)];
        };
        const auto p = p_table(max_n);

        // Partitions with at most j Durfee squares, by the cell oracle.
        std::vector<std::vector<std::int64_t>> at_most_squares(static_cast<std::size_t>(max_k),
                                                               std::vector<std::int64_t>(static_cast<std::size_t>(max_n) + 1));
        for (int n = 0; n <= max_n; ++n)
            for (const auto& lambda : oracle::partitions(n)) {
                const int c = oracle::durfee_square_count(lambda);
                for (int j = c; j < max_k; ++j) ++at_most_squares[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
            }

        for (int k = 1; k <= max_k; ++k) {
            for (int n = 0; n <= max_n; ++n) {
                const CensusTable& t0 = table(n, k, 0);
                for (int r = -(n + 1); r <= n + 1; ++r) {
                    res.expect(t0.at(r) == t0.at(-r), "first symmetry: n=" + std::to_string(n) + " k=" +
                                                          std::to_string(k) + " r=" + std::to_string(r));
                    const auto expected = p[static_cast<std::size_t>(n)] -
                                          at_most_squares[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)];
                    res.expect(t0.at_most(r) + t0.at_least(r + 1) == expected,
                               "sum rule m=0: n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
                for (int m = 1; m <= m_max; ++m) {
                    const CensusTable& t = table(n, k, m);
                    for (int r = -(n + 1); r <= n + 1; r += 3)
                        res.expect(t.at_most(r) + t.at_least(r + 1) == p[static_cast<std::size_t>(n)],
                                   "sum rule m>0: n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                       " m=" + std::to_string(m));
                }
            }
        }

        // Second symmetry over the region r > 0 or m <= 0, wherever both sides
        // fall inside the enumerated range.
        std::int64_t negative_m_mismatches = 0;
        std::int64_t restricted_mismatches = 0;
        for (int k = 1; k <= max_k; ++k) {
            for (int m = m_min; m + 2 <= m_max; ++m) {
                for (int r = -3; r <= 4; ++r) {
                    if (!(r > 0 || m <= 0)) continue;
                    for (int n = 0; n <= max_n; ++n) {
                        const int target = n - r - k * (m + 1);
                        if (target > max_n) continue;
                        const std::int64_t lhs = table(n, k, m).at_most(-r);
                        const std::int64_t rhs = target < 0 ? 0 : table(target, k, m + 2).at_least(-r);
                        const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                                " m=" + std::to_string(m) + " r=" + std::to_string(r);
                        if (lhs != rhs && m < 0) ++negative_m_mismatches;
                        res.expect(lhs == rhs, "second symmetry: " + tag + " lhs=" + std::to_string(lhs) +
                                                   " rhs=" + std::to_string(rhs));
                        if (m < 0 && target >= 0) {
                            // Restricted to the widths the Dyson map can reach.
                            std::int64_t reachable = 0;
                            for_each_partition(target, [&](const Partition& mu) {
                                auto d = try_decompose(mu, k, m + 2);
                                if (!d) return;
                                if (!std::all_of(d->widths.begin(), d->widths.end(),
                                                 [m](int w) { return w + 1 + m >= 1; }))
                                    return;
                                if (rank_km(*d).r >= -r) ++reachable;
                            });
                            if (lhs != reachable) ++restricted_mismatches;
                            res.expect(lhs == reachable, "width-restricted second symmetry: " + tag);
                        }
                    }
                }
            }
        }
        if (negative_m_mismatches > 0) {
            res.notes.push_back(std::to_string(negative_m_mismatches) +
                                " second-symmetry mismatches with m < 0: the right side also counts partitions "
                                "whose (m+2)-rectangles have height 1, which no m-rectangle can shrink to");
            res.notes.push_back(restricted_mismatches == 0
                                    ? "excluding those partitions, both sides agree everywhere"
                                    : std::to_string(restricted_mismatches) + " width-restricted mismatches");
        }
    });
}

// ---------------------------------------------------------------------------

CheckResult identity_verification() {
    return timed("6", "q-series identities: pentagonal, Schur, Rogers-Ramanujan, Andrews, Jacobi, H closed form", 120.0,
                 [](CheckResult& res) {
        auto run = [&](const IdentitySpec& spec, int order) {
            const VerificationReport rep = verify_identity(spec, order);
            std::ostringstream tag;
            tag << spec.name << " k=" << spec.k << " a=" << spec.a << " m=" << spec.m << " r=" << spec.r
                << " T=" << order;
            if (rep.mismatch_index)
                tag << " first mismatch at q^" << *rep.mismatch_index << ": " << rep.lhs_value << " vs "
                    << rep.rhs_value;
            res.expect(rep.success && rep.order == order, tag.str());
        };
        run({"pentagonal"}, 60);
        for (int k = 1; k <= 5; ++k) {
            run({"schur", k}, 60);
            run({"rr", k}, 60);
            run({"jacobi", k}, 100);
        }
        for (int k = 1; k <= 4; ++k)
            for (int a = 1; a <= k; ++a) run({"andrews", k, a}, 50);
        for (int k = 1; k <= 3; ++k) {
            run({"h_closed_form", k, 1, 0, 0}, 22);
            for (int m = 0; m <= 2; ++m)
                for (int r = 1; r <= 3; ++r) run({"h_closed_form", k, 1, m, r}, 22);
        }
    });
}

// ---------------------------------------------------------------------------

CheckResult equidistribution(int max_n, int max_k) {
    return timed("7", "(widths, a, b) equidistributed between (k,0)-rank and Garvan's rank", 60.0,
                 [&](CheckResult& res) {
        using Key = std::tuple<std::vector<int>, int, int>;
        for (int k = 1; k <= max_k; ++k) {
            for (int n = 0; n <= max_n; ++n) {
                std::map<Key, std::int64_t> ours;
                std::map<Key, std::int64_t> garvan;
                for_each_partition(n, [&](const Partition& lambda) {
                    if (!try_decompose(lambda, k, 0)) return;
                    const RankStats s = rank_km(lambda, k, 0);
                    const RankStats g = garvan_rank(lambda, k);
                    ++ours[{s.widths, s.a, s.b}];
                    ++garvan[{g.widths, g.a, g.b}];
                });
                res.expect(ours == garvan, "joint distribution differs at n=" + std::to_string(n) +
                                               " k=" + std::to_string(k));
            }
        }
    });
}

std::vector<CheckResult> acceptance_suite() {
    return {golden_examples(),     conjugation_involution(), dyson_bijection(),  selection_insertion_laws(),
            census_symmetries(),  identity_verification(),  equidistribution()};
}

// ---------------------------------------------------------------------------

CheckResult module_examples() {
    return timed("E", "worked examples for every module", 0.0, [](CheckResult& res) {
        // partition
        res.expect(Partition{5, 5, 4, 1}.size() == 15, "size (5,5,4,1)");
        res.expect(Partition{}.size() == 0, "size ()");
        res.expect(Partition{7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1}.size() == 51, "size of (7,7,6,6,5,4,3,3,3,2,1^5)");
        res.expect(Partition{3, 1}.conjugate() == Partition{2, 1, 1}, "conjugate (3,1)");
        res.expect(Partition{}.conjugate() == Partition{}, "conjugate ()");
        res.expect(Partition{5, 5, 4, 1}.part_at(3) == 4 && Partition{5, 5, 4, 1}.part_at(9) == 0, "part_at");
        res.expect(enumerate(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}},
                   "enumerate(4) order");
        res.expect(enumerate(0) == std::vector<Partition>{Partition{}}, "enumerate(0)");
        res.expect(enumerate(5).size() == 7, "p(5)");
        res.expect(p_table(5) == std::vector<std::int64_t>{1, 1, 2, 3, 5, 7}, "p_table(5)");
        res.expect(p_table(10).back() == 42, "p(10)");
        res.expect(q_table(1, 4) == std::vector<std::int64_t>{1, 1, 1, 1, 2}, "q_1(0..4)");
        res.expect(q_table(1, 0) == std::vector<std::int64_t>{1}, "q_1(0)");
        res.expect(q_table(2, 6) == std::vector<std::int64_t>{1, 1, 2, 2, 3, 4, 6}, "q_2(0..6)");

        // durfee
        const Partition two_squares{9, 8, 8, 6, 5, 4, 3, 2, 2, 2, 1, 1, 1, 1, 1};
        const DurfeeDecomposition d = decompose(two_squares, 2, 0);
        res.expect(d.widths == std::vector<int>{5, 2} && d.sides[0] == Partition{4, 3, 3, 1} &&
                       d.sides[1] == Partition{2, 1} && d.below == Partition{2, 2, 2, 1, 1, 1, 1, 1},
                   "decompose k=2 example");
        const DurfeeDecomposition empty = decompose(Partition{}, 3, 1);
        res.expect(empty.widths == std::vector<int>{0, 0, 0} && empty.below.empty(), "decompose () with m=1");
        res.expect(decompose(Partition{7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1}, 3, 1).widths ==
                       std::vector<int>{4, 3, 1},
                   "greedy 1-rectangles of (7,7,6,6,5,4,3,3,3,2,1^5)");
        res.expect(compose(DurfeeDecomposition{0, {5, 2}, {Partition{5, 4, 3, 2}, Partition{3, 1}},
                                               Partition{2, 2, 1, 1, 1}}) ==
                       Partition{10, 9, 8, 7, 5, 5, 3, 2, 2, 1, 1, 1},
                   "compose of the conjugated k=2 example");
        res.expect(compose(DurfeeDecomposition{1, {0}, {Partition{}}, Partition{}}).empty(), "compose empty");
        res.expect(profile(DurfeeDecomposition{0, {5, 3, 2}, {{}, {}, {}}, {}}).p == std::vector<int>{2, 1},
                   "profile (5,3,2)");

        // select_insert
        const PartitionSequence s1({Partition{4, 3, 3, 1}, Partition{2, 1}}, BoundProfile{{3}});
        const SelectionTrace t1 = select(s1);
        res.expect(t1.rows == std::vector<int>{2, 1} && t1.parts == std::vector<int>{3, 2} && t1.total == 5,
                   "select example");
        const PartitionSequence left({Partition{3, 3, 2, 1}, Partition{3, 2}, Partition{2, 2}, Partition{2}},
                                     BoundProfile{{4, 2, 3}});
        const SelectionTrace t4 = select(left);
        res.expect(t4.parts == std::vector<int>{1, 2, 2, 2} && t4.total == 7, "selection with p=(4,2,3)");
        const PartitionSequence right(
            {Partition{4, 3, 2, 2, 1}, Partition{2, 1}, Partition{}, Partition{}, Partition{6}},
            BoundProfile{{2, 0, 2, 6}});
        const SelectionTrace t4r = select(right);
        res.expect(t4r.rows == std::vector<int>{5, 3, 3, 1, 1} && t4r.total == 7, "selection with p=(2,0,2,6)");
        const PartitionSequence dup = insert(7, left);
        res.expect(dup == PartitionSequence({Partition{3, 3, 2, 1, 1}, Partition{3, 2, 2}, Partition{2, 2, 2},
                                             Partition{2, 2}},
                                            left.bounds),
                   "inserting A duplicates every selected part");
        const Removal r1 = remove_selected(s1);
        res.expect(r1.trace.total == 5 &&
                       r1.rest == PartitionSequence({Partition{4, 3, 1}, Partition{1}}, BoundProfile{{3}}),
                   "remove_selected example 1");
        const Removal r2 = remove_selected(r1.rest);
        res.expect(r2.trace.total == 2 &&
                       r2.rest == PartitionSequence({Partition{4, 3}, Partition{}}, BoundProfile{{3}}),
                   "remove_selected example 2");
        res.expect(insert(2, r2.rest) == r1.rest, "insert(2, ((4,3),()))");
        res.expect(insert(3, r2.rest) ==
                       PartitionSequence({Partition{4, 3, 2}, Partition{1}}, BoundProfile{{3}}),
                   "insert(3, ((4,3),()))");
        res.expect(insert(8, PartitionSequence({Partition{4, 3, 2}, Partition{1}}, BoundProfile{{3}})) ==
                       PartitionSequence({Partition{5, 4, 3, 2}, Partition{3, 1}}, BoundProfile{{3}}),
                   "insert(8, ((4,3,2),(1)))");
        const IteratedRemoval it = iterate_remove(s1, 2);
        res.expect(it.totals == std::vector<int>{5, 2} && it.rest == r2.rest, "iterate_remove twice");
        res.expect(iterate_remove(s1, 0).rest == s1, "iterate_remove zero times");

        // rank
        res.expect(dyson_rank(Partition{4, 3, 3, 2, 2, 1}) == -2, "dyson rank of (4,3,3,2,2,1)");
        res.expect(dyson_rank(Partition{2, 2}) == 0 && dyson_rank(Partition{6}) == 5, "dyson rank trivial");
        res.expect(throws_code(ErrorCode::EmptyPartition, [] { (void)dyson_rank(Partition{}); }),
                   "dyson rank of ()");
        const RankStats s31 = rank_km(Partition{7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1}, 3, 1);
        res.expect(s31.a == 3 && s31.b == 4 && s31.r == -1, "(3,1)-rank of (7,7,6,6,5,4,3,3,3,2,1^5)");
        res.expect(rank_km(Partition{}, 2, 1) == RankStats{0, 0, 0, {0, 0}}, "(2,1)-rank of ()");
        const RankStats g = garvan_rank(Partition{5, 5, 4, 1}, 1);
        res.expect(g.a == 2 && g.b == 1 && g.r == 1, "garvan rank of (5,5,4,1)");

        // bijections
        res.expect(dyson_map(Partition{1}, 0).empty(), "d_0(1)");
        const Partition dyson_example{10, 8, 8, 6, 5, 3, 3, 2, 2, 2, 1, 1, 1};
        res.expect(gen_dyson(dyson_example, 2, 0, 0) == Partition{9, 8, 7, 7, 5, 4, 3, 2, 2, 1, 1, 1},
                   "D_0^{2,0} example");
        res.expect(gen_dyson(Partition{11, 10, 9, 8, 6, 6, 5, 4, 3, 3, 3, 2, 2, 1, 1}, 3, -3, 1) ==
                       Partition{10, 10, 9, 8, 7, 6, 5, 5, 4, 4, 3, 2, 2, 2, 1, 1},
                   "D_1^{3,-3} example");
        res.expect(gen_dyson(Partition{8, 7, 7, 6, 6, 5, 5, 4, 4, 4, 4, 3, 3, 3, 2, 1, 1, 1, 1}, 2, 2, 3) ==
                       Partition{7, 7, 6, 6, 5, 5, 4, 4, 3, 3, 3, 3, 3, 2, 2, 2, 1},
                   "D_3^{2,2} example");
        res.expect(gen_dyson_inverse(gen_dyson(dyson_example, 2, 0, 0), 2, 0, 0) == dyson_example, "D inverse round trip");

        // qseries
        QSeries geometric(10);
        for (int n = 0; n <= 10; ++n) geometric.add_term(n, 1);
        res.expect(pochhammer(1, 10) * geometric == QSeries::one(10), "(1-q) * 1/(1-q)");
        res.expect(pochhammer_infinite(7) == QSeries({1, -1, -1, 0, 0, 1, 0, 1}), "(q)_inf to q^7");
        res.expect(pochhammer(0, 5) == QSeries::one(5), "(q)_0");
        res.expect(inv_euler(5) == QSeries({1, 1, 2, 3, 5, 7}), "1/(q)_inf to q^5");
        res.expect(inv_euler(10)[10] == 42, "p(10) from 1/(q)_inf");
        res.expect(multisum_lhs(1, std::nullopt, 8) == QSeries::one(8), "k=1 multisum");
        res.expect(multisum_lhs(2, std::nullopt, 4) == QSeries({1, 1, 1, 1, 2}), "k=2 multisum to q^4");
        res.expect(theta_sum(2, 11) == QSeries({1, 0, -1, -1, 0, 0, 0, 0, 0, 1, 0, 1}), "k=2 theta exponents");
        res.expect(rr_product(2, 2, 6) == QSeries({1, 1, 1, 1, 2, 2, 3}), "first Rogers-Ramanujan product");
        res.expect(rr_product(2, 1, 6)[1] == 0, "second Rogers-Ramanujan product has no q^1");
        res.expect(rr_product(1, 1, 9) == QSeries::one(9), "k=1 product is empty");
        const auto [th1, pr1] = jacobi_specialization(1, 12);
        const QSeries pent({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
        res.expect(th1 == pent && pr1 == pent, "Jacobi k=1 to q^12");
        res.expect(h_census_series(1, 0, 0, Tail::AtMost, 4)[4] == 3, "h(4,1,0,<=0)");

        // census
        const CensusTable c4 = census(4, 1, 0);
        res.expect(c4.rows == std::map<int, std::int64_t>{{-3, 1}, {-1, 1}, {0, 1}, {1, 1}, {3, 1}},
                   "Dyson rank census of n=4");
        const CensusTable c0 = census(0, 1, 1);
        res.expect(c0.rows == std::map<int, std::int64_t>{{0, 1}}, "census of n=0, m=1");
        res.expect(census(10, 2, 0).total() == p_table(10)[10] - q_table(1, 10)[10], "census n=10 k=2 total");
    });
}

CheckResult module_properties() {
    return timed("P", "module invariants", 0.0, [](CheckResult& res) {
        for (int n = 0; n <= 30; ++n) {
            for_each_partition(n, [&](const Partition& lambda) {
                const Partition c = lambda.conjugate();
                res.expect(c.conjugate() == lambda && c.size() == n, "conjugation involution " + str(lambda));
                res.expect(c.part_at(1) == lambda.length() && c.length() == lambda.largest(),
                           "conjugate first part / length " + str(lambda));
            });
        }
        for (int n = 0; n <= 20; ++n) {
            const auto ours = enumerate(n);
            res.expect(ours == oracle::partitions(n), "enumeration order n=" + std::to_string(n));
            for (const auto& lambda : ours)
                res.expect(lambda.conjugate() == oracle::conjugate_by_cells(lambda), "conjugate by cells " + str(lambda));
        }
        const auto p = p_table(200);
        res.expect(p[100] == 190569292 && p[200] == 3972999029388LL, "p(100), p(200)");
        res.expect(inv_euler(100) == QSeries(std::vector<std::int64_t>(p.begin(), p.begin() + 101)),
                   "1/(q)_inf matches p(n)");

        const int qn = 22;
        std::vector<std::vector<std::int64_t>> q;
        for (int k = 1; k <= 5; ++k) q.push_back(q_table(k, qn));
        for (int n = 0; n <= qn; ++n) {
            for (int k = 1; k <= 5; ++k) {
                const auto here = q[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)];
                if (k > 1) res.expect(here >= q[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(n)], "q_k monotone");
                if (k >= n) res.expect(here == p[static_cast<std::size_t>(n)], "q_k = p for k >= n");
                res.expect(here <= p[static_cast<std::size_t>(n)], "q_k <= p");
            }
        }
        for (int k = 2; k <= 5; ++k) {
            const QSeries lhs = multisum_lhs(k, std::nullopt, qn);
            res.expect(lhs == QSeries(q[static_cast<std::size_t>(k - 2)]),
                       "multisum k=" + std::to_string(k) + " counts at most k-1 Durfee squares");
        }
        res.expect(multisum_lhs(2, std::nullopt, 30) == QSeries(q_table(1, 30)), "multisum k=2 vs q_1 at T=30");

        for (int n = 0; n <= 25; ++n) {
            for_each_partition(n, [&](const Partition& lambda) {
                res.expect(durfee_square_count(lambda) == oracle::durfee_square_count(lambda),
                           "Durfee square count " + str(lambda));
                for (int m = -1; m <= 3; ++m) {
                    const auto widths = oracle::rectangle_widths(lambda, 4, m);
                    for (int k = 1; k <= 4; ++k) {
                        auto d = try_decompose(lambda, k, m);
                        const bool exists = static_cast<int>(widths.size()) >= k;
                        res.expect(d.has_value() == exists, "decomposition existence " + str(lambda));
                        if (!d) break;
                        res.expect(d->widths == std::vector<int>(widths.begin(), widths.begin() + k),
                                   "widths vs cell oracle " + str(lambda) + " m=" + std::to_string(m));
                        res.expect(compose(*d) == lambda, "compose(decompose) " + str(lambda));
                    }
                }
                if (!lambda.empty()) {
                    for (int m = -1; m <= 2; ++m) {
                        auto d = try_decompose(lambda, 1, m);
                        if (!d) continue;
                        // b counts rows below the rectangle, so the shift by m
                        // needs the rectangle to fit inside the first column.
                        if (lambda.length() >= d->height(1))
                            res.expect(rank_km(*d).r == dyson_rank(lambda) + m, "r_{1,m} = r + m " + str(lambda));
                        else
                            res.expect(rank_km(*d).b == 0, "b = 0 for a rectangle taller than " + str(lambda));
                    }
                }
            });
        }

        for (int n = 0; n <= 20; ++n) {
            for_each_partition(n, [&](const Partition& lambda) {
                if (!lambda.empty())
                    res.expect(gen_conjugate(lambda, 1) == lambda.conjugate(), "C^1 = conjugation " + str(lambda));
                for (int k = 1; k <= 3; ++k) {
                    if (!try_decompose(lambda, k, 0)) break;
                    const Partition mu = garvan_conjugate(lambda, k);
                    res.expect(garvan_conjugate(mu, k) == lambda, "Garvan conjugation involution " + str(lambda));
                    res.expect(garvan_rank(mu, k).r == -garvan_rank(lambda, k).r, "Garvan rank negated " + str(lambda));
                    res.expect(garvan_rank(mu, k).widths == garvan_rank(lambda, k).widths, "Garvan widths " + str(lambda));
                }
                if (lambda.empty()) return;
                for (int m = -1; m <= 2; ++m) {
                    for (int r = -3; r <= 3; ++r) {
                        auto d = try_decompose(lambda, 1, m);
                        if (!d || d->widths[0] == 0 || rank_km(*d).r > -r) continue;
                        const Partition mu = gen_dyson(lambda, 1, m, r);
                        res.expect(mu == dyson_map(lambda, -r - m), "D^{1,m}_r = d_{-r-m} " + str(lambda));
                        res.expect(dyson_map_inverse(mu, -r - m) == lambda, "d inverse " + str(lambda));
                    }
                }
            });
        }
    });
}

std::string format(const CheckResult& r) {
    std::ostringstream out;
    out << (r.ok() ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << "  (" << r.cases << " cases, ";
    if (r.failed_cases > 0) out << r.failed_cases << " failed, ";
    out << std::fixed;
    out.precision(2);
    out << r.seconds << " s";
    if (r.budget_seconds > 0.0) out << " of " << r.budget_seconds << " s";
    out << ")";
    if (!r.within_budget()) out << "\n      over time budget";
    for (const auto& f : r.failures) out << "\n      failed: " << f;
    for (const auto& n : r.notes) out << "\n      note: " << n;
    return out.str();
}

std::vector<CheckResult> selftest_suite() {
    auto out = acceptance_suite();
    CheckResult wide = selection_insertion_laws(3, 16, 4, 10);
    wide.id = "4+";
    wide.budget_seconds = 0.0;
    out.push_back(wide);
    out.push_back(module_examples());
    out.push_back(module_properties());
    return out;
}

}  // namespace kmrank::checks
