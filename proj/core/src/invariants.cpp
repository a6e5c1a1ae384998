#include "isospec/invariants.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace isospec {

namespace {

// Largest word length the bitmask enumeration supports; far beyond anything
// tractable to enumerate anyway.
constexpr int kMaxWordLength = 62;

void require_two_components(const SkewPencil& j, const char* op) {
    if (j.size() != 2) {
        throw UnsupportedRankError(std::string(op) + " is defined for pencils with exactly two components, got r = " +
                                   std::to_string(j.size()));
    }
}

// Trace of the product selected by the bits of `word`: bit i = 0 picks m1 and
// bit i = 1 picks m2 as the (i+1)-th factor.
double word_trace(const Mat& m1, const Mat& m2, std::uint64_t word, int len) {
    const Mat& first = (word & 1u) ? m2 : m1;
    if (len == 1) {
        return first.trace();
    }
    Mat prod = first;
    for (int i = 1; i + 1 < len; ++i) {
        prod = prod * (((word >> i) & 1u) ? m2 : m1);
    }
    const Mat& last = ((word >> (len - 1)) & 1u) ? m2 : m1;
    return prod.transpose().cwiseProduct(last).sum();
}

struct CycleInfo {
    bool minimal = false; ///< word is the smallest among its cyclic rotations
    int size = 0;         ///< number of distinct rotations
};

CycleInfo cycle_info(std::uint64_t w, int k) {
    std::uint64_t cur = w;
    int period = 0;
    for (int i = 1; i <= k; ++i) {
        cur = (cur >> 1) | ((cur & 1u) << (k - 1));
        if (cur < w) {
            return {false, 0};
        }
        if (cur == w) {
            period = i;
            break;
        }
    }
    // The class of w consists of its `period` distinct rotations.
    return {true, period};
}

std::uint64_t next_combination(std::uint64_t w) {
    const std::uint64_t c = w & (~w + 1);
    const std::uint64_t r = w + c;
    return (((r ^ w) >> 2) / c) | r;
}

// Calls fn(word) for every length-k word with `ones` set bits.
template <typename Fn>
void for_each_word(int k, int ones, Fn&& fn) {
    if (ones == 0) {
        fn(std::uint64_t{0});
        return;
    }
    const std::uint64_t limit = std::uint64_t{1} << k;
    std::uint64_t w = (std::uint64_t{1} << ones) - 1;
    while (w < limit) {
        fn(w);
        w = next_combination(w);
    }
}

void check_word_args(int a, int b) {
    if (a < 0 || b < 0 || a + b < 1) {
        throw DomainError("word exponents must satisfy a, b >= 0 and a + b >= 1");
    }
    if (a + b > kMaxWordLength) {
        throw DomainError("word length " + std::to_string(a + b) + " exceeds the enumeration limit");
    }
}

} // namespace

const InvariantEntry* InvariantTable::find(int a, int b) const {
    for (const auto& e : entries) {
        if (e.a == a && e.b == b) {
            return &e;
        }
    }
    return nullptr;
}

double p_ab(const SkewPencil& j, int a, int b) {
    require_two_components(j, "p_ab");
    check_word_args(a, b);
    const int k = a + b;
    const Mat& m1 = j[0].entries();
    const Mat& m2 = j[1].entries();

    // Cyclic rotations of a word share the same trace, so each equivalence
    // class is evaluated once at its minimal representative and weighted by
    // the class size.
    double total = 0.0;
    for_each_word(k, b, [&](std::uint64_t w) {
        const CycleInfo info = cycle_info(w, k);
        if (info.minimal) {
            total += static_cast<double>(info.size) * word_trace(m1, m2, w, k);
        }
    });
    return total;
}

InvariantTable invariant_table(const SkewPencil& j) {
    require_two_components(j, "invariant_table");
    InvariantTable table;
    table.m = j.dim();
    for (int k = 2; k <= table.m; k += 2) {
        for (int a = 0; a <= k; ++a) {
            table.entries.push_back({a, k - a, p_ab(j, a, k - a)});
        }
    }
    return table;
}

IsospectralReport is_isospectral(const SkewPencil& j, const SkewPencil& j2, double tol) {
    if (j.dim() != j2.dim()) {
        throw DimensionError("pencils have different dimensions " + std::to_string(j.dim()) + " and " +
                             std::to_string(j2.dim()));
    }
    if (j.size() != j2.size()) {
        throw DimensionError("pencils have different component counts");
    }
    const InvariantTable ta = invariant_table(j);
    const InvariantTable tb = invariant_table(j2);

    IsospectralReport report;
    report.isospectral = true;
    for (std::size_t i = 0; i < ta.entries.size(); ++i) {
        const double va = ta.entries[i].value;
        const double vb = tb.entries[i].value;
        const double dev = std::abs(va - vb) / (1.0 + std::max(std::abs(va), std::abs(vb)));
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_a = ta.entries[i].a;
            report.worst_b = ta.entries[i].b;
        }
    }
    report.isospectral = report.max_deviation <= tol;
    return report;
}

double q_poly(const SkewPencil& j) {
    require_two_components(j, "q_poly");
    const Mat a2 = j[0].entries() * j[0].entries();
    const Mat b2 = j[1].entries() * j[1].entries();
    return a2.transpose().cwiseProduct(b2).sum();
}

double dq_along_y(const SkewPencil& j) {
    require_two_components(j, "dq_along_y");
    const Mat& a = j[0].entries();
    const Mat& b = j[1].entries();
    const Mat a3 = a * a * a;
    const Mat b2 = b * b;
    const Mat t1 = a3 * b * a * b2;
    const Mat t2 = a * b * a3 * b2;
    return (t1 - t2).trace();
}

double dp_ab_directional(const SkewPencil& j, const SkewPencil& eps, int a, int b) {
    require_two_components(j, "dp_ab_directional");
    if (eps.dim() != j.dim() || eps.size() != j.size()) {
        throw DimensionError("direction must have the same shape as the pencil");
    }
    check_word_args(a, b);
    const int k = a + b;
    const Mat& m1 = j[0].entries();
    const Mat& m2 = j[1].entries();

    // d p_{a,b}(eps) = (a+b) * ( sum over words with a-1 ones of
    // tr(eps_1 * word) + sum over words with b-1 twos of tr(eps_2 * word) ).
    auto prefixed_sum = [&](const Mat& prefix, int ones) {
        double sum = 0.0;
        if (k == 1) {
            return prefix.trace();
        }
        for_each_word(k - 1, ones, [&](std::uint64_t w) {
            Mat prod = prefix;
            for (int i = 0; i + 1 < k - 1; ++i) {
                prod = prod * (((w >> i) & 1u) ? m2 : m1);
            }
            const Mat& last = ((w >> (k - 2)) & 1u) ? m2 : m1;
            sum += prod.transpose().cwiseProduct(last).sum();
        });
        return sum;
    };

    double total = 0.0;
    if (a > 0) {
        total += prefixed_sum(eps[0].entries(), b);
    }
    if (b > 0) {
        total += prefixed_sum(eps[1].entries(), b - 1);
    }
    return static_cast<double>(k) * total;
}

std::vector<double> eigen_multiset(const SkewMatrix& a) {
    const int m = a.dim();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.entries().transpose() * a.entries(),
                                                          Eigen::EigenvaluesOnly);
    const Vec evals = solver.eigenvalues(); // ascending, all >= 0 up to rounding
    std::vector<double> mus;
    mus.reserve(static_cast<std::size_t>(m / 2));
    // Nonzero rotation speeds appear as eigenvalue pairs; picking every other
    // entry from the top collapses each pair to a single mu.
    for (int i = 0; i < m / 2; ++i) {
        mus.push_back(std::sqrt(std::max(0.0, evals[m - 1 - 2 * i])));
    }
    return mus;
}

} // namespace isospec
