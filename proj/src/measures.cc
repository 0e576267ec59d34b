#include "graphent/measures.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "graphent/error.h"

namespace graphent {

namespace {

void check_m_bounds(size_t n, size_t m) {
    if (n < 2) {
        throw Error(ErrorCode::kEmptyMRange, "N=" + std::to_string(n) + " admits no subset size m");
    }
    if (m < 1 || m > n - 1) {
        throw Error(ErrorCode::kMOutOfRange, "m=" + std::to_string(m) + " outside 1.." + std::to_string(n - 1) +
                                                 " for N=" + std::to_string(n));
    }
}

/// 2^m / (2^m - 1).
double normalizer(size_t m) {
    const double p = std::ldexp(1.0, static_cast<int>(m));
    return p / (p - 1.0);
}

using PurityFn = std::function<PurityEntry(SubsetMask)>;

std::vector<size_t> sorted_sizes(std::span<const size_t> sizes) {
    std::set<size_t> unique(sizes.begin(), sizes.end());
    return {unique.begin(), unique.end()};
}

QmReport build_report(size_t n, Engine engine, const std::vector<size_t> &sizes, const PurityFn &purity_of,
                      bool with_values, bool allow_complement) {
    QmReport report;
    report.n = n;
    report.engine = engine;
    for (size_t m : sizes) {
        std::vector<double> values;
        std::vector<DyadicPurity> exact;
        for_each_subset_of_size(n, m, [&](SubsetMask s) {
            PurityEntry e = purity_of(s);
            values.push_back(e.value);
            if (e.exact) {
                exact.push_back(*e.exact);
            }
            report.purities.push_back(e);
        });
        if (!with_values) {
            continue;
        }
        report.values[m] = q_m(values, n, m);
        if (exact.size() == values.size()) {
            try {
                report.exact_values.emplace(m, q_m_exact(exact, n, m));
            } catch (const Error &err) {
                if (err.code() != ErrorCode::kOverflow) {
                    throw;
                }
            }
        }
        MValidity validity = validate_m(n, m, allow_complement);
        if (validity.complement) {
            report.complement_notes[m] =
                "m=" + std::to_string(m) + " exceeds floor(N/2)=" + std::to_string(max_valid_m(n)) + "; Q_" +
                std::to_string(m) + " = " + complement_ratio(n, validity.partner_m).to_string() + " * Q_" +
                std::to_string(validity.partner_m) + " and carries no information beyond it";
        }
    }
    return report;
}

std::vector<size_t> requested_ms(size_t n, const QmRequest &req) {
    std::vector<size_t> ms = req.ms;
    if (ms.empty()) {
        if (max_valid_m(n) == 0) {
            validate_m(n, 1, req.allow_complement);
        }
        for (size_t m = 1; m <= max_valid_m(n); m++) {
            ms.push_back(m);
        }
    }
    ms = sorted_sizes(ms);
    for (size_t m : ms) {
        validate_m(n, m, req.allow_complement);
    }
    return ms;
}

void check_sizes(size_t n, std::span<const size_t> sizes) {
    for (size_t m : sizes) {
        if (m > n) {
            throw Error(ErrorCode::kMOutOfRange, "subset size " + std::to_string(m) + " exceeds N=" + std::to_string(n));
        }
    }
}

PurityFn graph_purity_fn(const Graph &g, Engine engine, std::optional<PureState> &dense, double &worst) {
    if (engine != Engine::kStabilizer) {
        dense.emplace(graph_state(g));
    }
    return [&g, engine, &dense, &worst](SubsetMask s) {
        PurityEntry e;
        e.subset = s;
        e.engine = engine;
        if (engine == Engine::kDense) {
            e.value = purity(*dense, s);
            return e;
        }
        e.exact = purity_exact(g, s);
        e.value = e.exact->value();
        if (engine == Engine::kBoth) {
            const double diff = std::abs(purity(*dense, s) - e.value);
            worst = std::max(worst, diff);
            if (diff > kEngineAgreementTolerance) {
                throw Error(ErrorCode::kEngineDisagreement, "dense and stabilizer purities differ by " +
                                                                std::to_string(diff) + " on subset " +
                                                                subset_label(s));
            }
        }
        return e;
    };
}

}  // namespace

const char *engine_name(Engine e) {
    switch (e) {
        case Engine::kDense:
            return "dense";
        case Engine::kStabilizer:
            return "stabilizer";
        case Engine::kBoth:
            return "both";
    }
    return "unknown";
}

Engine parse_engine(std::string_view name) {
    if (name == "dense") {
        return Engine::kDense;
    }
    if (name == "stabilizer") {
        return Engine::kStabilizer;
    }
    if (name == "both") {
        return Engine::kBoth;
    }
    throw Error(ErrorCode::kSyntax, "unknown engine '" + std::string(name) + "'");
}

double q_m(std::span<const double> purities, size_t n, size_t m) {
    check_m_bounds(n, m);
    const uint64_t count = binomial(n, m);
    if (purities.size() != count) {
        throw Error(ErrorCode::kLengthMismatch, "expected C(" + std::to_string(n) + "," + std::to_string(m) +
                                                    ")=" + std::to_string(count) + " purities, got " +
                                                    std::to_string(purities.size()));
    }
    double total = 0;
    for (double p : purities) {
        if (!(p >= -kPurityClampTolerance && p <= 1.0 + kPurityClampTolerance)) {
            throw Error(ErrorCode::kPurityOutOfRange, "purity " + std::to_string(p) + " outside [0, 1]");
        }
        total += 1.0 - std::clamp(p, 0.0, 1.0);
    }
    return normalizer(m) * total / static_cast<double>(count);
}

Rational q_m_exact(std::span<const DyadicPurity> purities, size_t n, size_t m) {
    check_m_bounds(n, m);
    const uint64_t count = binomial(n, m);
    if (purities.size() != count) {
        throw Error(ErrorCode::kLengthMismatch, "expected C(" + std::to_string(n) + "," + std::to_string(m) +
                                                    ")=" + std::to_string(count) + " purities, got " +
                                                    std::to_string(purities.size()));
    }
    if (count > static_cast<uint64_t>(INT64_MAX) || m > 62) {
        throw Error(ErrorCode::kOverflow, "too many subsets for exact evaluation");
    }
    Rational total = 0;
    for (const DyadicPurity &p : purities) {
        if (p.exponent > 62) {
            throw Error(ErrorCode::kOverflow, "purity exponent too large for exact evaluation");
        }
        total = total + Rational(1) - Rational(1, int64_t{1} << p.exponent);
    }
    const int64_t pow_m = int64_t{1} << m;
    return total * Rational(pow_m, pow_m - 1) / Rational(static_cast<int64_t>(count));
}

MValidity validate_m(size_t n, size_t m, bool allow_complement) {
    check_m_bounds(n, m);
    if (m <= max_valid_m(n)) {
        return MValidity{false, n - m};
    }
    if (!allow_complement) {
        throw Error(ErrorCode::kMOutOfRange,
                    "m=" + std::to_string(m) + " exceeds floor(N/2)=" + std::to_string(max_valid_m(n)) + " for N=" +
                        std::to_string(n) + "; valid sizes are m=1.." + std::to_string(max_valid_m(n)) + ", and Q_" +
                        std::to_string(m) + " only restates Q_" + std::to_string(n - m) +
                        " (pass allow_complement to compute it anyway)");
    }
    return MValidity{true, n - m};
}

Rational complement_ratio(size_t n, size_t m) {
    check_m_bounds(n, m);
    if (n > kMaxVertices) {
        throw Error(ErrorCode::kOverflow, "N exceeds " + std::to_string(kMaxVertices));
    }
    const __int128 big = __int128{1} << (n - m);
    const __int128 small = __int128{1} << m;
    return Rational::reduce(big * (small - 1), (big - 1) * small);
}

QmReport q_profile(const Graph &g, const QmRequest &req) {
    const std::vector<size_t> ms = requested_ms(g.n(), req);
    std::optional<PureState> dense;
    double worst = 0;
    PurityFn fn = graph_purity_fn(g, req.engine, dense, worst);
    QmReport report = build_report(g.n(), req.engine, ms, fn, true, req.allow_complement);
    if (req.engine == Engine::kBoth) {
        report.max_engine_discrepancy = worst;
    }
    return report;
}

QmReport q_profile(const PureState &st, const QmRequest &req) {
    if (req.engine == Engine::kStabilizer) {
        throw Error(ErrorCode::kEngineMismatch, "the stabilizer engine needs a graph, not a raw state");
    }
    const std::vector<size_t> ms = requested_ms(st.n(), req);
    PurityFn fn = [&st](SubsetMask s) {
        PurityEntry e;
        e.subset = s;
        e.value = purity(st, s);
        e.engine = Engine::kDense;
        return e;
    };
    return build_report(st.n(), Engine::kDense, ms, fn, true, req.allow_complement);
}

QmReport purity_table(const Graph &g, std::span<const size_t> sizes, Engine engine) {
    check_sizes(g.n(), sizes);
    std::optional<PureState> dense;
    double worst = 0;
    PurityFn fn = graph_purity_fn(g, engine, dense, worst);
    QmReport report = build_report(g.n(), engine, sorted_sizes(sizes), fn, false, false);
    if (engine == Engine::kBoth) {
        report.max_engine_discrepancy = worst;
    }
    return report;
}

QmReport purity_table(const PureState &st, std::span<const size_t> sizes) {
    check_sizes(st.n(), sizes);
    PurityFn fn = [&st](SubsetMask s) {
        PurityEntry e;
        e.subset = s;
        e.value = purity(st, s);
        return e;
    };
    return build_report(st.n(), Engine::kDense, sorted_sizes(sizes), fn, false, false);
}

double meyer_wallach(const PureState &st) {
    check_m_bounds(st.n(), 1);
    std::vector<double> purities;
    for (size_t q = 0; q < st.n(); q++) {
        purities.push_back(purity(st, SubsetMask{uint64_t{1} << q}));
    }
    return q_m(purities, st.n(), 1);
}

}  // namespace graphent
