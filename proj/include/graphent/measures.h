#ifndef GRAPHENT_MEASURES_H
#define GRAPHENT_MEASURES_H

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphent/graph.h"
#include "graphent/rational.h"
#include "graphent/stabilizer.h"
#include "graphent/state.h"
#include "graphent/subset.h"

namespace graphent {

enum class Engine { kDense, kStabilizer, kBoth };

const char *engine_name(Engine e);
/// "dense" | "stabilizer" | "both"; throws Syntax otherwise.
Engine parse_engine(std::string_view name);

/// Largest subset size for which Q_m is a distinct quantity: floor(N/2).
constexpr size_t max_valid_m(size_t n) {
    return n / 2;
}

/// Tolerated excursion of a floating purity outside [0, 1] before clamping.
constexpr double kPurityClampTolerance = 1e-9;
/// Dense and exact purities must agree this closely.
constexpr double kEngineAgreementTolerance = 1e-10;

/// Scott measure
///   Q_m = C(N,m)^-1 * sum_{|S|=m} 2^m / (2^m - 1) * (1 - Tr[rho_S^2])
/// from the purities of all C(N,m) size-m subsets, in any order.
///
/// Throws LengthMismatch if purities.size() != C(N,m), PurityOutOfRange for a
/// value more than 1e-9 outside [0, 1] (smaller excursions are clamped), and
/// MOutOfRange unless 1 <= m <= N-1. The floor(N/2) window is not applied
/// here; see validate_m.
double q_m(std::span<const double> purities, size_t n, size_t m);

/// Exact Q_m from dyadic purities. Throws Overflow if the exact value does not
/// fit 64-bit numerator and denominator.
Rational q_m_exact(std::span<const DyadicPurity> purities, size_t n, size_t m);

struct MValidity {
    /// m > floor(N/2): Q_m is the complement multiple of Q_{N-m}.
    bool complement = false;
    size_t partner_m = 0;
};

/// Accepts 1 <= m <= floor(N/2); larger m only with allow_complement.
/// Throws EmptyMRange for N < 2 and MOutOfRange otherwise.
MValidity validate_m(size_t n, size_t m, bool allow_complement);

/// Q_{N-m} / Q_m for every pure state, i.e.
///   [2^(N-m) / (2^(N-m) - 1)] / [2^m / (2^m - 1)].
Rational complement_ratio(size_t n, size_t m);

struct QmRequest {
    std::vector<size_t> ms;  // empty means 1..floor(N/2)
    bool allow_complement = false;
    Engine engine = Engine::kBoth;
};

struct PurityEntry {
    SubsetMask subset;
    double value = 0;
    std::optional<DyadicPurity> exact;  // stabilizer path only
    Engine engine = Engine::kDense;
};

struct QmReport {
    size_t n = 0;
    Engine engine = Engine::kDense;
    std::map<size_t, double> values;
    std::map<size_t, Rational> exact_values;
    /// Ascending subset size, then ascending mask.
    std::vector<PurityEntry> purities;
    /// One note per m > floor(N/2) computed under allow_complement.
    std::map<size_t, std::string> complement_notes;
    /// Largest |dense - exact| seen when engine == kBoth.
    std::optional<double> max_engine_discrepancy;
};

/// Q profile of the graph state of g. Dense paths need n <= 14.
QmReport q_profile(const Graph &g, const QmRequest &req);
/// Q profile of an arbitrary pure state. Throws EngineMismatch when the
/// stabilizer engine is requested explicitly; kBoth falls back to dense.
QmReport q_profile(const PureState &st, const QmRequest &req);

/// Per-subset purities only, for the given subset sizes (no Q values, no
/// window check).
QmReport purity_table(const Graph &g, std::span<const size_t> sizes, Engine engine);
QmReport purity_table(const PureState &st, std::span<const size_t> sizes);

/// Q_1 of st.
double meyer_wallach(const PureState &st);

}  // namespace graphent

#endif
