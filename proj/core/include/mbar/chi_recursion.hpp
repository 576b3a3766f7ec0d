#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbar/poly.hpp"
#include "mbar/rational.hpp"
#include "mbar/series.hpp"

namespace mbar {

enum class Provenance { Base, Quadratic, Linear, GenusOperator };
const char* to_string(Provenance p);

struct RefinedChi {
    KPoly poly;      // chi~_{g,n}(kappa)
    int t_exponent;  // 2 - 2g - n
};

struct CoefficientFormulaReport {
    bool agree = true;
    // (g, k) entries where the coefficient formula differs from the operator form.
    std::vector<std::pair<int, int>> mismatches;
};

// Memoized table of chi~_{g,n}(kappa) = chi_{g,n}(1, kappa).
//
// Production route: linear recursion upward in n from the genus base rows
// (0,3), (1,1), (2,0) (quadratic recursion) and (g,0), g >= 3 (operator
// recursion in genus). The quadratic recursion keeps its own memo so the two
// routes never share entries.
//
// Thread-safe: lookups and insertions take a mutex; computation runs outside
// the lock and the first completed insertion for a key wins.
class ChiTable {
public:
    KPoly chi_tilde(int g, int n);
    KPoly chi_tilde_quadratic(int g, int n);
    KPoly chi_tilde_linear(int g, int n);
    KPoly chi_tilde_g0(int g);

    RefinedChi chi_refined(int g, int n);
    // n! chi~_{g,n}(1)
    Rat chi_mbar(int g, int n);
    // a_{g,n}^k; zero outside 0..3g-3+n.
    Rat coeff(int g, int n, int k);

    // Series in u = 1/t whose u^{2g-2+n} coefficient is n! chi~_{g,n}
    // (weighted) or chi~_{g,n} (unweighted), for n <= n_max. The order is
    // 2g-2+n_max.
    TruncSeries<KPoly> chi_point_generating(int g, int n_max, bool weighted);

    // Runs the printed coefficient-level recursion for a_{g,0}^k and
    // compares it with chi_tilde_g0 for 3 <= g <= g_max.
    CoefficientFormulaReport compare_g0_coefficient_formula(int g_max);

    std::optional<Provenance> provenance(int g, int n) const;
    // Snapshot of the production memo, sorted by (g, n).
    std::map<std::pair<int, int>, std::pair<KPoly, Provenance>> snapshot() const;
    // Seeds the production memo (used when loading a cache). Existing
    // entries are kept.
    void insert(int g, int n, const KPoly& p, Provenance prov);

    // One step of the linear recursion:
    // (n+1) chi~_{g,n+1} = (2-2g-n + n kappa + kappa^2 d/dkappa) chi~_{g,n}.
    static KPoly add_point(int g, int n, const KPoly& p);

private:
    using Key = std::pair<int, int>;
    std::optional<KPoly> find(const std::map<Key, std::pair<KPoly, Provenance>>& m, Key k) const;
    KPoly store(std::map<Key, std::pair<KPoly, Provenance>>& m, Key k, KPoly p, Provenance prov);

    mutable std::mutex mutex_;
    std::map<Key, std::pair<KPoly, Provenance>> table_;
    std::map<Key, std::pair<KPoly, Provenance>> quadratic_;
};

// A process-wide table for callers that do not manage their own.
ChiTable& default_table();

}  // namespace mbar
