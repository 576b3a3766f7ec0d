#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mbar/rational.hpp"
#include "mbar/series.hpp"

namespace mbar {

// Monomial V_0^{v0_power} * prod V_{parts[i]}; parts are positive and kept
// nonincreasing.
struct Partition {
    std::vector<int> parts;
    int v0_power = 0;

    Partition() = default;
    Partition(std::vector<int> p, int v0 = 0);

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    // Exponent of V_j (j = 0 reads v0_power).
    int multiplicity(int j) const;
    Partition times(int j, int power = 1) const;
    // Removes one factor V_j; the factor must be present.
    Partition without(int j) const;

    auto operator<=>(const Partition&) const = default;
};

std::vector<Partition> partitions_of(int weight);

// Sparse polynomial in V_0, V_1, V_2, ... with Rat coefficients. Zero
// coefficients are never stored.
class VPoly {
public:
    VPoly() = default;
    VPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
    VPoly(long c) : VPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    static VPoly monomial(const Partition& p, const Rat& c = 1);
    // V_j as a polynomial; j = 0 is the V_0 symbol.
    static VPoly var(int j);

    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Partition& p) const;
    void add(const Partition& p, const Rat& c);

    VPoly& operator+=(const VPoly& o);
    VPoly& operator-=(const VPoly& o);
    VPoly& operator*=(const Rat& s);
    friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
    friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
    friend VPoly operator*(VPoly a, const Rat& s) { return a *= s; }
    friend VPoly operator*(const Rat& s, VPoly a) { return a *= s; }
    friend VPoly operator*(const VPoly& a, const VPoly& b);
    VPoly& operator*=(const VPoly& o) { return *this = *this * o; }
    friend bool operator==(const VPoly& a, const VPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const VPoly& a, const VPoly& b) { return !(a == b); }

    // True when every monomial has the given weight (deg V_l = l, deg V_0 = 0).
    bool is_homogeneous(int weight) const;
    bool has_integer_coefficients() const;

    // "1/2 V1^2 + 1/2 V2"
    std::string to_string() const;
    // [{"partition":[...],"v0_power":m,"coeff":"p/q"},...]
    std::string to_json() const;

private:
    std::map<Partition, Rat> terms_;
};

inline bool ring_is_zero(const VPoly& p) { return p.is_zero(); }

// The derivation with V_l -> V_{l+1} (l >= 1) and V_0 -> V_1.
VPoly dtilde(const VPoly& p);
// E = sum_{m>=1} V_m (sum_k C(m+k-1,k) V_{k+1} d/dV_{m+k-1} + d/dV_{m-2}),
// with d/dV_{-1} = 0 and d/dV_0 acting on the V_0 symbol.
VPoly virasoro_e(const VPoly& p);

// G_k through k G_k = 1/2 (dtilde^2 G_{k-1} + sum_r dtilde G_{r-1} dtilde G_{k-r}).
VPoly gk_dtilde(int k);
// G_k = E^k V_0 / (2^k k!).
VPoly gk_virasoro(int k);
// G_k as the lambda^{2k} coefficient of the log of the Gaussian-moment
// expansion of exp(sum_{n>=0} V_n x^n / n!).
VPoly gk_wick(int k);

// Substitutes the truncated V_n(z) series. The result is a series in
// u = z^{-2}: coefficient j is the coefficient of z^{-2j}, j <= order.
TruncSeries<Rat> vpoly_to_zseries(const VPoly& p, int order);
// G_k(z) in u = z^{-2} directly from the theta = z d/dz recursion.
TruncSeries<Rat> gk_series_recursion(int k, int order);

// chi(Mbar_{g,0}) = sum_k [z^{2-2g}] G_k(z), g >= 2.
Rat chi_mbar_g0_via_gk(int g);

enum class GkMethod { Dtilde, Virasoro, Wick };
VPoly gk(int k, GkMethod method);
// chi~_{g,0}(kappa) with a_{g,0}^k = [z^{2-2g}] G_k(z), g >= 2.
KPoly chi_tilde_g0_via_gk(int g, GkMethod method = GkMethod::Dtilde);

// Coefficients of lambda^{2j}, j <= K, of exp(lambda^2 dtilde^2 / 2) e^{V_0}
// with the factor e^{V_0} removed: sum_j (lambda^{2j} / (2^j j!)) D^{2j}(1)
// where D(P) = V_1 P + dtilde P.
TruncSeries<VPoly> operator_solution(int max_k);
// exp(sum_{k=1}^{K} lambda^{2k} G_k), compared against operator_solution.
bool operator_identity_holds(int max_k);

}  // namespace mbar
