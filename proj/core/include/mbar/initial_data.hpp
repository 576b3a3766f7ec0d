#pragma once

#include <map>

#include "mbar/rational.hpp"
#include "mbar/series.hpp"

namespace mbar {

// chi(M_{g,n}) = (-1)^n (2g-1) B_{2g} (2g+n-3)! / (2g)!  for 2g-2+n > 0.
Rat chi_open(int g, int n);

// Vertex weight F_{g,n}(t) = chi(M_{g,n}) t^{2-2g-n}.
struct VertexWeight {
    Rat value;
    int t_exponent;
};
VertexWeight vertex_weight(int g, int n);

// Truncation of V_n(z) = sum_g chi(M_{g,n}) z^{2-2g-n}, over g >= 2 (n = 0),
// g >= 1 (n = 1, 2), g >= 0 (n >= 3). Every exponent is negative; a term
// z^e is kept when -e <= order.
class VSeries {
public:
    VSeries(int n, int order);

    int valence() const { return n_; }
    int order() const { return order_; }
    // exponent of z -> coefficient
    const std::map<int, Rat>& terms() const { return terms_; }
    Rat coeff(int z_exponent) const;
    // The term of highest z-exponent, as (exponent, coefficient).
    std::pair<int, Rat> leading() const;
    // Termwise d/dz. The result keeps terms with -e <= order + 1.
    std::map<int, Rat> derivative() const;
    // The same data as a series in w = 1/z, truncated at w^order.
    TruncSeries<Rat> to_w_series() const;

private:
    int n_;
    int order_;
    std::map<int, Rat> terms_;
};

VSeries v_series(int n, int order);

}  // namespace mbar
