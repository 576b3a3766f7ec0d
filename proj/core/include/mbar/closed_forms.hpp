#pragma once

#include <map>
#include <string>
#include <vector>

#include "mbar/chi_recursion.hpp"
#include "mbar/poly.hpp"
#include "mbar/rational.hpp"
#include "mbar/series.hpp"

namespace mbar {

// e_l(values); e_0 = 1, and e_l = 0 for l < 0 or l > values.size().
Rat elem_sym(int l, const std::vector<Rat>& values);
// The integer range lo, lo+1, ..., hi as Rats (empty when hi < lo).
std::vector<Rat> int_range(long lo, long hi);

// sum_m e^{m(s+1)} poly_m(s). Under x = e^{s+1} - 1 each block becomes
// (1+x)^m poly_m(log(1+x) - 1).
class ExpPolyInS {
public:
    ExpPolyInS() = default;
    explicit ExpPolyInS(std::map<int, SPoly> blocks);

    const std::map<int, SPoly>& blocks() const { return blocks_; }
    SPoly block(int m) const;
    void add(int m, const SPoly& p);

    ExpPolyInS& operator+=(const ExpPolyInS& o);
    friend ExpPolyInS operator+(ExpPolyInS a, const ExpPolyInS& b) { return a += b; }
    friend ExpPolyInS operator*(ExpPolyInS a, const Rat& c);
    friend bool operator==(const ExpPolyInS& a, const ExpPolyInS& b) { return a.blocks_ == b.blocks_; }

    // d/ds
    ExpPolyInS derivative() const;
    // Multiply by e^{d(s+1)}.
    ExpPolyInS shifted(int d) const;
    // Value at s = -1, where every exponential is 1.
    Rat at_minus_one() const;
    TruncSeries<Rat> to_x_series(std::size_t order) const;

private:
    std::map<int, SPoly> blocks_;
};

// Exact solution of y' + c y = rhs with y(-1) = 0.
ExpPolyInS solve_s_ode(const ExpPolyInS& rhs, long c);
// One step of the add-an-edge recursion in s:
// y' + c y = (1 - e^{-(s+1)}) prev' + (k - 1) prev, y(-1) = 0.
ExpPolyInS s_ode_step(const ExpPolyInS& prev, int k, long c);

// Genus 0: A_k(x) = sum_n a_{0,n}^k x^n.
ExpPolyInS a_k_closed_form(int k);
TruncSeries<Rat> a_k_series(int k, std::size_t order);
// Reading with the exponential weights e^{+m(s+1)} in place of
// e^{-m(s+1)}; kept so the audit can report it.
ExpPolyInS a_k_closed_form_flipped(int k);
// A_k from the x-space ODE (1+x) A_k' - 2 A_k = x A_{k-1}' + (k-1) A_{k-1}.
TruncSeries<Rat> a_k_series_ode(int k, std::size_t order);

// Genus 1: B_k = -C_k / 12 + D_k / 2.
enum class BlockSource { Printed, Corrected };
ExpPolyInS c_k_closed_form(int k, BlockSource src = BlockSource::Corrected);
ExpPolyInS d_k_closed_form(int k, BlockSource src = BlockSource::Corrected);
TruncSeries<Rat> b_k_series(int k, std::size_t order);

// Genus g >= 2: A_{g,k}^p, with sum_p a_{g,0}^p [A_{g,k}^p]_n = a_{g,n}^k.
// Variant 2 selects the second printed form of the p >= 3 blocks.
ExpPolyInS a_gkp_closed_form(int g, int k, int p, int variant = 1);
TruncSeries<Rat> a_gkp_series(int g, int k, int p, std::size_t order);
// Exact ODE solution for the same family, started from (1+x)^{2-2g} at k = p.
ExpPolyInS a_gkp_exact(int g, int k, int p);

// chi~_{g,n}(kappa) read off the closed forms: A_k for g = 0, B_k for
// g = 1, and for g >= 2 the A_{g,k}^p assembly seeded with the table's
// chi~_{g,0}.
KPoly chi_tilde_closed_form(int g, int n, ChiTable& table);

// A printed block that disagrees with the exact ODE solution:
// the coefficient of e^{exponent (s+1)} in family at index k.
struct BlockMismatch {
    std::string family;
    int k;
    int exponent;
    bool operator==(const BlockMismatch&) const = default;
};
std::vector<BlockMismatch> audit_genus0_blocks(int k_max);
std::vector<BlockMismatch> audit_genus1_blocks(int k_max);
std::vector<BlockMismatch> audit_gkp_blocks(int g, int k_max);

// Shor polynomials: Q_{n,k} = (x+n-1) Q_{n-1,k} + (n+k-2) Q_{n-1,k-1},
// Q_{1,0} = 1, Q_{n,-1} = 0, Q_{1,k} = 0 for k >= 1.
XPoly shor_q(int n, int k);
// psi_k(r, x) := Q_{r+1,k-1}(x - r - 1), 1 <= k <= r + 1.
Rat ramanujan_psi(int k, int r, const Rat& x);

}  // namespace mbar
