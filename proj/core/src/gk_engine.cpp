#include "mbar/gk_engine.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include <json.hpp>

#include "mbar/errors.hpp"
#include "mbar/initial_data.hpp"

namespace mbar {

Partition::Partition(std::vector<int> p, int v0) : parts(std::move(p)), v0_power(v0) {
    for (int x : parts) {
        if (x <= 0) throw DomainError("partition parts must be positive");
    }
    if (v0 < 0) throw DomainError("V_0 power must be nonnegative");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::weight() const {
    int w = 0;
    for (int x : parts) w += x;
    return w;
}

int Partition::multiplicity(int j) const {
    if (j == 0) return v0_power;
    return static_cast<int>(std::count(parts.begin(), parts.end(), j));
}

Partition Partition::times(int j, int power) const {
    Partition r = *this;
    if (j == 0) {
        r.v0_power += power;
        return r;
    }
    for (int i = 0; i < power; ++i) r.parts.push_back(j);
    std::sort(r.parts.begin(), r.parts.end(), std::greater<>());
    return r;
}

Partition Partition::without(int j) const {
    Partition r = *this;
    if (j == 0) {
        if (r.v0_power == 0) throw DomainError("no V_0 factor to remove");
        --r.v0_power;
        return r;
    }
    auto it = std::find(r.parts.begin(), r.parts.end(), j);
    if (it == r.parts.end()) throw DomainError("no V_" + std::to_string(j) + " factor to remove");
    r.parts.erase(it);
    return r;
}

std::vector<Partition> partitions_of(int weight) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (weight >= 0) rec(weight, weight);
    return out;
}

VPoly::VPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Partition{}, c);
}

VPoly VPoly::monomial(const Partition& p, const Rat& c) {
    VPoly r;
    r.add(p, c);
    return r;
}

VPoly VPoly::var(int j) { return monomial(Partition{}.times(j)); }

Rat VPoly::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void VPoly::add(const Partition& p, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

VPoly& VPoly::operator+=(const VPoly& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

VPoly& VPoly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
    VPoly r;
    for (const auto& [pa, ca] : a.terms_) {
        for (const auto& [pb, cb] : b.terms_) {
            Partition p = pa;
            p.v0_power += pb.v0_power;
            p.parts.insert(p.parts.end(), pb.parts.begin(), pb.parts.end());
            std::sort(p.parts.begin(), p.parts.end(), std::greater<>());
            r.add(p, ca * cb);
        }
    }
    return r;
}

bool VPoly::is_homogeneous(int weight) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.weight() == weight; });
}

bool VPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
}

std::string VPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Print by decreasing number of V_1 factors, then by partition.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, c] = *it;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Rat mag = abs(c);
        std::string mono;
        auto factor = [&mono](int j, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += " ";
            mono += "V" + std::to_string(j);
            if (e > 1) mono += "^" + std::to_string(e);
        };
        factor(0, p.v0_power);
        for (std::size_t i = 0; i < p.parts.size();) {
            std::size_t j = i;
            while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
            factor(p.parts[i], static_cast<int>(j - i));
            i = j;
        }
        if (mono.empty()) out += mbar::to_string(mag);
        else if (mag == 1) out += mono;
        else out += mbar::to_string(mag) + " " + mono;
    }
    return out;
}

std::string VPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, c] : terms_) {
        arr.push_back({{"partition", p.parts}, {"v0_power", p.v0_power}, {"coeff", mbar::to_string(c)}});
    }
    return arr.dump();
}

namespace {

// Distinct variables V_j with their exponents, V_0 first.
std::vector<std::pair<int, int>> factors(const Partition& p) {
    std::vector<std::pair<int, int>> f;
    if (p.v0_power > 0) f.emplace_back(0, p.v0_power);
    for (std::size_t i = 0; i < p.parts.size();) {
        std::size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        f.emplace_back(p.parts[i], static_cast<int>(j - i));
        i = j;
    }
    return f;
}

}  // namespace

VPoly dtilde(const VPoly& p) {
    VPoly r;
    for (const auto& [mono, c] : p.terms()) {
        for (auto [j, e] : factors(mono)) r.add(mono.without(j).times(j + 1), c * Rat(e));
    }
    return r;
}

VPoly virasoro_e(const VPoly& p) {
    VPoly r;
    for (const auto& [mono, c] : p.terms()) {
        for (auto [j, e] : factors(mono)) {
            const Partition base = mono.without(j);
            const Rat ce = c * Rat(e);
            // m from 1 to j+1 with k = j - m + 1: C(j, k) V_m V_{k+1}
            for (int m = 1; m <= j + 1; ++m) {
                const int k = j - m + 1;
                r.add(base.times(m).times(k + 1), ce * binomial(j, k));
            }
            // V_{j+2} d/dV_j
            r.add(base.times(j + 2), ce);
        }
    }
    return r;
}

namespace {

std::mutex gk_mutex;
std::vector<VPoly> gk_cache{VPoly::var(0)};

}  // namespace

VPoly gk_dtilde(int k) {
    if (k < 0) throw DomainError("gk_dtilde: k must be nonnegative");
    std::lock_guard lock(gk_mutex);
    while (static_cast<int>(gk_cache.size()) <= k) {
        const int kk = static_cast<int>(gk_cache.size());
        VPoly s = dtilde(dtilde(gk_cache[kk - 1]));
        for (int r = 1; r <= kk; ++r) s += dtilde(gk_cache[r - 1]) * dtilde(gk_cache[kk - r]);
        gk_cache.push_back(s * Rat(1, 2 * kk));
    }
    return gk_cache[k];
}

VPoly gk_virasoro(int k) {
    if (k < 0) throw DomainError("gk_virasoro: k must be nonnegative");
    VPoly p = VPoly::var(0);
    for (int l = 1; l <= k; ++l) p = virasoro_e(p) * Rat(1, 2 * l);
    return p;
}

VPoly gk_wick(int k) {
    if (k < 0) throw DomainError("gk_wick: k must be nonnegative");
    if (k == 0) return VPoly::var(0);
    // Z = sum_j Lambda^j sum_{|mu| = 2j} (2j-1)!! prod 1/(m_i! (i!)^{m_i}) V_mu,
    // Lambda = lambda^2; the e^{V_0} factor contributes V_0 to the log only.
    TruncSeries<VPoly> z(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        const Rat moment(double_factorial_odd(2 * j - 1));
        VPoly level;
        for (const auto& mu : partitions_of(2 * j)) {
            Rat c = moment;
            for (auto [part, mult] : factors(mu)) {
                c /= Rat(factorial(static_cast<unsigned>(mult)));
                for (int i = 0; i < mult; ++i) c /= Rat(factorial(static_cast<unsigned>(part)));
            }
            level.add(mu, c);
        }
        z[static_cast<std::size_t>(j)] = level;
    }
    return series_log1p(z)[static_cast<std::size_t>(k)];
}

TruncSeries<Rat> vpoly_to_zseries(const VPoly& p, int order) {
    if (order < 0) throw DomainError("vpoly_to_zseries: order must be nonnegative");
    const std::size_t w_order = static_cast<std::size_t>(2 * order);
    std::map<int, TruncSeries<Rat>> base;
    std::map<std::pair<int, int>, TruncSeries<Rat>> powers;
    auto power = [&](int j, int e) -> const TruncSeries<Rat>& {
        auto key = std::make_pair(j, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        auto bit = base.find(j);
        if (bit == base.end()) bit = base.emplace(j, v_series(j, static_cast<int>(w_order)).to_w_series()).first;
        TruncSeries<Rat> r = TruncSeries<Rat>::constant(w_order, 1);
        for (int i = 0; i < e; ++i) r = r * bit->second;
        return powers.emplace(key, std::move(r)).first->second;
    };
    TruncSeries<Rat> w(w_order);
    for (const auto& [mono, c] : p.terms()) {
        TruncSeries<Rat> m = TruncSeries<Rat>::constant(w_order, c);
        for (auto [j, e] : factors(mono)) m = m * power(j, e);
        w += m;
    }
    TruncSeries<Rat> u(static_cast<std::size_t>(order));
    for (int j = 0; j <= order; ++j) u[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(2 * j)];
    return u;
}

namespace {

// theta = z d/dz acts on u^j = z^{-2j} as multiplication by -2j.
TruncSeries<Rat> theta(const TruncSeries<Rat>& s) {
    TruncSeries<Rat> r(s.order());
    for (std::size_t j = 0; j <= s.order(); ++j) r[j] = s[j] * Rat(-2 * static_cast<long>(j));
    return r;
}

}  // namespace

TruncSeries<Rat> gk_series_recursion(int k, int order) {
    if (k < 0 || order < 0) throw DomainError("gk_series_recursion: need k >= 0 and order >= 0");
    const std::size_t n = static_cast<std::size_t>(order);
    const Rat seeds[] = {make_rat(-1, 240), make_rat(13, 288), make_rat(-1, 6), make_rat(5, 24)};
    std::vector<TruncSeries<Rat>> g;
    {
        TruncSeries<Rat> g0(n);
        for (std::size_t j = 1; j <= n; ++j) {
            const unsigned two_g = static_cast<unsigned>(2 * (j + 1));
            g0[j] = bernoulli(two_g) / Rat(static_cast<long>(two_g * (two_g - 2)));
        }
        g.push_back(g0);
    }
    auto at = [&](int i) { return i < 0 ? TruncSeries<Rat>(n) : g[static_cast<std::size_t>(i)]; };
    for (int kk = 1; kk <= k; ++kk) {
        TruncSeries<Rat> br = theta(theta(at(kk - 1))) - theta(at(kk - 1)) * make_rat(7, 6);
        br += theta(at(kk - 2)) * Rat(2 * kk - 2) + at(kk - 2) * (make_rat(-7 * kk, 6) + make_rat(7, 3));
        br += at(kk - 3) * Rat(kk * kk - 3 * kk);
        for (int l = 0; l <= kk - 1; ++l) br += theta(at(l)) * theta(at(kk - 1 - l));
        for (int l = 0; l <= kk - 2; ++l) br += theta(at(l)) * at(kk - 2 - l) * Rat(2 * (kk - 2 - l));
        for (int l = 0; l <= kk - 3; ++l) br += at(l) * at(kk - 3 - l) * Rat(l * (kk - 3 - l));
        TruncSeries<Rat> next = br.shift_up() * Rat(1, 2 * kk);
        if (kk < 4 && n >= 1) next[1] += seeds[kk];
        g.push_back(next);
    }
    return g[static_cast<std::size_t>(k)];
}

Rat chi_mbar_g0_via_gk(int g) {
    if (g < 2) throw DomainError("chi_mbar_g0_via_gk requires g >= 2");
    Rat total = 0;
    for (int k = 0; k <= 3 * g - 3; ++k) total += vpoly_to_zseries(gk_dtilde(k), g - 1)[static_cast<std::size_t>(g - 1)];
    return total;
}

VPoly gk(int k, GkMethod method) {
    switch (method) {
        case GkMethod::Virasoro:
            return gk_virasoro(k);
        case GkMethod::Wick:
            return gk_wick(k);
        default:
            return gk_dtilde(k);
    }
}

KPoly chi_tilde_g0_via_gk(int g, GkMethod method) {
    if (g < 2) throw DomainError("chi_tilde_g0_via_gk requires g >= 2");
    std::vector<Rat> cs;
    for (int k = 0; k <= 3 * g - 3; ++k)
        cs.push_back(vpoly_to_zseries(gk(k, method), g - 1)[static_cast<std::size_t>(g - 1)]);
    return KPoly(std::move(cs));
}

TruncSeries<VPoly> operator_solution(int max_k) {
    if (max_k < 0) throw DomainError("operator_solution: max_k must be nonnegative");
    TruncSeries<VPoly> s(static_cast<std::size_t>(max_k));
    const VPoly v1 = VPoly::var(1);
    VPoly p = VPoly(Rat(1));
    for (int j = 0; j <= max_k; ++j) {
        if (j > 0) {
            for (int twice = 0; twice < 2; ++twice) p = v1 * p + dtilde(p);
        }
        BigInt denom = factorial(static_cast<unsigned>(j));
        denom <<= static_cast<unsigned>(j);
        const Rat scale = Rat(1) / Rat(denom);
        s[static_cast<std::size_t>(j)] = p * scale;
    }
    return s;
}

bool operator_identity_holds(int max_k) {
    TruncSeries<VPoly> logz(static_cast<std::size_t>(max_k));
    for (int k = 1; k <= max_k; ++k) logz[static_cast<std::size_t>(k)] = gk_dtilde(k);
    return series_exp(logz) == operator_solution(max_k);
}

}  // namespace mbar
