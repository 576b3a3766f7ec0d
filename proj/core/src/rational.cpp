#include "mbar/rational.hpp"

#include <mutex>
#include <vector>

#include "mbar/errors.hpp"

namespace mbar {

Rat make_rat(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n')) {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt double_factorial_odd(int two_m_minus_one) {
    BigInt r = 1;
    for (int j = two_m_minus_one; j > 1; j -= 2) r *= j;
    return r;
}

Rat binomial(long top, long k) {
    if (k < 0) return 0;
    Rat r = 1;
    for (long i = 0; i < k; ++i) {
        r *= Rat(top - i);
        r /= Rat(i + 1);
    }
    return r;
}

Rat bernoulli(unsigned m) {
    // The table only grows; entries are never modified after insertion.
    static std::mutex mutex;
    static std::vector<Rat> table{Rat(1)};
    std::lock_guard lock(mutex);
    while (table.size() <= m) {
        const unsigned n = static_cast<unsigned>(table.size());
        Rat acc = 0;
        BigInt c = 1;  // C(n+1, j)
        for (unsigned j = 0; j < n; ++j) {
            acc += Rat(c) * table[j];
            c = c * (n + 1 - j) / (j + 1);
        }
        table.push_back(-acc / Rat(n + 1));
    }
    return table[m];
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace mbar
