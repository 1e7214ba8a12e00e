#include "stacks/closedforms.hpp"

#include <stdexcept>

namespace charstack {

RatFunc a_r_closed_form(int r, int k) {
    if (r < 0 || r > k) throw std::invalid_argument("a_r_closed_form: need 0 <= r <= k");
    const std::vector<std::string> ZW{"z", "w"};
    RatFunc one = RatFunc::one(ZW);
    RatFunc z2 = RatFunc::variable(ZW, "z", 2), w2 = RatFunc::variable(ZW, "w", 2);
    RatFunc z4 = RatFunc::variable(ZW, "z", 4), w4 = RatFunc::variable(ZW, "w", 4);
    RatFunc first = (w2 + one).pow(k - r) * (one - w2).pow(r) / ((z2 - w2) * (one - w4));
    RatFunc second = (one - z2).pow(r) * (z2 + one).pow(k - r) / ((z4 - one) * (z2 - w2));
    if (r > 0) return first + second;
    if (k < 1) throw std::invalid_argument("a_r_closed_form: r = 0 needs k >= 1");
    RatFunc third = RatFunc::constant(ZW, Rat(Int(1) << (k - 1))) / ((z2 - one) * (one - w2));
    return first + second - third;
}

long c_mml(int m1, int m2, int l) {
    if (m1 < 0 || m2 < 0 || l < 0 || l > m1 + m2)
        throw std::invalid_argument("c_mml: need 0 <= l <= m1+m2");
    auto binom = [](int n, int k) -> long {
        if (k < 0 || k > n) return 0;
        long b = 1;
        for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
        return b;
    };
    long total = 0;
    for (int j = 0; j <= l; ++j) {
        long term = binom(m1, j) * binom(m2, l - j);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace charstack
