#include "spinwit/spin.hpp"

#include <cctype>
#include <cstdlib>

namespace spinwit {

std::string to_string(TwiceSpin j) {
    if (j.is_integer()) return std::to_string(j.twice() / 2);
    return std::to_string(j.twice()) + "/2";
}

TwiceSpin parse_spin(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("spin: cannot parse '" + text + "'"); };
    if (text.empty()) fail();
    std::size_t slash = text.find('/');
    std::string head = text.substr(0, slash);
    if (head.empty() || head.size() > 9) fail();
    for (char ch : head)
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    long num = std::strtol(head.c_str(), nullptr, 10);
    if (slash == std::string::npos) return TwiceSpin(static_cast<int>(2 * num));
    if (text.substr(slash) != "/2" || num % 2 == 0) fail();
    return TwiceSpin(static_cast<int>(num));
}

int tp_coeff(TwiceSpin j1, TwiceSpin j2, TwiceSpin j3) {
    int t1 = j1.twice(), t2 = j2.twice(), t3 = j3.twice();
    if ((t1 + t2 + t3) % 2 != 0) return 0;
    int lo = std::abs(t1 - t2);
    return (lo <= t3 && t3 <= t1 + t2) ? 1 : 0;
}

StepRange allowed_steps(TwiceSpin s, TwiceSpin y) {
    int sigma = s.twice();
    int lo = std::max(-sigma, sigma - 2 * y.twice());
    return StepRange{sigma, lo};
}

}  // namespace spinwit
