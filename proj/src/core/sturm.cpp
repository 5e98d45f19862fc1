#include "solvable/sturm.hpp"

#include "solvable/errors.hpp"

#include <vector>

namespace solvable {

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<Poly>& chain, const std::optional<Rational>& at, bool plus_inf) {
    std::vector<int> s;
    for (const auto& q : chain) {
        if (at) {
            s.push_back(sgn(q(*at)));
        } else {
            int lc = sgn(q.leading());
            s.push_back(plus_inf || q.degree() % 2 == 0 ? lc : -lc);
        }
    }
    return variations(s);
}

}  // namespace

int real_root_count(const Poly& p, const Interval& iv) {
    if (p.is_zero()) throw UsageError("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    Poly q = p.square_free();
    auto chain = sturm_chain(q);
    int count = variations_at(chain, iv.lo, false) - variations_at(chain, iv.hi, true);
    if (iv.hi && q(*iv.hi) == 0) --count;
    return count;
}

}  // namespace solvable
