#include "exactalg/mpoly.hpp"

namespace exactalg {

MPoly<ZZ> exact_div(const MPoly<ZZ>& f, const ZZ& k) {
    require(k != 0, errkind::not_divisible, "division by zero");
    std::map<Mono, ZZ> acc;
    for (const auto& [m, c] : f.terms()) {
        require(divides(k, c), errkind::not_divisible,
                "coefficient " + c.get_str() + " not divisible by " +
                    k.get_str());
        acc.emplace(m, divexact(c, k));
    }
    return MPoly<ZZ>::from_map(f.arity(), f.order(), ZZ(0), acc);
}

}  // namespace exactalg
